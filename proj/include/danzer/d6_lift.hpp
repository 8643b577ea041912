#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "danzer/d6_lattice.hpp"

namespace danzer {

/// l_i -> sign_i * l_{image_i}, 0-based indices.
class SignedPermutation {
 public:
  SignedPermutation();  // identity
  /// Throws std::invalid_argument unless images form a bijection and signs are +-1.
  SignedPermutation(std::array<int, 6> image, std::array<int, 6> sign);

  int image(int i) const { return image_[i]; }
  int sign(int i) const { return sign_[i]; }

  D6Vector apply(const D6Vector& v) const;
  Eigen::Matrix<Golden, 6, 6> matrix() const;
  SignedPermutation inverse() const;
  /// compose(p, q) applies q first.
  friend SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  /// "1->-5 2->2 ..." (1-based).
  std::string to_string() const;

 private:
  std::array<int, 6> image_;
  std::array<int, 6> sign_;
};

/// How a printed signed cycle such as (1 -3 6)(2 4 -5) is read.
enum class BarRule {
  SignedElement,  // -x is an element of its own: x_k -> x_{k+1} as signed indices
  OnSource,       // bar flips the sign of the step leaving the barred index
  OnImage,        // bar flips the sign of the step entering the barred index
};
enum class CycleDirection {
  Basis,     // the cycle is the basis map l_i -> +-l_j
  Inverse,   // the cycle is the inverse of the basis map (permutes components)
};
struct CycleConvention {
  BarRule bar = BarRule::SignedElement;
  CycleDirection direction = CycleDirection::Inverse;
  friend bool operator==(const CycleConvention&, const CycleConvention&) = default;
};
std::string to_string(const CycleConvention& c);
std::array<CycleConvention, 6> all_cycle_conventions();

/// Parses cycles written with '-' for a bar, e.g. "(1 -3 6)(2 4 -5)"; commas
/// between cycles are allowed. Returns the basis map. Throws
/// std::invalid_argument on malformed or inconsistent notation.
SignedPermutation parse_cycles(std::string_view text, const CycleConvention& conv);

/// Signed permutation P with g * par_row(i) = s * par_row(pi(i)), if one exists.
std::optional<SignedPermutation> signed_permutation_of(const Mat3& g);

/// Coordinates linear in (m1, m2): coord_i = coef[i][0] m1 + coef[i][1] m2.
struct LiftTemplate {
  std::array<std::array<Rational, 2>, 6> coef;
  D6Vector at(const PairM& p) const;
  std::string to_string() const;
};

struct LiftRotation {
  std::string printed;   // as typeset
  std::string resolved;  // the form that commutes with the projection
  Mat3 g;
  bool corrected() const { return printed != resolved; }
};

struct LiftTranslation {
  LiftTemplate lattice;
  Vec3 t3;  // the E_par translation divided by c
};

struct LiftEntry {
  std::string label;  // e.g. "tauB.g_4K"
  std::optional<LiftRotation> rotation;
  std::optional<LiftTranslation> translation;
};

/// All rotation and translation pairs of the four constructions.
const std::vector<LiftEntry>& lift_table();

/// The convention under which every resolved rotation commutes with the
/// projection; nullopt if none or more than one does.
std::optional<CycleConvention> discover_convention();
/// Number of resolved rotation entries that commute under conv.
int commuting_entries(const CycleConvention& conv, bool use_printed = false);

/// project(P l_i)_par = g project(l_i)_par for all i, with P read from the
/// resolved cycles under conv.
bool verify_lift_rotation(const LiftEntry& entry, const CycleConvention& conv);
/// The same on E_perp with the conjugated matrix.
bool verify_lift_rotation_perp(const LiftEntry& entry, const CycleConvention& conv);
/// project(template(p))_par = c(p) t3 exactly (unnormalised: 2 g(p) t3).
bool verify_lift_translation(const LiftEntry& entry, const PairM& p);

}  // namespace danzer
