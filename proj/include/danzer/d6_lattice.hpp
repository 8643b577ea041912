#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "danzer/geometry.hpp"

namespace danzer {

/// Vector of R^6 with rational coordinates m_i in the orthonormal l-basis.
class D6Vector {
 public:
  D6Vector() = default;
  explicit D6Vector(std::array<Rational, 6> m);
  static D6Vector unit(int i);  // l_{i+1}

  const Rational& operator[](int i) const { return m_[i]; }
  Rational& operator[](int i) { return m_[i]; }
  const std::array<Rational, 6>& coords() const { return m_; }

  /// Integer coordinates with even sum.
  bool in_root_lattice() const;
  bool is_integral() const;
  Eigen::Matrix<Golden, 6, 1> as_golden() const;

  D6Vector& operator+=(const D6Vector& o);
  D6Vector& operator-=(const D6Vector& o);
  D6Vector& operator*=(const Rational& k);
  friend D6Vector operator+(D6Vector x, const D6Vector& y) { return x += y; }
  friend D6Vector operator-(D6Vector x, const D6Vector& y) { return x -= y; }
  friend D6Vector operator*(const Rational& k, D6Vector x) { return x *= k; }
  friend bool operator==(const D6Vector& x, const D6Vector& y) { return x.m_ == y.m_; }

  std::string to_string() const;

 private:
  std::array<Rational, 6> m_{};
};

/// Sum of c_i * l_{idx_i} (1-based indices), e.g. l({1, 2, 3, 4, 5, -6}) for
/// l1 + l2 + l3 + l4 + l5 - l6. A negative index subtracts.
D6Vector lsum(std::initializer_list<int> signed_indices);

struct D6Basis {
  std::array<D6Vector, 6> alpha;  // simple roots
  std::array<D6Vector, 6> omega;  // fundamental weights
};

/// alpha_i = l_i - l_{i+1} (i < 6), alpha_6 = l5 + l6, and the dual weights.
D6Basis simple_roots_and_weights();

/// Gram matrix of the simple roots (the D6 Cartan matrix).
Eigen::Matrix<Golden, 6, 6> cartan_matrix();

/// Rows l_i of the orthonormal basis in E_par (+) E_perp, without the common
/// factor 1/sqrt(2(2+t)); that factor is carried as scale_squared().
class ProjectionBasis {
 public:
  ProjectionBasis();
  const Eigen::Matrix<Golden, 6, 6>& raw() const { return rows_; }
  /// The squared normalisation 1/(2(2+t)).
  Golden scale_squared() const;
  /// B B^T = I once the normalisation is applied.
  bool rows_orthonormal() const;
  Vec3 par_row(int i) const;
  Vec3 perp_row(int i) const;

 private:
  Eigen::Matrix<Golden, 6, 6> rows_;
};

const ProjectionBasis& projection_basis();

/// Unnormalised projections sum_i m_i * row_i. The true projected vector is
/// this divided by sqrt(2(2+t)).
struct Projection {
  Vec3 par;
  Vec3 perp;
};
Projection project(const D6Vector& v);
Projection project(const Eigen::Matrix<Golden, 6, 1>& v);

/// Coefficients of v on the weights v1, v2, v3 (E_par) and their E_perp
/// partners, up to the common factor 1/sqrt(2+t).
struct Decomposition {
  std::array<Golden, 3> par;
  std::array<Golden, 3> perp;
};
Decomposition decompose(const D6Vector& v);
/// Inverse change of basis; exact.
D6Vector reassemble(const Decomposition& d);

struct EmbeddingReport {
  bool roots_match_generators = false;  // projected beta_i reflect like R_i
  bool roots_in_par = false;            // beta_i have zero E_perp part
  bool weights_match = false;           // projected v_i equal the printed weights
  Eigen::Matrix<Golden, 3, 3> gram_par;
  Eigen::Matrix<Golden, 3, 3> gram_perp;
  bool gram_par_ok = false;
  bool gram_perp_ok = false;
  bool ok() const {
    return roots_match_generators && roots_in_par && weights_match && gram_par_ok && gram_perp_ok;
  }
};
/// Builds the H3 roots and weights from those of D6 and checks them against
/// the generator matrices and the block-diagonal Gram matrix.
EmbeddingReport h3_embedding_check();

/// A pair of integers (m1, m2) with m1 + m2 even.
class PairM {
 public:
  /// Throws std::invalid_argument on odd m1 + m2.
  PairM(long m1, long m2);
  long m1() const { return m1_; }
  long m2() const { return m2_; }
  bool both_even() const { return m1_ % 2 == 0; }
  bool is_zero() const { return m1_ == 0 && m2_ == 0; }
  friend bool operator==(const PairM&, const PairM&) = default;

 private:
  long m1_;
  long m2_;
};

/// c(m1, m2) = sqrt(2/(2+t)) * (m1 - m2 + 2 m2 t), held as its golden part
/// and the squared prefactor.
struct ScaleFactor {
  Golden golden_part;
  Golden prefactor_squared;
  Golden squared() const { return prefactor_squared * golden_part * golden_part; }
};
ScaleFactor scale_factor(const PairM& p);

enum class PolyhedronRow {
  Icosahedron,
  Dodecahedron,
  Icosidodecahedron,
  TruncatedIcosahedron,
  SmallRhombicosidodecahedron,
  TruncatedDodecahedron,
  GreatRhombicosidodecahedron,
};

inline constexpr std::array<PolyhedronRow, 7> kAllRows = {
    PolyhedronRow::Icosahedron,          PolyhedronRow::Dodecahedron,
    PolyhedronRow::Icosidodecahedron,    PolyhedronRow::TruncatedIcosahedron,
    PolyhedronRow::SmallRhombicosidodecahedron, PolyhedronRow::TruncatedDodecahedron,
    PolyhedronRow::GreatRhombicosidodecahedron};

std::string_view row_name(PolyhedronRow row);
/// Throws std::invalid_argument for unknown names.
PolyhedronRow parse_row(std::string_view name);
/// Seed vertex divided by c, e.g. (1, 3t, 0)/2 for the truncated icosahedron.
Vec3 row_seed(PolyhedronRow row);
std::size_t row_vertex_count(PolyhedronRow row);

/// Both printed forms of a row's D6 vector: explicit l-combination and
/// weight combination (m1 - m2) w + 2 m2 w'.
struct PairVector {
  D6Vector l_form;
  D6Vector omega_form;
};
PairVector pair_vector(PolyhedronRow row, const PairM& p);

/// Images D0..D3 of the K tile vertices for a pair (l-forms).
std::array<D6Vector, 4> k_vertex_images(const PairM& p);

/// Projection divided by c: par / (2 * golden_part). Throws for (0, 0).
Vec3 hatted(const D6Vector& v, const PairM& p);

/// (m1, m2) -> (m1 F_{n-1} + (m1 + 5 m2) F_n / 2, m2 F_{n-1} + (m1 + m2) F_n / 2),
/// so that c(result) = t^n c(p).
PairM inflate_pair(const PairM& p, long n);

}  // namespace danzer
