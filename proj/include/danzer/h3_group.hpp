#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "danzer/geometry.hpp"

namespace danzer {

/// The reflections R1, R2, R3 generating the icosahedral group in E_par.
std::array<Mat3, 3> h3_generators();

struct GroupElement {
  Mat3 mat;
  /// Generator indices (0-based) whose product, left to right, gives mat.
  /// Recorded in BFS order, not guaranteed geodesic.
  std::vector<int> word;
};

/// The full icosahedral Coxeter group of order 120, closed by BFS from the
/// generators. Immutable once built.
class H3Group {
 public:
  H3Group();

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<Mat3> rotations() const;
  std::optional<std::size_t> index_of(const Mat3& m) const;
  bool contains(const Mat3& m) const { return index_of(m).has_value(); }

  /// Deduplicated, lexicographically sorted orbit of p.
  std::vector<Vec3> orbit(const Vec3& p) const;
  /// Elements fixing p.
  std::vector<Mat3> stabilizer(const Vec3& p) const;

 private:
  std::vector<GroupElement> elements_;
  std::vector<std::size_t> order_;  // indices sorted by matrix, for lookup
};

/// Shared instance; construction is thread-safe.
const H3Group& h3();

struct RelationCheck {
  std::string name;
  int order;  // exponent the relation claims
  bool holds;
  /// Smallest k <= order with (product)^k = 1, or 0 if none.
  int observed_order;
};

struct CoxeterReport {
  std::vector<RelationCheck> relations;
  bool all_hold() const;
};

/// R1^2 = R2^2 = R3^2 = (R1R3)^2 = (R1R2)^3 = (R2R3)^5 = 1.
CoxeterReport verify_coxeter_relations();

/// Coefficients (1, c2, c1, c0) of det(lambda I - R) for R = R1 R2 R3.
std::array<Golden, 4> coxeter_char_poly();

Mat3 coxeter_element();

/// Fundamental weights of H3 in the halved convention:
/// v1/sqrt2 = (1,t,0)/2, v2/(2 sqrt2) = (0,t,0)/2, v3/(t sqrt2) = (0,t,-s)/2.
/// They span the 5-fold, 2-fold and 3-fold axes.
struct WeightTriple {
  Vec3 v1;
  Vec3 v2;
  Vec3 v3;
};
WeightTriple weight_triple();

/// The explicit vertex lists printed for the three weight orbits
/// (icosahedron, icosidodecahedron, dodecahedron), halved convention.
std::vector<Vec3> icosahedron_vertices();
std::vector<Vec3> icosidodecahedron_vertices();
std::vector<Vec3> dodecahedron_vertices();

Mat3 reflection_through(const Vec3& normal);

}  // namespace danzer
