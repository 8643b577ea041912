#pragma once

#include <array>
#include <compare>

#include <Eigen/Dense>

#include "danzer/golden.hpp"

namespace danzer {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3 = Vector3<Golden>;
using Mat3 = Matrix3<Golden>;
using Tetra = std::array<Vec3, 4>;
using Triangle = std::array<Vec3, 3>;

/// (x, y, z) / 2; tile coordinates all carry this factor.
Vec3 half_vec(const Golden& x, const Golden& y, const Golden& z);
Vec3 make_vec(const Golden& x, const Golden& y, const Golden& z);
/// Row-major, every entry halved.
Mat3 half_mat(std::initializer_list<Golden> entries);
Mat3 make_mat(std::initializer_list<Golden> entries);

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar dot(const Eigen::MatrixBase<DerivedA>& u,
                              const Eigen::MatrixBase<DerivedB>& v) {
  return u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

template <typename Derived>
typename Derived::Scalar norm2(const Eigen::MatrixBase<Derived>& u) {
  return dot(u, u);
}

template <typename DerivedA, typename DerivedB>
Vector3<typename DerivedA::Scalar> cross(const Eigen::MatrixBase<DerivedA>& u,
                                         const Eigen::MatrixBase<DerivedB>& v) {
  using S = typename DerivedA::Scalar;
  return Vector3<S>(u(1) * v(2) - u(2) * v(1), u(2) * v(0) - u(0) * v(2),
                    u(0) * v(1) - u(1) * v(0));
}

/// det(p1 - p0, p2 - p0, p3 - p0); six times the signed volume.
template <typename Scalar>
Scalar orientation(const Vector3<Scalar>& p0, const Vector3<Scalar>& p1,
                   const Vector3<Scalar>& p2, const Vector3<Scalar>& p3) {
  const Vector3<Scalar> a = p1 - p0;
  const Vector3<Scalar> b = p2 - p0;
  const Vector3<Scalar> c = p3 - p0;
  return dot(cross(a, b), c);
}

template <typename Scalar>
Scalar tetra_signed_volume(const Vector3<Scalar>& p0,
                           const Vector3<Scalar>& p1,
                           const Vector3<Scalar>& p2,
                           const Vector3<Scalar>& p3) {
  return orientation(p0, p1, p2, p3) / Scalar(6);
}

Golden tetra_signed_volume(const Tetra& t);

template <typename Derived>
typename Derived::Scalar det3(const Eigen::MatrixBase<Derived>& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

bool is_orthogonal(const Mat3& m);

/// Barycentric coordinates of p w.r.t. a nondegenerate tetrahedron, from
/// exact volume ratios. They sum to 1.
std::array<Golden, 4> barycentric(const Vec3& p, const Tetra& t);

/// Closed-cell containment: boundary counts as inside.
bool in_closed_tetra(const Vec3& p, const Tetra& t);

/// True iff the two closed tetrahedra share interior points. Exact
/// separating-axis test over face normals and edge-edge cross products.
bool interiors_intersect(const Tetra& s, const Tetra& t);

/// Lexicographic order on coordinates by real value.
struct Vec3Less {
  bool operator()(const Vec3& u, const Vec3& v) const;
};
std::strong_ordering compare(const Vec3& u, const Vec3& v);
std::strong_ordering compare(const Mat3& m, const Mat3& n);

/// Rigid placement x -> rot * x + tr with rot in O(3).
class Motion {
 public:
  Motion();
  /// Throws std::invalid_argument if rot is not exactly orthogonal.
  Motion(Mat3 rot, Vec3 tr);
  static Motion identity() { return Motion(); }
  static Motion rotation(Mat3 rot) { return Motion(std::move(rot), Vec3::Zero()); }
  static Motion translation(Vec3 tr) { return Motion(Mat3::Identity(), std::move(tr)); }

  const Mat3& rot() const { return rot_; }
  const Vec3& tr() const { return tr_; }
  Golden det() const { return det3(rot_); }
  bool is_mirror() const { return det().sign() < 0; }

  Vec3 apply(const Vec3& p) const { return rot_ * p + tr_; }
  Tetra apply(const Tetra& t) const;
  /// Motion with the same rotation and translation multiplied by k.
  Motion scaled_translation(const Golden& k) const;

  friend bool operator==(const Motion& m, const Motion& n) {
    return m.rot_ == n.rot_ && m.tr_ == n.tr_;
  }

  friend Motion compose(const Motion& m1, const Motion& m2);
  friend Motion invert(const Motion& m);

 private:
  struct Unchecked {};
  Motion(Mat3 rot, Vec3 tr, Unchecked) : rot_(std::move(rot)), tr_(std::move(tr)) {}

  Mat3 rot_;
  Vec3 tr_;
};

/// compose(m1, m2) applies m2 first.
Motion compose(const Motion& m1, const Motion& m2);
Motion invert(const Motion& m);
Vec3 apply(const Motion& m, const Vec3& p);

std::array<double, 3> to_double(const Vec3& v);

}  // namespace danzer
