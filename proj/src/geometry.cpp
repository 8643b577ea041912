#include "danzer/geometry.hpp"

#include <stdexcept>
#include <vector>

namespace danzer {

Vec3 make_vec(const Golden& x, const Golden& y, const Golden& z) {
  return Vec3(x, y, z);
}

Vec3 half_vec(const Golden& x, const Golden& y, const Golden& z) {
  return Vec3(Golden::half(x), Golden::half(y), Golden::half(z));
}

Mat3 make_mat(std::initializer_list<Golden> entries) {
  if (entries.size() != 9) throw std::invalid_argument("make_mat: need 9 entries");
  Mat3 m;
  auto it = entries.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}

Mat3 half_mat(std::initializer_list<Golden> entries) {
  Mat3 m = make_mat(entries);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = Golden::half(m(i, j));
  return m;
}

Golden tetra_signed_volume(const Tetra& t) {
  return tetra_signed_volume(t[0], t[1], t[2], t[3]);
}

bool is_orthogonal(const Mat3& m) {
  const Mat3 mtm = m.transpose() * m;
  return mtm == Mat3::Identity();
}

std::array<Golden, 4> barycentric(const Vec3& p, const Tetra& t) {
  const Golden whole = orientation(t[0], t[1], t[2], t[3]);
  if (whole.is_zero()) throw std::invalid_argument("barycentric: degenerate tetrahedron");
  std::array<Golden, 4> out;
  for (int i = 0; i < 4; ++i) {
    Tetra q = t;
    q[i] = p;
    out[i] = orientation(q[0], q[1], q[2], q[3]) / whole;
  }
  return out;
}

bool in_closed_tetra(const Vec3& p, const Tetra& t) {
  const int s = orientation(t[0], t[1], t[2], t[3]).sign();
  if (s == 0) throw std::invalid_argument("in_closed_tetra: degenerate tetrahedron");
  for (int i = 0; i < 4; ++i) {
    Tetra q = t;
    q[i] = p;
    if (orientation(q[0], q[1], q[2], q[3]).sign() * s < 0) return false;
  }
  return true;
}

namespace {

std::pair<Golden, Golden> project_interval(const Tetra& t, const Vec3& axis) {
  Golden lo = dot(t[0], axis);
  Golden hi = lo;
  for (int i = 1; i < 4; ++i) {
    Golden d = dot(t[i], axis);
    if (d < lo) lo = d;
    if (d > hi) hi = std::move(d);
  }
  return {lo, hi};
}

void face_normals(const Tetra& t, std::vector<Vec3>& axes) {
  for (int i = 0; i < 4; ++i) {
    const Vec3& a = t[(i + 1) % 4];
    const Vec3& b = t[(i + 2) % 4];
    const Vec3& c = t[(i + 3) % 4];
    axes.push_back(cross(Vec3(b - a), Vec3(c - a)));
  }
}

}  // namespace

bool interiors_intersect(const Tetra& s, const Tetra& t) {
  std::vector<Vec3> axes;
  axes.reserve(44);
  face_normals(s, axes);
  face_normals(t, axes);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
          axes.push_back(cross(Vec3(s[j] - s[i]), Vec3(t[l] - t[k])));
  for (const Vec3& axis : axes) {
    if (axis.isZero()) continue;
    const auto [slo, shi] = project_interval(s, axis);
    const auto [tlo, thi] = project_interval(t, axis);
    if (shi <= tlo || thi <= slo) return false;
  }
  return true;
}

std::strong_ordering compare(const Vec3& u, const Vec3& v) {
  for (int i = 0; i < 3; ++i) {
    if (auto c = u(i) <=> v(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const Mat3& m, const Mat3& n) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (auto c = m(i, j) <=> n(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

bool Vec3Less::operator()(const Vec3& u, const Vec3& v) const {
  return compare(u, v) < 0;
}

Motion::Motion() : rot_(Mat3::Identity()), tr_(Vec3::Zero()) {}

Motion::Motion(Mat3 rot, Vec3 tr) : rot_(std::move(rot)), tr_(std::move(tr)) {
  if (!is_orthogonal(rot_)) throw std::invalid_argument("Motion: rotation part is not orthogonal");
}

Tetra Motion::apply(const Tetra& t) const {
  return {apply(t[0]), apply(t[1]), apply(t[2]), apply(t[3])};
}

Motion Motion::scaled_translation(const Golden& k) const {
  Motion m = *this;
  m.tr_ *= k;
  return m;
}

Motion compose(const Motion& m1, const Motion& m2) {
  return Motion(m1.rot() * m2.rot(), m1.rot() * m2.tr() + m1.tr(), Motion::Unchecked{});
}

Motion invert(const Motion& m) {
  Mat3 rt = m.rot().transpose();
  Vec3 t = -(rt * m.tr());
  return Motion(std::move(rt), std::move(t), Motion::Unchecked{});
}

Vec3 apply(const Motion& m, const Vec3& p) { return m.apply(p); }

std::array<double, 3> to_double(const Vec3& v) {
  return {v(0).to_double(), v(1).to_double(), v(2).to_double()};
}

}  // namespace danzer
