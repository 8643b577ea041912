#include <random>

#include <gtest/gtest.h>

#include "danzer/construction_data.hpp"
#include "danzer/h3_group.hpp"
#include "danzer/tiles.hpp"

using namespace danzer;

namespace {

const Golden t = kTau;
const Golden s = kSigma;

double det_double(const Tetra& q) {
  std::array<std::array<double, 3>, 3> m{};
  const auto p0 = to_double(q[0]);
  for (int i = 0; i < 3; ++i) {
    const auto p = to_double(q[i + 1]);
    for (int j = 0; j < 3; ++j) m[i][j] = p[j] - p0[j];
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST(VectorOps, Examples) {
  EXPECT_EQ(norm2(half_vec(1, t, 0)), (Golden(2) + t) / Golden(4));
  EXPECT_EQ(dot(half_vec(1, t, 0), half_vec(0, t, 0)), (t + Golden(1)) / Golden(4));
  EXPECT_EQ(cross(make_vec(1, 0, 0), make_vec(0, 1, 0)), make_vec(0, 0, 1));
  EXPECT_EQ(Vec3(make_vec(1, t, 0) - make_vec(1, 0, 0)), make_vec(0, t, 0));
}

TEST(Volume, Examples) {
  const Vec3 o = Vec3::Zero();
  EXPECT_EQ(tetra_signed_volume(o, make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(0, 0, 1)),
            Golden(Rational(1, 6)));
  EXPECT_TRUE(tetra_signed_volume(o, make_vec(1, 0, 0), make_vec(0, 1, 0), make_vec(1, 1, 0))
                  .is_zero());
  const Tetra k = {o, half_vec(1, t, 0), half_vec(0, t, 0), half_vec(0, t, -s)};
  EXPECT_EQ(abs(tetra_signed_volume(k)), Golden(Rational(1, 48)));
  EXPECT_NEAR(std::abs(det_double(k)) / 6.0, 1.0 / 48.0, 1e-15);
}

TEST(Motion, ApplyRotationOfKChild) {
  const Motion g = Motion::rotation(data::tk_g_k());
  EXPECT_EQ(g.apply(half_vec(1, t, 0)), half_vec(-t, 0, 1));
}

TEST(Motion, IdentityComposeInvert) {
  const Vec3 p = half_vec(t, -1, s);
  EXPECT_EQ(Motion().apply(p), p);
  const Motion m(data::tb_g_b1(), data::tb_t_b());
  EXPECT_EQ(compose(m, invert(m)), Motion());
  EXPECT_EQ(compose(invert(m), m), Motion());
  EXPECT_EQ(invert(m).apply(m.apply(p)), p);
}

TEST(Motion, ComposeAppliesRightFirst) {
  const Motion a(data::tk_g_k(), data::tk_t_k());
  const Motion b(data::tc_g_k2(), data::tc_t_k2());
  const Vec3 p = half_vec(1, 2, 3);
  EXPECT_EQ(compose(a, b).apply(p), a.apply(b.apply(p)));
}

TEST(Motion, ComposeIsAssociative) {
  const Motion a(data::tk_g_k(), data::tk_t_k());
  const Motion b(data::tc_g_k2(), data::tc_t_k2());
  const Motion c(data::ta_g_b(), data::ta_t_b());
  EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(Motion, RejectsNonOrthogonal) {
  EXPECT_THROW(Motion(make_mat({1, 1, 0, 0, 1, 0, 0, 0, 1}), Vec3::Zero()),
               std::invalid_argument);
  EXPECT_THROW(Motion(make_mat({2, 0, 0, 0, 1, 0, 0, 0, 1}), Vec3::Zero()),
               std::invalid_argument);
}

TEST(Motion, VolumeSignFollowsDeterminant) {
  const Tetra& k = canonical_tile(TileKind::K);
  const Golden v = tetra_signed_volume(k);
  for (const auto& el : h3().elements()) {
    const Motion m(el.mat, half_vec(t, 1, -s));
    const Golden w = tetra_signed_volume(m.apply(k));
    ASSERT_EQ(w, m.is_mirror() ? -v : v);
  }
}

TEST(GroupMatrices, OrthogonalWithUnitDeterminant) {
  for (const auto& el : h3().elements()) {
    ASSERT_TRUE(is_orthogonal(el.mat));
    const Golden d = det3(el.mat);
    ASSERT_TRUE(d == Golden(1) || d == Golden(-1));
  }
}

TEST(Barycentric, SumToOne) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-6, 6);
  const Tetra& b = canonical_tile(TileKind::B);
  for (int i = 0; i < 200; ++i) {
    const Vec3 p(Golden(c(rng), c(rng)) / Golden(7), Golden(c(rng), c(rng)) / Golden(5),
                 Golden(c(rng), c(rng)) / Golden(3));
    const auto w = barycentric(p, b);
    ASSERT_EQ(w[0] + w[1] + w[2] + w[3], Golden(1));
    Vec3 back = Vec3::Zero();
    for (int j = 0; j < 4; ++j) back += w[j] * b[j];
    ASSERT_EQ(back, p);
  }
}

TEST(Containment, ClosedCell) {
  const Tetra& k = canonical_tile(TileKind::K);
  for (const Vec3& v : k) EXPECT_TRUE(in_closed_tetra(v, k));
  const Vec3 centroid = (k[0] + k[1] + k[2] + k[3]) / Golden(4);
  EXPECT_TRUE(in_closed_tetra(centroid, k));
  EXPECT_TRUE(in_closed_tetra((k[1] + k[2]) / Golden(2), k));
  EXPECT_FALSE(in_closed_tetra(Vec3(Golden(2) * k[1]), k));
}

TEST(Intersection, SharedFaceIsNotOverlap) {
  const Tetra& k = canonical_tile(TileKind::K);
  const Tetra mirrored = Motion::rotation(h3_generators()[0]).apply(k);  // shares a face
  EXPECT_FALSE(interiors_intersect(k, mirrored));
  EXPECT_TRUE(interiors_intersect(k, k));
  const Tetra shifted = Motion::translation(half_vec(0, Golden(Rational(1, 10)), 0)).apply(k);
  EXPECT_TRUE(interiors_intersect(k, shifted));
  const Tetra far = Motion::translation(make_vec(5, 0, 0)).apply(k);
  EXPECT_FALSE(interiors_intersect(k, far));
}

TEST(Intersection, EdgeEdgeSeparation) {
  // Two wedges stacked along z; z is the cross product of an x-edge and a y-edge.
  const Golden lo(Rational(-1, 10));
  const Tetra a = {make_vec(-1, 0, 0), make_vec(1, 0, 0), make_vec(0, 1, 1), make_vec(0, -1, 1)};
  const Tetra b = {make_vec(0, -1, -1), make_vec(0, 1, -1), make_vec(-1, 0, lo), make_vec(1, 0, lo)};
  EXPECT_FALSE(interiors_intersect(a, b));
  const Tetra c = Motion::translation(make_vec(0, 0, Golden(Rational(1, 5)))).apply(b);
  EXPECT_TRUE(interiors_intersect(a, c));
}

TEST(Ordering, CompareByValue) {
  EXPECT_TRUE(Vec3Less{}(make_vec(s, 0, 0), make_vec(0, 0, 0)));
  EXPECT_TRUE(Vec3Less{}(make_vec(1, 0, 0), make_vec(1, t, 0)));
  EXPECT_FALSE(Vec3Less{}(make_vec(1, t, 0), make_vec(1, t, 0)));
}
