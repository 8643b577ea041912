#include <algorithm>
#include <iterator>
#include <set>

#include <gtest/gtest.h>

#include "danzer/h3_group.hpp"
#include "danzer/tiles.hpp"

using namespace danzer;

namespace {

const Golden t = kTau;
const Golden s = kSigma;
const Golden a2 = (Golden(2) + t) / Golden(4);  // a^2
const Golden b2 = Golden(Rational(3, 4));       // b^2

std::array<Golden, 6> sorted(std::array<Golden, 6> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Cofactor expansion over the edge vectors, written out independently of det3.
Golden det_oracle(const Tetra& q) {
  const Vec3 u = q[1] - q[0], v = q[2] - q[0], w = q[3] - q[0];
  return (u[0] * v[1] * w[2] + u[1] * v[2] * w[0] + u[2] * v[0] * w[1] - u[2] * v[1] * w[0] -
          u[1] * v[0] * w[2] - u[0] * v[2] * w[1]) /
         Golden(6);
}

std::vector<Vec3> sorted_set(std::vector<Vec3> v) {
  std::sort(v.begin(), v.end(), Vec3Less{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vec3> tetra_key(const Tetra& q) { return sorted_set({q.begin(), q.end()}); }

bool parallel_to_two_fold_axis(const Vec3& n) {
  static const auto axes = h3().orbit(weight_triple().v2);
  return std::any_of(axes.begin(), axes.end(),
                     [&](const Vec3& w) { return cross(n, w) == Vec3::Zero(); });
}

}  // namespace

TEST(Canonical, KAndCVertices) {
  const Tetra& k = canonical_tile(TileKind::K);
  EXPECT_EQ(tetra_key(k), sorted_set({Vec3::Zero(), half_vec(1, t, 0), half_vec(0, t, 0),
                                      half_vec(0, t, -s)}));
  const Tetra& c = canonical_tile(TileKind::C);
  EXPECT_EQ(tetra_key(c), sorted_set({Vec3::Zero(), half_vec(t, 0, 1), half_vec(t * t, 1, 0),
                                      half_vec(t * t, t, 1)}));
}

TEST(Canonical, BVertices) {
  EXPECT_EQ(tetra_key(canonical_tile(TileKind::B)),
            sorted_set({Vec3::Zero(), Vec3(t * half_vec(1, t, 0)), Vec3(t * half_vec(0, t, -s)),
                        make_vec(0, 1, 0)}));
}

TEST(Canonical, PositiveOrientation) {
  for (TileKind k : kAllKinds) EXPECT_GT(tetra_signed_volume(canonical_tile(k)), Golden(0));
}

TEST(Canonical, KindNames) {
  for (TileKind k : kAllKinds) EXPECT_EQ(parse_kind(std::string(1, kind_char(k))), k);
  EXPECT_THROW(parse_kind("D"), std::invalid_argument);
  EXPECT_THROW(parse_kind(""), std::invalid_argument);
}

TEST(Volumes, ExactValues) {
  EXPECT_EQ(tile_volume(TileKind::K), Golden(Rational(1, 48)));
  EXPECT_EQ(tile_volume(TileKind::B), t / Golden(24));
  EXPECT_EQ(tile_volume(TileKind::C), t / Golden(24));
  EXPECT_EQ(tile_volume(TileKind::A), t * t / Golden(24));
}

TEST(Volumes, MatchDeterminantOracle) {
  for (TileKind k : kAllKinds) EXPECT_EQ(tile_volume(k), abs(det_oracle(canonical_tile(k))));
}

TEST(Volumes, InflationIdentities) {
  const Golden t3 = t * t * t;
  const Golden A = tile_volume(TileKind::A), B = tile_volume(TileKind::B),
               C = tile_volume(TileKind::C), K = tile_volume(TileKind::K);
  EXPECT_EQ(t3 * K, B + K);
  EXPECT_EQ(t3 * B, C + Golden(4) * K + Golden(2) * B);
  EXPECT_EQ(t3 * C, A + Golden(2) * C + Golden(2) * K);
  EXPECT_EQ(t3 * A, Golden(3) * B + Golden(2) * C + Golden(6) * K);
}

TEST(EdgeNorms, K) {
  const std::array<Golden, 6> expect = {t.inverse() * t.inverse() * a2, a2, b2,
                                        Golden(Rational(1, 4)), t * t / Golden(4),
                                        s * s / Golden(4)};
  EXPECT_EQ(tile_edge_norms(TileKind::K), sorted(expect));
}

TEST(EdgeNorms, B) {
  const std::array<Golden, 6> expect = {t * t * a2, t * t * b2, Golden(1), a2, b2, s * s * a2};
  EXPECT_EQ(tile_edge_norms(TileKind::B), sorted(expect));
}

TEST(EdgeNorms, C) {
  const std::array<Golden, 6> expect = {s * s * a2, a2, a2, b2, t * t * b2, t * t};
  EXPECT_EQ(tile_edge_norms(TileKind::C), sorted(expect));
}

std::vector<std::array<Golden, 3>> face_types(const Tetra& q) {
  std::vector<std::array<Golden, 3>> out;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<Vec3> f;
    for (int i = 0; i < 4; ++i)
      if (i != skip) f.push_back(q[i]);
    std::array<Golden, 3> e = {norm2(Vec3(f[0] - f[1])), norm2(Vec3(f[1] - f[2])),
                               norm2(Vec3(f[0] - f[2]))};
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(EdgeNorms, AAndCShareOneFaceType) {
  // A and C are glued along an (a, b, tb) triangle; C alone carries the
  // (t^-1 a, a, b) faces of its octahedron.
  const auto fa = face_types(canonical_tile(TileKind::A));
  const auto fc = face_types(canonical_tile(TileKind::C));
  std::vector<std::array<Golden, 3>> common;
  std::set_intersection(fa.begin(), fa.end(), fc.begin(), fc.end(), std::back_inserter(common));
  const std::array<Golden, 3> glue = {b2, a2, t * t * b2};
  ASSERT_EQ(common.size(), 1u);
  EXPECT_EQ(common[0], glue);
  const std::array<Golden, 3> small = {s * s * a2, b2, a2};
  EXPECT_TRUE(std::binary_search(fc.begin(), fc.end(), small));
  EXPECT_FALSE(std::binary_search(fa.begin(), fa.end(), small));
}

TEST(EdgeNorms, A) {
  const std::array<Golden, 6> expect = {b2, a2, a2, Golden(1), t * t * b2, t * t * a2};
  EXPECT_EQ(tile_edge_norms(TileKind::A), sorted(expect));
}

TEST(EdgeNorms, CongruentUnderMotions) {
  for (const auto& el : h3().elements()) {
    const Motion m(el.mat, half_vec(t, 0, 1));
    for (TileKind k : kAllKinds) ASSERT_EQ(edge_norms(m.apply(canonical_tile(k))), tile_edge_norms(k));
  }
}

TEST(Faces, NormalsAlongTwoFoldAxes) {
  for (TileKind k : kAllKinds) {
    const Tetra& q = canonical_tile(k);
    for (int skip = 0; skip < 4; ++skip) {
      std::array<Vec3, 3> f;
      for (int i = 0, j = 0; i < 4; ++i)
        if (i != skip) f[j++] = q[i];
      const Vec3 n = cross(Vec3(f[1] - f[0]), Vec3(f[2] - f[0]));
      EXPECT_TRUE(parallel_to_two_fold_axis(n)) << kind_char(k) << " face " << skip;
    }
  }
}

TEST(Tile, MirrorFollowsDeterminant) {
  const Tile plain{TileKind::K, Motion(), 0};
  const Tile hat{TileKind::K, Motion::rotation(h3_generators()[0]), 0};
  EXPECT_FALSE(plain.mirrored());
  EXPECT_TRUE(hat.mirrored());
  EXPECT_LT(tetra_signed_volume(hat.vertices()), Golden(0));
}

TEST(Locate, RecoversPlacement) {
  for (std::size_t i = 0; i < h3().size(); i += 11) {
    const Motion m(h3().elements()[i].mat, half_vec(t, -1, Golden(Rational(1, 3))));
    for (TileKind k : kAllKinds) {
      const Tetra q = m.apply(canonical_tile(k));
      std::vector<Vec3> shuffled = {q[2], q[0], q[3], q[1]};
      const auto found = locate(k, shuffled);
      ASSERT_TRUE(found.has_value());
      ASSERT_EQ(tetra_key(found->apply(canonical_tile(k))), tetra_key(q));
    }
  }
}

TEST(Locate, RejectsWrongShape) {
  std::vector<Vec3> v(canonical_tile(TileKind::K).begin(), canonical_tile(TileKind::K).end());
  v[1] = Vec3(Golden(2) * v[1]);
  EXPECT_FALSE(locate(TileKind::K, v).has_value());
  EXPECT_FALSE(locate(TileKind::C, {canonical_tile(TileKind::K).begin(),
                                    canonical_tile(TileKind::K).end()})
                   .has_value());
}

TEST(Octahedra, CornerSets) {
  const auto c = octahedron(TileKind::C);
  EXPECT_TRUE(std::binary_search(c.begin(), c.end(), half_vec(t * t, t, 1), Vec3Less{}));
  EXPECT_TRUE(std::binary_search(c.begin(), c.end(), Vec3(Vec3::Zero()), Vec3Less{}));

  const auto b = octahedron(TileKind::B);
  const Mat3 r1 = h3_generators()[0], r3 = h3_generators()[2];
  const Vec3 d1 = half_vec(1, t, 0), d2 = half_vec(0, t, 0), d3 = half_vec(0, t, -s);
  EXPECT_EQ(b, sorted_set({Vec3(t * d1), Vec3(t * (r1 * d1)), Vec3(t * d3), Vec3(t * (r3 * d3)),
                           Vec3(Golden(2) * t.inverse() * d2), Vec3::Zero()}));

  const auto a = octahedron(TileKind::A);
  EXPECT_TRUE(std::binary_search(a.begin(), a.end(), half_vec(s, -t, 1), Vec3Less{}));

  const auto k = octahedron(TileKind::K);
  EXPECT_TRUE(std::binary_search(k.begin(), k.end(), make_vec(0, t, 0), Vec3Less{}));
  EXPECT_TRUE(std::binary_search(k.begin(), k.end(), Vec3(Vec3::Zero()), Vec3Less{}));
  for (TileKind kind : kAllKinds) EXPECT_EQ(octahedron(kind).size(), 6u) << kind_char(kind);
}

TEST(Octahedra, TilesFillWithoutOverlap) {
  for (TileKind kind : kAllKinds) {
    const auto tiles = octahedron_tiles(kind);
    ASSERT_EQ(tiles.size(), kind == TileKind::K ? 8u : 4u);
    Golden vol(0);
    std::vector<Vec3> corners;
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      const Tetra qi = tiles[i].vertices();
      vol += abs(tetra_signed_volume(qi));
      corners.insert(corners.end(), qi.begin(), qi.end());
      for (std::size_t j = i + 1; j < tiles.size(); ++j)
        EXPECT_FALSE(interiors_intersect(qi, tiles[j].vertices())) << kind_char(kind);
    }
    EXPECT_EQ(vol, Golden(static_cast<long>(tiles.size())) * tile_volume(kind));
    auto oct = octahedron(kind);
    if (kind == TileKind::K) oct.push_back(half_vec(0, t, 0));
    EXPECT_EQ(sorted_set(corners), sorted_set(oct)) << kind_char(kind);
  }
}

TEST(Octahedra, RhombusReflectionFixesRhombus) {
  const Motion r0 = k_rhombus_reflection();
  EXPECT_TRUE(r0.is_mirror());
  EXPECT_EQ(compose(r0, r0), Motion());
  for (const Vec3& p : {half_vec(1, t, 0), half_vec(-1, t, 0), half_vec(0, t, -s), half_vec(0, t, s)})
    EXPECT_EQ(r0.apply(p), p);
  EXPECT_EQ(r0.apply(Vec3::Zero()), make_vec(0, t, 0));
}

TEST(Pyramids, Dimensions) {
  const auto p = k_pyramids();
  const Golden ti2 = t.inverse() * t.inverse();
  EXPECT_EQ(p[0].base_edge_norm2, ti2 * a2);
  EXPECT_EQ(p[0].height_norm2, t * t / Golden(4));
  EXPECT_EQ(p[1].base_edge_norm2, a2);
  EXPECT_EQ(p[1].height_norm2, ti2 / Golden(4));
  EXPECT_EQ(p[2].base_edge_norm2, b2);
  EXPECT_EQ(p[2].height_norm2, Golden(Rational(1, 4)));
}

TEST(Pyramids, FourKEach) {
  for (const Pyramid& p : k_pyramids()) {
    Golden vol(0);
    for (const Tile& tile : p.tiles) {
      EXPECT_EQ(tile.kind, TileKind::K);
      vol += abs(tetra_signed_volume(tile.vertices()));
    }
    EXPECT_EQ(vol, Golden(Rational(1, 12))) << p.label;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        EXPECT_FALSE(interiors_intersect(p.tiles[i].vertices(), p.tiles[j].vertices()));
    // Base is a planar rhombus, apex off the plane.
    const auto& q = p.base;
    EXPECT_TRUE(tetra_signed_volume(q[0], q[1], q[2], q[3]).is_zero());
    EXPECT_FALSE(tetra_signed_volume(p.apex, q[0], q[1], q[2]).is_zero());
    for (int i = 0; i < 4; ++i)
      EXPECT_EQ(norm2(Vec3(q[(i + 1) % 4] - q[i])), p.base_edge_norm2) << p.label;
  }
}

TEST(Pyramids, OrbitOfFirstIsTheKOrbit) {
  std::set<std::vector<Vec3>, decltype([](const auto& x, const auto& y) {
             return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                                 Vec3Less{});
           })>
      from_pyramid, from_k;
  const Pyramid p = k_pyramids()[0];
  for (const auto& el : h3().elements()) {
    const Motion g = Motion::rotation(el.mat);
    for (const Tile& tile : p.tiles) from_pyramid.insert(tetra_key(g.apply(tile.vertices())));
    from_k.insert(tetra_key(g.apply(canonical_tile(TileKind::K))));
  }
  EXPECT_EQ(from_k.size(), 120u);
  EXPECT_TRUE(std::equal(from_pyramid.begin(), from_pyramid.end(), from_k.begin(), from_k.end()));
}
