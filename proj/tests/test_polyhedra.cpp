#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "danzer/h3_group.hpp"
#include "danzer/polyhedra.hpp"

using namespace danzer;

namespace {

const Golden t = kTau;

struct Expected {
  PolyhedronRow row;
  std::size_t v, e, f;
  std::map<std::size_t, std::size_t> degrees;  // face size -> count
};

const std::vector<Expected>& table() {
  static const std::vector<Expected> rows = {
      {PolyhedronRow::Icosahedron, 12, 30, 20, {{3, 20}}},
      {PolyhedronRow::Dodecahedron, 20, 30, 12, {{5, 12}}},
      {PolyhedronRow::Icosidodecahedron, 30, 60, 32, {{3, 20}, {5, 12}}},
      {PolyhedronRow::TruncatedIcosahedron, 60, 90, 32, {{5, 12}, {6, 20}}},
      {PolyhedronRow::SmallRhombicosidodecahedron, 60, 120, 62, {{3, 20}, {4, 30}, {5, 12}}},
      {PolyhedronRow::TruncatedDodecahedron, 60, 90, 32, {{3, 20}, {10, 12}}},
      {PolyhedronRow::GreatRhombicosidodecahedron, 120, 180, 62, {{4, 30}, {6, 20}, {10, 12}}},
  };
  return rows;
}

std::vector<Vec3> sorted_set(std::vector<Vec3> v) {
  std::sort(v.begin(), v.end(), Vec3Less{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Vec3> scaled_orbit(const Golden& k, const Vec3& v) { return h3().orbit(Vec3(k * v)); }

// Brute-force float hull: number of distinct supporting planes through three
// or more points.
std::size_t float_hull_faces(const std::vector<Vec3>& pts) {
  std::vector<std::array<double, 3>> p;
  for (const Vec3& v : pts) p.push_back(to_double(v));
  const std::size_t n = p.size();
  std::set<std::array<long, 4>> planes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<double, 3> u, w, nn;
        for (int d = 0; d < 3; ++d) {
          u[d] = p[j][d] - p[i][d];
          w[d] = p[k][d] - p[i][d];
        }
        nn = {u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
        const double len = std::sqrt(nn[0] * nn[0] + nn[1] * nn[1] + nn[2] * nn[2]);
        if (len < 1e-9) continue;
        for (double& x : nn) x /= len;
        const double off = nn[0] * p[i][0] + nn[1] * p[i][1] + nn[2] * p[i][2];
        int above = 0, below = 0;
        for (const auto& q : p) {
          const double d = nn[0] * q[0] + nn[1] * q[1] + nn[2] * q[2] - off;
          if (d > 1e-9) ++above;
          if (d < -1e-9) ++below;
        }
        if (above && below) continue;
        const double sgn = above ? -1.0 : 1.0;
        planes.insert({std::lround(sgn * nn[0] * 1e6), std::lround(sgn * nn[1] * 1e6),
                       std::lround(sgn * nn[2] * 1e6), std::lround(sgn * off * 1e6)});
      }
  return planes.size();
}

bool parallel_to_two_fold_axis(const Vec3& n) {
  static const auto axes = h3().orbit(weight_triple().v2);
  return std::any_of(axes.begin(), axes.end(),
                     [&](const Vec3& w) { return cross(n, w) == Vec3::Zero(); });
}

Vec3 face_normal(const PolyMesh& m, const std::vector<int>& f) {
  return cross(Vec3(m.vertices[f[1]] - m.vertices[f[0]]), Vec3(m.vertices[f[2]] - m.vertices[f[0]]));
}

Triangle tri(const Vec3& a, const Vec3& b, const Vec3& c) { return {a, b, c}; }

}  // namespace

TEST(OrbitPolyhedron, CountsForBothPairs) {
  for (const PairM p : {PairM(2, 0), PairM(1, 1), PairM(3, 1)})
    for (const Expected& e : table()) {
      const PolyMesh m = orbit_polyhedron(e.row, p);
      EXPECT_EQ(m.vertices.size(), e.v) << row_name(e.row);
      EXPECT_EQ(m.vertices.size(), row_vertex_count(e.row));
      EXPECT_EQ(m.edges().size(), e.e) << row_name(e.row);
      EXPECT_EQ(m.faces.size(), e.f) << row_name(e.row);
      std::map<std::size_t, std::size_t> deg;
      std::size_t sum = 0;
      for (const auto& f : m.faces) {
        ++deg[f.size()];
        sum += f.size();
      }
      EXPECT_EQ(deg, e.degrees) << row_name(e.row);
      EXPECT_EQ(sum, 2 * m.edges().size());
      EXPECT_EQ(m.euler_characteristic(), 2);
      EXPECT_TRUE(m.is_closed_oriented());
    }
}

TEST(OrbitPolyhedron, FaceCountsMatchFloatHull) {
  for (const Expected& e : table()) {
    const PolyMesh m = orbit_polyhedron(e.row, PairM(2, 0));
    EXPECT_EQ(float_hull_faces(m.vertices), m.faces.size()) << row_name(e.row);
  }
}

TEST(OrbitPolyhedron, VerticesClosedUnderGroup) {
  for (const Expected& e : table()) {
    const PolyMesh m = orbit_polyhedron(e.row, PairM(1, 1));
    for (const auto& el : h3().elements())
      for (const Vec3& v : m.vertices)
        ASSERT_TRUE(std::binary_search(m.vertices.begin(), m.vertices.end(), Vec3(el.mat * v),
                                       Vec3Less{}));
  }
}

TEST(OrbitPolyhedron, FacesPointOutward) {
  for (const Expected& e : table()) {
    const PolyMesh m = orbit_polyhedron(e.row, PairM(2, 0));
    for (const auto& f : m.faces) {
      ASSERT_GT(dot(face_normal(m, f), m.vertices[f[0]]), Golden(0)) << row_name(e.row);
      ASSERT_EQ(f.front(), *std::min_element(f.begin(), f.end()));
    }
  }
}

TEST(OrbitPolyhedron, SeedScalesWithPair) {
  const PolyMesh m = orbit_polyhedron(PolyhedronRow::TruncatedIcosahedron, PairM(1, 1));
  const Vec3 seed = Golden(2) * t * half_vec(1, Golden(3) * t, 0);
  EXPECT_TRUE(std::binary_search(m.vertices.begin(), m.vertices.end(), seed, Vec3Less{}));
}

TEST(OrbitPolyhedron, RejectsZeroPair) {
  EXPECT_THROW(orbit_polyhedron(PolyhedronRow::Icosahedron, PairM(0, 0)), std::invalid_argument);
}

TEST(Triacontahedron, Shape) {
  const PolyMesh m = triacontahedron();
  EXPECT_EQ(m.vertices.size(), 32u);
  EXPECT_EQ(m.edges().size(), 60u);
  EXPECT_EQ(m.faces.size(), 30u);
  EXPECT_EQ(m.euler_characteristic(), 2);
  EXPECT_TRUE(m.is_closed_oriented());
  const WeightTriple w = weight_triple();
  std::vector<Vec3> expect = h3().orbit(w.v1);
  const auto o3 = h3().orbit(w.v3);
  expect.insert(expect.end(), o3.begin(), o3.end());
  EXPECT_EQ(m.vertices, sorted_set(expect));
  for (std::size_t f = 0; f < m.faces.size(); ++f) {
    ASSERT_EQ(m.faces[f].size(), 4u);
    const auto e = face_edge_norms(m, f);
    ASSERT_EQ(e.front(), e.back());  // rhombus
    ASSERT_TRUE(parallel_to_two_fold_axis(face_normal(m, m.faces[f])));
  }
}

TEST(BoundaryExtract, SingleTile) {
  const auto faces = boundary_extract({Tile{TileKind::C, Motion(), 0}});
  EXPECT_EQ(faces.size(), 4u);
  for (const Triangle& f : faces) {
    EXPECT_TRUE(Vec3Less{}(f[0], f[1]) && Vec3Less{}(f[0], f[2]));
    // Outward: the fourth vertex lies behind the face.
    const Tetra& c = canonical_tile(TileKind::C);
    for (const Vec3& v : c)
      if (v != f[0] && v != f[1] && v != f[2])
        EXPECT_LT(tetra_signed_volume(f[0], f[1], f[2], v), Golden(0));
  }
}

TEST(BoundaryExtract, TwoTilesSharingAFace) {
  const Tile k{TileKind::K, Motion(), 0};
  const Tile hat{TileKind::K, Motion::rotation(h3_generators()[0]), 0};
  EXPECT_EQ(boundary_extract({k, hat}).size(), 6u);
  const PolyMesh m = coplanar_merge(boundary_extract({k, hat}));
  EXPECT_EQ(m.euler_characteristic(), 2);
  EXPECT_TRUE(m.is_closed_oriented());
}

TEST(BoundaryExtract, RejectsTripleFace) {
  const Tile k{TileKind::K, Motion(), 0};
  EXPECT_THROW(boundary_extract({k, k, k}), std::runtime_error);
}

TEST(CoplanarMerge, TetrahedronUnchanged) {
  const PolyMesh m = coplanar_merge(boundary_extract({Tile{TileKind::B, Motion(), 0}}));
  EXPECT_EQ(m.vertices.size(), 4u);
  EXPECT_EQ(m.faces.size(), 4u);
  EXPECT_EQ(m.edges().size(), 6u);
}

TEST(CoplanarMerge, TwoTrianglesMakeARhombusOnASquarePyramid) {
  // Square pyramid split along a base diagonal: the base merges to one quad.
  const Vec3 a = make_vec(0, 0, 0), b = make_vec(1, 0, 0), c = make_vec(1, 1, 0),
             d = make_vec(0, 1, 0), apex = half_vec(1, 1, 1);
  const std::vector<Triangle> faces = {tri(a, c, b), tri(a, d, c), tri(a, b, apex),
                                       tri(b, c, apex), tri(c, d, apex), tri(d, a, apex)};
  const PolyMesh m = coplanar_merge(faces);
  EXPECT_EQ(m.vertices.size(), 5u);
  EXPECT_EQ(m.faces.size(), 5u);
  EXPECT_EQ(m.edges().size(), 8u);
  EXPECT_TRUE(m.is_closed_oriented());
}

TEST(CoplanarMerge, RejectsOpenSurface) {
  const std::vector<Triangle> open = {tri(make_vec(0, 0, 0), make_vec(1, 0, 0), make_vec(0, 1, 0))};
  EXPECT_THROW(coplanar_merge(open), std::invalid_argument);
}

TEST(CoplanarMerge, RejectsDuplicatedEdgeDirection) {
  const Triangle f = tri(make_vec(0, 0, 0), make_vec(1, 0, 0), make_vec(0, 1, 0));
  EXPECT_THROW(coplanar_merge({f, f}), std::invalid_argument);
}

TEST(TileUnion, KGivesTriacontahedron) {
  const PolyMesh m = abck_polyhedron(TileKind::K);
  const PolyMesh ref = triacontahedron();
  EXPECT_EQ(m.vertices, ref.vertices);
  EXPECT_EQ(m.faces.size(), 30u);
  EXPECT_EQ(m.edges().size(), 60u);
  EXPECT_EQ(boundary_extract(tile_orbit(TileKind::K)).size(), 120u);
}

TEST(TileUnion, BAndCPolyhedra) {
  for (TileKind k : {TileKind::B, TileKind::C}) {
    const PolyMesh m = abck_polyhedron(k);
    EXPECT_EQ(m.vertices.size(), 62u);
    EXPECT_EQ(m.edges().size(), 180u);
    EXPECT_EQ(m.faces.size(), 120u);
    EXPECT_EQ(m.euler_characteristic(), 2);
    EXPECT_TRUE(m.is_closed_oriented());
    std::vector<std::size_t> sizes;
    for (const auto& [r, n] : radius_classes(m)) sizes.push_back(n);
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{12, 20, 30})) << kind_char(k);
  }
}

TEST(TileUnion, FacesArePairwiseCongruent) {
  for (TileKind k : {TileKind::B, TileKind::C}) {
    const PolyMesh m = abck_polyhedron(k);
    const auto first = face_edge_norms(m, 0);
    for (std::size_t f = 0; f < m.faces.size(); ++f) {
      ASSERT_EQ(m.faces[f].size(), 3u);
      ASSERT_EQ(face_edge_norms(m, f), first) << kind_char(k);
    }
  }
}

TEST(TileUnion, VertexClassesAreScaledWeightOrbits) {
  const WeightTriple w = weight_triple();
  const Golden ti = t.inverse();
  auto classes = [&](const Golden& k1, const Golden& k2, const Golden& k3) {
    std::vector<Vec3> all = scaled_orbit(k1, w.v1);
    for (const auto& o : {scaled_orbit(k2, w.v2), scaled_orbit(k3, w.v3)})
      all.insert(all.end(), o.begin(), o.end());
    return sorted_set(all);
  };
  EXPECT_EQ(abck_polyhedron(TileKind::B).vertices, classes(t, Golden(2) * ti, t));
  EXPECT_EQ(abck_polyhedron(TileKind::C).vertices, classes(Golden(1), Golden(2), t));
}

TEST(TileUnion, CRadiiOrdering) {
  const auto r = radius_classes(abck_polyhedron(TileKind::C));
  std::vector<std::size_t> by_radius;
  for (const auto& [rad, n] : r) by_radius.push_back(n);
  // 5-fold class innermost, then 3-fold, then 2-fold.
  EXPECT_EQ(by_radius, (std::vector<std::size_t>{12, 20, 30}));
}

TEST(TileUnion, ARejected) {
  EXPECT_THROW(abck_polyhedron(TileKind::A), std::invalid_argument);
}
