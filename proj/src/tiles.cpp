#include "danzer/tiles.hpp"

#include <algorithm>
#include <stdexcept>

#include "danzer/construction_data.hpp"
#include "danzer/h3_group.hpp"

namespace danzer {

namespace {

const Golden t = kTau;
const Golden s = kSigma;

Tetra make_canonical_a() {
  // The A child of tC sits at (g_A, t_A); undo that placement.
  const auto placed = data::tc_children_vertices()[4];
  const Mat3 g = data::tc_g_a();
  const Vec3 tr = data::tc_t_a();
  Tetra a;
  for (int i = 0; i < 4; ++i) a[i] = g.transpose() * (placed[i] - tr);
  if (tetra_signed_volume(a).sign() < 0) std::swap(a[2], a[3]);
  return a;
}

std::array<Tetra, 4> make_canonical() {
  std::array<Tetra, 4> out;
  out[kind_index(TileKind::K)] = {Vec3::Zero(), half_vec(1, t, 0), half_vec(0, t, 0),
                                  half_vec(0, t, -s)};
  // The printed order {0, t(1,t,0)/2, t(0,t,-s)/2, (0,1,0)} is negatively
  // oriented; the last two are swapped.
  out[kind_index(TileKind::B)] = {Vec3::Zero(), half_vec(t, t * t, 0), make_vec(0, 1, 0),
                                  half_vec(0, t * t, 1)};
  out[kind_index(TileKind::C)] = {Vec3::Zero(), half_vec(t, 0, 1), half_vec(t * t, 1, 0),
                                  half_vec(t * t, t, 1)};
  out[kind_index(TileKind::A)] = make_canonical_a();
  return out;
}

bool same_set(const Tetra& a, const std::vector<Vec3>& b) {
  if (b.size() != 4) return false;
  return std::all_of(a.begin(), a.end(), [&](const Vec3& p) {
    return std::find(b.begin(), b.end(), p) != b.end();
  });
}

std::vector<Tile> orbit_tiles(TileKind kind, const Motion& seed, const std::vector<Mat3>& group) {
  std::vector<Tile> out;
  out.reserve(group.size());
  for (const Mat3& g : group) out.push_back({kind, compose(Motion::rotation(g), seed), 0});
  return out;
}

std::vector<Mat3> klein_r1_r3() {
  const auto gens = h3_generators();
  return {Mat3::Identity(), gens[0], gens[2], gens[0] * gens[2]};
}

}  // namespace

char kind_char(TileKind k) { return "ABCK"[kind_index(k)]; }

int kind_index(TileKind k) {
  switch (k) {
    case TileKind::A: return 0;
    case TileKind::B: return 1;
    case TileKind::C: return 2;
    case TileKind::K: return 3;
  }
  throw std::logic_error("bad tile kind");
}

TileKind parse_kind(std::string_view str) {
  if (str == "A") return TileKind::A;
  if (str == "B") return TileKind::B;
  if (str == "C") return TileKind::C;
  if (str == "K") return TileKind::K;
  throw std::invalid_argument("unknown tile kind '" + std::string(str) + "'");
}

const Tetra& canonical_tile(TileKind kind) {
  static const std::array<Tetra, 4> tiles = make_canonical();
  return tiles[kind_index(kind)];
}

std::array<Golden, 6> edge_norms(const Tetra& tet) {
  std::array<Golden, 6> e;
  int k = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e[k++] = norm2(tet[i] - tet[j]);
  std::sort(e.begin(), e.end());
  return e;
}

std::array<Golden, 6> tile_edge_norms(TileKind kind) { return edge_norms(canonical_tile(kind)); }

Golden tile_volume(TileKind kind) { return tetra_signed_volume(canonical_tile(kind)); }

std::optional<Motion> locate(TileKind kind, const std::vector<Vec3>& vertices) {
  if (vertices.size() != 4) return std::nullopt;
  const Tetra& base = canonical_tile(kind);
  for (const auto& el : h3().elements()) {
    const Vec3 g0 = el.mat * base[0];
    for (const Vec3& v : vertices) {
      Motion m(el.mat, v - g0);
      if (same_set(m.apply(base), vertices)) return m;
    }
  }
  return std::nullopt;
}

Motion k_rhombus_reflection() {
  return Motion(make_mat({1, 0, 0, 0, -1, 0, 0, 0, 1}), make_vec(0, t, 0));
}

std::vector<Tile> octahedron_tiles(TileKind kind) {
  switch (kind) {
    case TileKind::B:
      return orbit_tiles(kind, Motion(), klein_r1_r3());
    case TileKind::C:
      return orbit_tiles(kind, Motion(), h3().stabilizer(half_vec(t * t, t, 1)));
    case TileKind::A: {
      const auto seed =
          locate(kind, {Vec3::Zero(), half_vec(1, 1, 1), half_vec(-t, 0, 1), half_vec(s, -t, 1)});
      if (!seed) throw std::logic_error("A octahedron seed not found");
      return orbit_tiles(kind, *seed, h3().stabilizer(half_vec(s, -t, 1)));
    }
    case TileKind::K: {
      auto out = orbit_tiles(kind, Motion(), klein_r1_r3());
      const Motion r0 = k_rhombus_reflection();
      const std::size_t n = out.size();
      for (std::size_t i = 0; i < n; ++i) out.push_back({kind, compose(r0, out[i].place), 0});
      return out;
    }
  }
  throw std::logic_error("bad tile kind");
}

std::vector<Vec3> octahedron(TileKind kind) {
  std::vector<Vec3> pts;
  for (const Tile& tile : octahedron_tiles(kind))
    for (const Vec3& p : tile.vertices()) pts.push_back(p);
  std::sort(pts.begin(), pts.end(), Vec3Less{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (kind == TileKind::K) std::erase(pts, half_vec(0, t, 0));
  return pts;
}

std::array<Pyramid, 3> k_pyramids() {
  const auto gens = h3_generators();
  const Motion r1 = Motion::rotation(gens[0]);
  const Motion r3 = Motion::rotation(gens[2]);
  const Motion r0 = k_rhombus_reflection();
  const Motion id;
  const Vec3 o = Vec3::Zero();
  const Vec3 p1 = half_vec(1, t, 0);
  const Vec3 p3 = half_vec(0, t, -s);

  auto build = [&](std::string label, Vec3 apex, std::array<Vec3, 4> base,
                   std::array<Motion, 4> places) {
    Pyramid p;
    p.label = std::move(label);
    p.apex = apex;
    p.base = base;
    for (int i = 0; i < 4; ++i) p.tiles[i] = {TileKind::K, places[i], 0};
    p.base_edge_norm2 = norm2(base[1] - base[0]);
    const Vec3 n = cross(Vec3(base[1] - base[0]), Vec3(base[2] - base[0]));
    const Golden h = dot(n, Vec3(apex - base[0]));
    p.height_norm2 = h * h / norm2(n);
    return p;
  };

  return {
      build("a", o, {p1, p3, r1.apply(p1), r3.apply(p3)}, {id, r1, r3, compose(r1, r3)}),
      build("b", p3, {o, p1, r0.apply(o), r1.apply(p1)}, {id, r1, r0, compose(r0, r1)}),
      build("c", p1, {o, p3, r0.apply(o), r3.apply(p3)}, {id, r3, r0, compose(r0, r3)}),
  };
}

}  // namespace danzer
