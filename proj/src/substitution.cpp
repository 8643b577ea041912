#include "danzer/substitution.hpp"

#include <algorithm>
#include <stdexcept>

#include "danzer/construction_data.hpp"
#include "danzer/h3_group.hpp"

namespace danzer {

namespace {

const Golden t = kTau;

Motion rot(const Mat3& g) { return Motion::rotation(g); }
Motion shift(const Vec3& v) { return Motion::translation(v); }

Motion must_locate(TileKind kind, const std::vector<Vec3>& vertices) {
  auto m = locate(kind, vertices);
  if (!m) throw std::logic_error(std::string("no placement of ") + kind_char(kind) + " found");
  return *m;
}

std::vector<Vec3> scaled(const std::vector<Vec3>& pts, const Golden& k) {
  std::vector<Vec3> out;
  for (const Vec3& p : pts) out.push_back(k * p);
  return out;
}

// Children of tB as drawn, before the frame g_B is removed.
std::vector<RuleChild> tb_drawn() {
  using namespace data;
  const Motion c = must_locate(TileKind::C, c_drawn_in_tc());
  const Motion k4(tb_g_4k(), tb_t_4k());
  // Pyramid (c) of <K>: apex (1,t,0)/2.
  const auto pyr = k_pyramids()[2];
  std::vector<RuleChild> out{{"C", TileKind::C, c}};
  const char* names[] = {"K1", "K2", "K3", "K4"};
  for (int i = 0; i < 4; ++i)
    out.push_back({names[i], TileKind::K, compose(k4, pyr.tiles[i].place)});
  out.push_back({"B1", TileKind::B, Motion(tb_g_b1(), tb_t_b())});
  out.push_back({"B2", TileKind::B, Motion(tb_g_b2(), tb_t_b())});
  return out;
}

SubstitutionRule undo_frame(TileKind parent, const Motion& frame, std::vector<RuleChild> drawn) {
  const Motion back = invert(frame.scaled_translation(t));
  for (auto& c : drawn) c.place = compose(back, c.place);
  return {parent, std::move(drawn), frame};
}

SubstitutionRule build_k() {
  return {TileKind::K,
          {{"B", TileKind::B, Motion()},
           {"K", TileKind::K, Motion(data::tk_g_k(), data::tk_t_k())}},
          Motion()};
}

SubstitutionRule build_b() {
  return undo_frame(TileKind::B, rot(data::tb_g_b()), tb_drawn());
}

SubstitutionRule build_c() {
  using namespace data;
  const Motion frame = must_locate(TileKind::C, c_drawn_in_tc());
  // C as drawn in the vertex figure: g_C^T p + (t,t,t)/2.
  const Motion figure_c = invert(compose(rot(ta_g_c()), shift(tc_t_c_pre())));
  auto c_child = [&](const Mat3& g) {
    return compose(shift(tc_t_c_post()), compose(rot(g), compose(shift(tc_t_c_pre()), figure_c)));
  };
  std::vector<RuleChild> drawn{
      {"K1", TileKind::K, rot(tc_g_k1())},
      {"K2", TileKind::K, Motion(tc_g_k2(), tc_t_k2())},
      {"C1", TileKind::C, c_child(tc_g_c1())},
      {"C2", TileKind::C, c_child(tc_g_c2())},
      {"A", TileKind::A, Motion(tc_g_a(), tc_t_a())},
  };
  return undo_frame(TileKind::C, frame, std::move(drawn));
}

SubstitutionRule build_a() {
  using namespace data;
  const Motion frame = must_locate(TileKind::A, scaled(ta_hull(), t.inverse()));
  std::vector<RuleChild> drawn{
      {"C", TileKind::C, Motion()},
      {"K1", TileKind::K, Motion(ta_g_k1(), ta_t_k())},
      {"K2", TileKind::K, Motion(ta_g_k2(), ta_t_k())},
      {"B", TileKind::B, Motion(ta_g_b(), ta_t_b())},
  };
  for (auto c : tb_drawn()) {
    c.label = "tB." + c.label;
    drawn.push_back(std::move(c));
  }
  return undo_frame(TileKind::A, frame, std::move(drawn));
}

std::array<SubstitutionRule, 4> build_all() {
  std::array<SubstitutionRule, 4> out{build_a(), build_b(), build_c(), build_k()};
  for (const auto& r : out) {
    const RuleReport rep = verify_rule(r);
    if (!rep.ok()) {
      std::string msg = std::string("substitution rule for ") + kind_char(r.parent) + " fails:";
      for (const auto& f : rep.failures) msg += " " + f + ";";
      throw std::logic_error(msg);
    }
  }
  return out;
}

bool tile_less(const Tile& x, const Tile& y) {
  if (x.kind != y.kind) return kind_index(x.kind) < kind_index(y.kind);
  const auto c = compare(x.place.rot(), y.place.rot());
  if (c != 0) return c < 0;
  return compare(x.place.tr(), y.place.tr()) < 0;
}

}  // namespace

std::vector<Tetra> SubstitutionRule::drawn_children() const {
  const Motion f = frame.scaled_translation(t);
  std::vector<Tetra> out;
  for (const auto& c : children) out.push_back(compose(f, c.place).apply(canonical_tile(c.kind)));
  return out;
}

std::array<long, 4> SubstitutionRule::counts() const {
  std::array<long, 4> n{};
  for (const auto& c : children) ++n[kind_index(c.kind)];
  return n;
}

const std::array<SubstitutionRule, 4>& rules() {
  static const std::array<SubstitutionRule, 4> all = build_all();
  return all;
}

const SubstitutionRule& rule(TileKind parent) { return rules()[kind_index(parent)]; }

CountMatrix count_matrix() {
  CountMatrix m{};
  for (TileKind p : kAllKinds) {
    const auto n = rule(p).counts();
    for (int c = 0; c < 4; ++c) m[c][kind_index(p)] = n[c];
  }
  return m;
}

RuleReport verify_rule(const SubstitutionRule& r) {
  RuleReport rep;
  rep.parent = r.parent;
  const Golden t3 = t * t * t;
  rep.expected_volume = t3 * tile_volume(r.parent);

  Tetra big = canonical_tile(r.parent);
  for (Vec3& p : big) p = t * p;

  std::vector<Tetra> kids;
  for (const auto& c : r.children) kids.push_back(c.place.apply(canonical_tile(c.kind)));

  rep.children_volume = Golden(0);
  for (const Tetra& k : kids) rep.children_volume += abs(tetra_signed_volume(k));
  rep.volume_ok = rep.children_volume == rep.expected_volume;
  if (!rep.volume_ok)
    rep.failures.push_back("child volumes sum to " + rep.children_volume.to_string() +
                           ", expected " + rep.expected_volume.to_string());

  rep.containment_ok = true;
  for (std::size_t i = 0; i < kids.size(); ++i)
    for (int v = 0; v < 4; ++v)
      if (!in_closed_tetra(kids[i][v], big)) {
        rep.containment_ok = false;
        rep.failures.push_back("vertex " + std::to_string(v) + " of child " +
                               r.children[i].label + " lies outside the inflated parent");
      }

  rep.disjoint_ok = true;
  for (std::size_t i = 0; i < kids.size(); ++i)
    for (std::size_t j = i + 1; j < kids.size(); ++j)
      if (interiors_intersect(kids[i], kids[j])) {
        rep.disjoint_ok = false;
        rep.failures.push_back("children " + r.children[i].label + " and " +
                               r.children[j].label + " overlap");
      }

  rep.congruence_ok = true;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    const TileKind k = r.children[i].kind;
    const bool same = edge_norms(kids[i]) == tile_edge_norms(k) &&
                      abs(tetra_signed_volume(kids[i])) == tile_volume(k);
    if (!same) {
      rep.congruence_ok = false;
      rep.failures.push_back("child " + r.children[i].label + " is not congruent to " +
                             std::string(1, kind_char(k)));
    }
  }
  return rep;
}

RuleReport verify_rule(TileKind parent) { return verify_rule(rule(parent)); }

std::array<long, 4> Patch::counts() const {
  std::array<long, 4> n{};
  for (const Tile& tile : tiles) ++n[kind_index(tile.kind)];
  return n;
}

Golden Patch::total_volume() const {
  std::array<long, 4> n = counts();
  Golden v(0);
  for (TileKind k : kAllKinds) v += Golden(n[kind_index(k)]) * tile_volume(k);
  return v;
}

Patch seed_patch(TileKind kind) { return {{Tile{kind, Motion(), 0}}, 0}; }

Patch inflate(const Patch& patch) {
  Patch out;
  out.scale_exponent = patch.scale_exponent + 1;
  for (const Tile& tile : patch.tiles) {
    const Motion grown = tile.place.scaled_translation(t);
    for (const auto& c : rule(tile.kind).children)
      out.tiles.push_back({c.kind, compose(grown, c.place), tile.depth + 1});
  }
  std::stable_sort(out.tiles.begin(), out.tiles.end(), tile_less);
  return out;
}

Patch inflate_n(TileKind seed, int n) {
  if (n < 0) throw std::invalid_argument("inflation depth must be non-negative");
  Patch p = seed_patch(seed);
  for (int i = 0; i < n; ++i) p = inflate(p);
  return p;
}

}  // namespace danzer
