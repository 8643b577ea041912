#include "danzer/verify.hpp"

#include <functional>
#include <stdexcept>

#include "danzer/d6_lift.hpp"
#include "danzer/h3_group.hpp"
#include "danzer/polyhedra.hpp"
#include "danzer/substitution.hpp"

namespace danzer {

namespace {

void add(std::vector<Check>& out, std::string name, const std::function<bool(std::string&)>& fn) {
  Check c{std::move(name), false, {}};
  try {
    c.passed = fn(c.detail);
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(c));
}

bool same_sorted(std::vector<Vec3> a, std::vector<Vec3> b) {
  std::sort(a.begin(), a.end(), Vec3Less{});
  std::sort(b.begin(), b.end(), Vec3Less{});
  return a == b;
}

std::vector<Check> relations() {
  std::vector<Check> out;
  for (const auto& r : verify_coxeter_relations().relations)
    add(out, r.name + " = 1", [&](std::string& d) {
      d = "observed order " + std::to_string(r.observed_order);
      return r.holds;
    });
  add(out, "group order 120, 60 rotations", [](std::string& d) {
    d = std::to_string(h3().size()) + " elements, " + std::to_string(h3().rotations().size()) +
        " rotations";
    return h3().size() == 120 && h3().rotations().size() == 60;
  });
  add(out, "char poly of R1R2R3 = l^3 + s l^2 + s l + 1", [](std::string& d) {
    const auto c = coxeter_char_poly();
    d = c[0].to_string() + ", " + c[1].to_string() + ", " + c[2].to_string() + ", " +
        c[3].to_string();
    return c[0] == Golden(1) && c[1] == kSigma && c[2] == kSigma && c[3] == Golden(1);
  });
  add(out, "projection basis orthonormal",
      [](std::string&) { return projection_basis().rows_orthonormal(); });
  add(out, "H3 roots and weights embed in D6", [](std::string&) {
    return h3_embedding_check().ok();
  });
  return out;
}

std::vector<Check> orbits() {
  std::vector<Check> out;
  const WeightTriple w = weight_triple();
  add(out, "orbit(v1) = 12 icosahedron vertices", [&](std::string& d) {
    const auto o = h3().orbit(w.v1);
    d = std::to_string(o.size());
    return o.size() == 12 && same_sorted(o, icosahedron_vertices());
  });
  add(out, "orbit(v2/t) = 30 icosidodecahedron vertices", [&](std::string& d) {
    const auto o = h3().orbit(Vec3(kTau.inverse() * w.v2));
    d = std::to_string(o.size());
    return o.size() == 30 && same_sorted(o, icosidodecahedron_vertices());
  });
  add(out, "orbit(v3) = 20 dodecahedron vertices", [&](std::string& d) {
    const auto o = h3().orbit(w.v3);
    d = std::to_string(o.size());
    return o.size() == 20 && same_sorted(o, dodecahedron_vertices());
  });
  for (const PairM p : {PairM(2, 0), PairM(1, 1)}) {
    for (PolyhedronRow row : kAllRows) {
      const std::string tag = std::string(row_name(row)) + " (" + std::to_string(p.m1()) + "," +
                              std::to_string(p.m2()) + ")";
      add(out, tag, [&](std::string& d) {
        const PolyMesh m = orbit_polyhedron(row, p);
        const PairVector v = pair_vector(row, p);
        const bool forms = v.l_form == v.omega_form;
        const bool seed = hatted(v.l_form, p) == row_seed(row);
        d = "V=" + std::to_string(m.vertices.size()) + " E=" + std::to_string(m.edges().size()) +
            " F=" + std::to_string(m.faces.size());
        return m.vertices.size() == row_vertex_count(row) && m.euler_characteristic() == 2 &&
               m.is_closed_oriented() && forms && seed;
      });
    }
  }
  add(out, "triacontahedron (32, 60, 30)", [](std::string& d) {
    const PolyMesh m = triacontahedron();
    d = "V=" + std::to_string(m.vertices.size()) + " E=" + std::to_string(m.edges().size()) +
        " F=" + std::to_string(m.faces.size());
    return m.vertices.size() == 32 && m.edges().size() == 60 && m.faces.size() == 30;
  });
  for (TileKind k : {TileKind::B, TileKind::C, TileKind::K}) {
    const bool tri = k == TileKind::K;
    add(out, std::string(1, kind_char(k)) + "-orbit polyhedron", [&](std::string& d) {
      const PolyMesh m = abck_polyhedron(k);
      d = "V=" + std::to_string(m.vertices.size()) + " E=" + std::to_string(m.edges().size()) +
          " F=" + std::to_string(m.faces.size());
      const std::size_t v = tri ? 32 : 62, e = tri ? 60 : 180, f = tri ? 30 : 120;
      return m.vertices.size() == v && m.edges().size() == e && m.faces.size() == f &&
             m.is_closed_oriented();
    });
  }
  return out;
}

std::vector<Check> rules_suite() {
  std::vector<Check> out;
  const std::array<std::array<long, 4>, 4> heading = {{
      {0, 3, 2, 6},  // A
      {0, 2, 1, 4},  // B
      {1, 0, 2, 2},  // C
      {0, 1, 0, 1},  // K
  }};
  for (TileKind k : kAllKinds) {
    add(out, std::string("rule ") + kind_char(k), [&](std::string& d) {
      const RuleReport r = verify_rule(k);
      for (const auto& f : r.failures) d += f + "; ";
      const bool counts = rule(k).counts() == heading[kind_index(k)];
      if (!counts) d += "child counts differ; ";
      return r.ok() && counts;
    });
  }
  add(out, "tile volumes 1/48, t/24, t/24, t^2/24", [](std::string&) {
    const Golden t = kTau;
    return tile_volume(TileKind::K) == Golden(Rational(1, 48)) &&
           tile_volume(TileKind::B) == t / Golden(24) &&
           tile_volume(TileKind::C) == t / Golden(24) &&
           tile_volume(TileKind::A) == t * t / Golden(24);
  });
  return out;
}

std::vector<Check> lifts() {
  std::vector<Check> out;
  const auto conv = discover_convention();
  add(out, "a single cycle convention makes every rotation commute", [&](std::string& d) {
    if (conv) d = to_string(*conv);
    return conv.has_value();
  });
  for (const auto& e : lift_table()) {
    if (e.rotation) {
      add(out, e.label, [&](std::string& d) {
        if (!conv) return false;
        if (e.rotation->corrected()) d = "printed " + e.rotation->printed;
        return verify_lift_rotation(e, *conv) && verify_lift_rotation_perp(e, *conv);
      });
    } else {
      add(out, e.label, [&](std::string& d) {
        bool ok = true;
        for (const PairM p : {PairM(1, 1), PairM(2, 0), PairM(3, 1)}) {
          const bool hit = verify_lift_translation(e, p) &&
                           e.translation->lattice.at(p).in_root_lattice();
          if (!hit) d += "fails at (" + std::to_string(p.m1()) + "," + std::to_string(p.m2()) + ") ";
          ok = ok && hit;
        }
        return ok;
      });
    }
  }
  return out;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "relations") return Suite::Relations;
  if (name == "orbits") return Suite::Orbits;
  if (name == "rules") return Suite::Rules;
  if (name == "lifts") return Suite::Lifts;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Relations: return "relations";
    case Suite::Orbits: return "orbits";
    case Suite::Rules: return "rules";
    case Suite::Lifts: return "lifts";
  }
  return "?";
}

std::vector<Check> run_suite(Suite s) {
  switch (s) {
    case Suite::Relations: return relations();
    case Suite::Orbits: return orbits();
    case Suite::Rules: return rules_suite();
    case Suite::Lifts: return lifts();
  }
  return {};
}

}  // namespace danzer
