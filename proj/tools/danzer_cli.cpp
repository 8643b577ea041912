// danzer: generate icosahedral polyhedra, Danzer tiles and inflation patches,
// and run the exact verification suites.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 invalid
// arguments.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "danzer/d6_lift.hpp"
#include "danzer/io.hpp"
#include "danzer/polyhedra.hpp"
#include "danzer/substitution.hpp"
#include "danzer/verify.hpp"

namespace {

using namespace danzer;

enum class Format { Off, Obj, Json };

const std::map<std::string, Format> kFormats = {
    {"off", Format::Off}, {"obj", Format::Obj}, {"json", Format::Json}};

// Writes to --out if given, stdout otherwise.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

std::string render(const PolyMesh& mesh, Format fmt, int precision) {
  std::ostringstream os;
  switch (fmt) {
    case Format::Off: write_off(os, mesh, precision); break;
    case Format::Obj: write_obj(os, mesh, precision); break;
    case Format::Json: os << to_json(mesh).dump(2) << '\n'; break;
  }
  return os.str();
}

int run_verify(const std::string& which) {
  std::vector<Suite> suites;
  if (which == "all")
    suites = {Suite::Relations, Suite::Orbits, Suite::Rules, Suite::Lifts};
  else
    suites = {parse_suite(which)};
  bool all = true;
  for (Suite s : suites) {
    for (const Check& c : run_suite(s)) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << suite_name(s) << ": " << c.name;
      if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
      std::cout << '\n';
      all = all && c.passed;
    }
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? 0 : 1;
}

void print_lifts() {
  const auto conv = discover_convention();
  std::cout << "cycle convention: " << (conv ? to_string(*conv) : "none found") << '\n';
  const PairM probe(1, 1);
  for (const auto& e : lift_table()) {
    std::cout << e.label << '\n';
    if (e.rotation) {
      const auto& r = *e.rotation;
      std::cout << "  3D:  ";
      for (int i = 0; i < 3; ++i) {
        std::cout << "[";
        for (int j = 0; j < 3; ++j) std::cout << (j ? ", " : "") << r.g(i, j);
        std::cout << "]";
      }
      std::cout << "\n  D6:  " << r.resolved;
      if (r.corrected()) std::cout << "   (printed " << r.printed << ")";
      if (conv) {
        std::cout << "\n  map: " << parse_cycles(r.resolved, *conv).to_string()
                  << (verify_lift_rotation(e, *conv) ? "   commutes" : "   DOES NOT COMMUTE");
      }
      std::cout << '\n';
    } else {
      const auto& t = *e.translation;
      std::cout << "  3D:  c * (" << t.t3(0) << ", " << t.t3(1) << ", " << t.t3(2) << ")\n"
                << "  D6:  " << t.lattice.to_string() << '\n'
                << "  (1,1) -> " << t.lattice.at(probe).to_string()
                << (verify_lift_translation(e, probe) ? "   projects correctly" : "   MISMATCH")
                << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact golden-field construction of icosahedral polyhedra and Danzer tilings"};
  app.require_subcommand(1);

  int precision = 12;
  app.add_option("--precision", precision, "Significant digits in OFF/OBJ output")
      ->check(CLI::Range(1, 17));

  auto* poly = app.add_subcommand("polyhedron", "Orbit polyhedron for a pair (m1, m2)");
  std::string row_arg;
  long m1 = 0, m2 = 0;
  Format poly_fmt = Format::Off;
  std::string poly_out;
  poly->add_option("--row", row_arg, "Polyhedron name")->required();
  poly->add_option("--m1", m1)->required();
  poly->add_option("--m2", m2)->required();
  poly->add_option("--format", poly_fmt)->transform(CLI::CheckedTransformer(kFormats));
  poly->add_option("--out", poly_out, "Output path (stdout if omitted)");

  auto* tile = app.add_subcommand("tile", "Canonical tile or its octahedron");
  std::string kind_arg;
  bool octa = false;
  Format tile_fmt = Format::Json;
  std::string tile_out;
  tile->add_option("--kind", kind_arg)->required()->check(CLI::IsMember({"A", "B", "C", "K"}));
  tile->add_flag("--octahedron", octa);
  tile->add_option("--format", tile_fmt)->transform(CLI::CheckedTransformer(kFormats));
  tile->add_option("--out", tile_out);

  auto* infl = app.add_subcommand("inflate", "Inflate a seed tile");
  std::string seed_arg;
  int depth = 0;
  bool counts_only = false;
  std::string infl_out;
  infl->add_option("--seed", seed_arg)->required()->check(CLI::IsMember({"A", "B", "C", "K"}));
  infl->add_option("--depth", depth)->required()->check(CLI::Range(0, 30));
  infl->add_flag("--counts-only", counts_only);
  infl->add_option("--out", infl_out);

  auto* abck = app.add_subcommand("abck-poly", "Boundary of the 120-copy orbit of a tile");
  std::string abck_kind;
  Format abck_fmt = Format::Off;
  std::string abck_out;
  abck->add_option("--kind", abck_kind)->required()->check(CLI::IsMember({"B", "C", "K"}));
  abck->add_option("--format", abck_fmt)->transform(CLI::CheckedTransformer(kFormats));
  abck->add_option("--out", abck_out);

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"relations", "orbits", "rules", "lifts", "all"}));

  auto* lift = app.add_subcommand("lift", "Rotation and translation lifts to D6");
  bool lift_print = false;
  lift->add_flag("--print", lift_print);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poly) {
      const PolyMesh mesh = orbit_polyhedron(parse_row(row_arg), PairM(m1, m2));
      emit(poly_out, render(mesh, poly_fmt, precision));
    } else if (*tile) {
      const TileKind k = parse_kind(kind_arg);
      if (tile_fmt == Format::Json) {
        Json j;
        j["kind"] = kind_arg;
        if (octa) {
          Json tiles = Json::array();
          for (const Tile& t : octahedron_tiles(k)) tiles.push_back(to_json(t));
          Json corners = Json::array();
          for (const Vec3& v : octahedron(k)) corners.push_back(to_json(v));
          j["corners"] = std::move(corners);
          j["tiles"] = std::move(tiles);
        } else {
          j["vertices"] = tetra_to_json(canonical_tile(k));
          j["volume"] = to_json(tile_volume(k));
        }
        emit(tile_out, j.dump(2) + "\n");
      } else {
        const std::vector<Tile> tiles = octa ? octahedron_tiles(k)
                                             : std::vector<Tile>{Tile{k, Motion(), 0}};
        const PolyMesh mesh = coplanar_merge(boundary_extract(tiles));
        emit(tile_out, render(mesh, tile_fmt, precision));
      }
    } else if (*infl) {
      const Patch p = inflate_n(parse_kind(seed_arg), depth);
      if (counts_only) {
        const auto n = p.counts();
        std::ostringstream os;
        os << "A:" << n[0] << " B:" << n[1] << " C:" << n[2] << " K:" << n[3] << '\n';
        emit(infl_out, os.str());
      } else {
        emit(infl_out, to_json(p).dump(1) + "\n");
      }
    } else if (*abck) {
      emit(abck_out, render(abck_polyhedron(parse_kind(abck_kind)), abck_fmt, precision));
    } else if (*ver) {
      return run_verify(suite);
    } else if (*lift) {
      if (!lift_print) {
        std::cerr << "lift: nothing to do (use --print)\n";
        return 2;
      }
      print_lifts();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
