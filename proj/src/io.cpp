#include "danzer/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace danzer {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw std::invalid_argument("bad integer string in JSON");
    return z;
  }
  throw std::invalid_argument("expected an integer in JSON");
}

Json rational_json(const Rational& q) {
  return Json::array({integer_json(q.get_num()), integer_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

std::string fmt(double x, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << (x == 0.0 ? 0.0 : x);  // no "-0"
  return os.str();
}

void write_vertex(std::ostream& os, const Vec3& v, int precision, const char* prefix) {
  const auto d = to_double(v);
  os << prefix << fmt(d[0], precision) << ' ' << fmt(d[1], precision) << ' '
     << fmt(d[2], precision) << '\n';
}

}  // namespace

Json to_json(const Golden& x) {
  Json j;
  j["a"] = rational_json(x.a());
  j["b"] = rational_json(x.b());
  return j;
}

Golden golden_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    throw std::invalid_argument("expected {\"a\": ..., \"b\": ...}");
  return Golden(rational_from_json(j["a"]), rational_from_json(j["b"]));
}

Json to_json(const Vec3& v) { return Json::array({to_json(v(0)), to_json(v(1)), to_json(v(2))}); }

Json to_json(const Mat3& m) {
  Json rows = Json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(to_json(Vec3(m.row(r).transpose())));
  return rows;
}

Vec3 vec3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected 3 components");
  return Vec3(golden_from_json(j[0]), golden_from_json(j[1]), golden_from_json(j[2]));
}

Mat3 mat3_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected 3 rows");
  Mat3 m;
  for (int r = 0; r < 3; ++r) m.row(r) = vec3_from_json(j[r]).transpose();
  return m;
}

Json to_json(const Tile& tile) {
  Json j;
  j["kind"] = std::string(1, kind_char(tile.kind));
  j["rot"] = to_json(tile.place.rot());
  j["tr"] = to_json(tile.place.tr());
  j["depth"] = tile.depth;
  return j;
}

Json to_json(const Patch& patch) {
  Json j;
  j["scale_exponent"] = patch.scale_exponent;
  Json tiles = Json::array();
  for (const Tile& t : patch.tiles) tiles.push_back(to_json(t));
  j["tiles"] = std::move(tiles);
  return j;
}

Patch patch_from_json(const Json& j) {
  Patch p;
  p.scale_exponent = j.at("scale_exponent").get<int>();
  for (const Json& t : j.at("tiles")) {
    Tile tile;
    tile.kind = parse_kind(t.at("kind").get<std::string>());
    tile.place = Motion(mat3_from_json(t.at("rot")), vec3_from_json(t.at("tr")));
    tile.depth = t.at("depth").get<int>();
    p.tiles.push_back(std::move(tile));
  }
  return p;
}

Json to_json(const PolyMesh& mesh) {
  Json j;
  Json verts = Json::array();
  for (const Vec3& v : mesh.vertices) verts.push_back(to_json(v));
  j["vertices"] = std::move(verts);
  j["faces"] = mesh.faces;
  return j;
}

Json tetra_to_json(const Tetra& t) {
  Json j = Json::array();
  for (const Vec3& v : t) j.push_back(to_json(v));
  return j;
}

void write_off(std::ostream& os, const PolyMesh& mesh, int precision) {
  os << "OFF\n"
     << mesh.vertices.size() << ' ' << mesh.faces.size() << ' ' << mesh.edges().size() << '\n';
  for (const Vec3& v : mesh.vertices) write_vertex(os, v, precision, "");
  for (const auto& f : mesh.faces) {
    os << f.size();
    for (int i : f) os << ' ' << i;
    os << '\n';
  }
}

void write_obj(std::ostream& os, const PolyMesh& mesh, int precision) {
  for (const Vec3& v : mesh.vertices) write_vertex(os, v, precision, "v ");
  for (const auto& f : mesh.faces)
    for (std::size_t k = 1; k + 1 < f.size(); ++k)
      os << "f " << f[0] + 1 << ' ' << f[k] + 1 << ' ' << f[k + 1] + 1 << '\n';
}

OffMesh read_off(std::istream& is) {
  std::string magic;
  if (!(is >> magic) || magic != "OFF") throw std::runtime_error("missing OFF header");
  std::size_t nv = 0, nf = 0, ne = 0;
  if (!(is >> nv >> nf >> ne)) throw std::runtime_error("missing OFF counts");
  OffMesh m;
  m.declared_edges = ne;
  m.vertices.resize(nv);
  for (auto& v : m.vertices)
    if (!(is >> v[0] >> v[1] >> v[2])) throw std::runtime_error("truncated vertex list");
  m.faces.resize(nf);
  for (auto& f : m.faces) {
    std::size_t k = 0;
    if (!(is >> k) || k < 3) throw std::runtime_error("bad face size");
    f.resize(k);
    for (int& i : f) {
      if (!(is >> i)) throw std::runtime_error("truncated face list");
      if (i < 0 || static_cast<std::size_t>(i) >= nv)
        throw std::runtime_error("face index out of range");
    }
  }
  std::string extra;
  if (is >> extra) throw std::runtime_error("trailing data after OFF faces");
  return m;
}

}  // namespace danzer
