#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "danzer/polyhedra.hpp"
#include "danzer/substitution.hpp"

namespace danzer {

using Json = nlohmann::ordered_json;

/// {"a": [num, den], "b": [num, den]}; an integer that does not fit in 64
/// bits is written as a decimal string.
Json to_json(const Golden& x);
/// Throws std::invalid_argument on malformed input.
Golden golden_from_json(const Json& j);

Json to_json(const Vec3& v);
Json to_json(const Mat3& m);  // three rows
Vec3 vec3_from_json(const Json& j);
Mat3 mat3_from_json(const Json& j);

Json to_json(const Tile& tile);
Json to_json(const Patch& patch);
Patch patch_from_json(const Json& j);

Json to_json(const PolyMesh& mesh);
Json tetra_to_json(const Tetra& t);

void write_off(std::ostream& os, const PolyMesh& mesh, int precision = 12);
/// Polygons are fan-triangulated; indices are 1-based.
void write_obj(std::ostream& os, const PolyMesh& mesh, int precision = 12);

struct OffMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<int>> faces;
  std::size_t declared_edges = 0;
};
/// Reads the OFF subset written above. Throws std::runtime_error on bad
/// counts, out-of-range indices or truncated input.
OffMesh read_off(std::istream& is);

}  // namespace danzer
