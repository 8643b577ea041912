#pragma once

#include <map>
#include <utility>
#include <vector>

#include "danzer/d6_lattice.hpp"
#include "danzer/tiles.hpp"

namespace danzer {

/// Polygon mesh with exact vertices. Faces are index cycles, counter-clockwise
/// seen from outside, rotated so the smallest index comes first.
struct PolyMesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;

  /// Undirected edges (i < j), sorted.
  std::vector<std::pair<int, int>> edges() const;
  long euler_characteristic() const;
  /// Every directed edge used once and its reverse used once.
  bool is_closed_oriented() const;
};

/// Squared radius -> number of vertices at that radius.
std::map<Golden, std::size_t> radius_classes(const PolyMesh& mesh);
/// Sorted squared edge lengths of one face.
std::vector<Golden> face_edge_norms(const PolyMesh& mesh, std::size_t face);

/// H3 orbit of golden_part(p) * row_seed(row), faces by exact supporting
/// planes normal to 2-, 3- and 5-fold axes. Throws for the zero pair.
PolyMesh orbit_polyhedron(PolyhedronRow row, const PairM& p);

/// Hull of the orbits of (1,t,0)/2 and (0,t,-s)/2: 32 vertices, 30 rhombi.
PolyMesh triacontahedron();

/// The 120 copies g * canonical_tile(kind), g in H3, in group order.
std::vector<Tile> tile_orbit(TileKind kind);

/// Tile faces that occur exactly once, outward-oriented, each rotated to
/// start at its smallest vertex. Throws std::runtime_error if a face is
/// shared by more than two tiles.
std::vector<Triangle> boundary_extract(const std::vector<Tile>& tiles);

/// Merges edge-adjacent coplanar triangles into polygons and drops vertices
/// that end up interior to a face or in the middle of a straight edge.
/// Throws std::invalid_argument on non-manifold input.
PolyMesh coplanar_merge(const std::vector<Triangle>& faces);

/// Boundary of the 120-copy orbit of a tile. K gives the triacontahedron.
/// A is rejected with std::invalid_argument: its orbit is not a manifold.
PolyMesh abck_polyhedron(TileKind kind);

}  // namespace danzer
