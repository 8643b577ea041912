#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "danzer/geometry.hpp"

namespace danzer {

enum class TileKind { A, B, C, K };

inline constexpr std::array<TileKind, 4> kAllKinds = {TileKind::A, TileKind::B, TileKind::C,
                                                     TileKind::K};

char kind_char(TileKind k);
int kind_index(TileKind k);  // A=0 .. K=3
/// Throws std::invalid_argument for anything but "A", "B", "C", "K".
TileKind parse_kind(std::string_view s);

/// Canonical vertices, ordered so the signed volume is positive.
///   K = {0, (1,t,0)/2, (0,t,0)/2, (0,t,-s)/2}
///   B = {0, t(1,t,0)/2, (0,1,0), t(0,t,-s)/2}
///   C = {0, (t,0,1)/2, (t^2,1,0)/2, (t^2,t,1)/2}
///   A = the A of the tC construction with its placement undone.
const Tetra& canonical_tile(TileKind kind);

/// A placed tile; vertices = place(canonical_tile(kind)).
struct Tile {
  TileKind kind = TileKind::K;
  Motion place;
  int depth = 0;

  Tetra vertices() const { return place.apply(canonical_tile(kind)); }
  bool mirrored() const { return place.is_mirror(); }
};

/// Six squared edge lengths sorted by value.
std::array<Golden, 6> edge_norms(const Tetra& t);
std::array<Golden, 6> tile_edge_norms(TileKind kind);
Golden tile_volume(TileKind kind);

/// Motion m in H3 x translations with m(canonical_tile(kind)) equal to the
/// given vertex set (as a set). Searches all 120 linear parts.
std::optional<Motion> locate(TileKind kind, const std::vector<Vec3>& vertices);

/// The 4 tiles (8 for K) forming the octahedron <kind>.
std::vector<Tile> octahedron_tiles(TileKind kind);
/// Corner vertices of <kind>, sorted. Six in every case; for <K> the shared
/// rhombus centre is not a corner.
std::vector<Vec3> octahedron(TileKind kind);

/// p -> (x, t - y, z): the affine reflection in the golden rhombus of K.
Motion k_rhombus_reflection();

/// One of the three 4K pyramids dissecting <K>.
struct Pyramid {
  std::string label;        // "a", "b", "c"
  Vec3 apex;
  std::array<Vec3, 4> base;  // cyclic order
  std::array<Tile, 4> tiles;
  Golden base_edge_norm2;
  Golden height_norm2;
};
/// (a) base edge t^-1 a, height t/2; (b) a, t^-1/2; (c) b, 1/2.
std::array<Pyramid, 3> k_pyramids();

}  // namespace danzer
