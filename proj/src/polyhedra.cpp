#include "danzer/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "danzer/h3_group.hpp"

namespace danzer {

namespace {

using IndexMap = std::map<Vec3, int, Vec3Less>;

void rotate_to_min(std::vector<int>& cycle) {
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
}

// Orders the points of a convex face (no three collinear) counter-clockwise
// around outward normal n.
std::vector<int> convex_cycle(const std::vector<Vec3>& pts, const std::vector<int>& idx,
                              const Vec3& n) {
  const std::size_t k = idx.size();
  auto next_of = [&](std::size_t i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const Vec3 e = pts[idx[j]] - pts[idx[i]];
      bool all_left = true;
      for (std::size_t q = 0; q < k && all_left; ++q) {
        if (q == i || q == j) continue;
        all_left = dot(n, cross(e, Vec3(pts[idx[q]] - pts[idx[i]]))).sign() > 0;
      }
      if (all_left) return j;
    }
    throw std::logic_error("face is not strictly convex");
  };
  std::vector<int> cycle{idx[0]};
  std::size_t cur = next_of(0);
  while (cur != 0) {
    cycle.push_back(idx[cur]);
    if (cycle.size() > k) throw std::logic_error("face cycle does not close");
    cur = next_of(cur);
  }
  if (cycle.size() != k) throw std::logic_error("face cycle is incomplete");
  rotate_to_min(cycle);
  return cycle;
}

// Faces of the convex hull of pts lying on planes normal to the given
// directions. Directions touching fewer than three points are skipped.
std::vector<std::vector<int>> supporting_faces(const std::vector<Vec3>& pts,
                                               const std::vector<Vec3>& normals) {
  std::vector<std::vector<int>> faces;
  for (const Vec3& n : normals) {
    Golden best = dot(n, pts[0]);
    for (const Vec3& p : pts) best = std::max(best, dot(n, p));
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(n, pts[i]) == best) on.push_back(static_cast<int>(i));
    if (on.size() >= 3) faces.push_back(convex_cycle(pts, on, n));
  }
  std::sort(faces.begin(), faces.end());
  return faces;
}

std::vector<Vec3> axis_directions() {
  const WeightTriple w = weight_triple();
  std::vector<Vec3> out;
  for (const Vec3& v : {w.v1, w.v2, w.v3}) {
    auto orb = h3().orbit(v);
    out.insert(out.end(), orb.begin(), orb.end());
  }
  return out;
}

std::vector<Vec3> sorted_union(std::vector<Vec3> a, const std::vector<Vec3>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(), Vec3Less{});
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

struct TriangleLess {
  bool operator()(const Triangle& x, const Triangle& y) const {
    for (int i = 0; i < 3; ++i) {
      const auto c = compare(x[i], y[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

Triangle rotate_to_min(Triangle t) {
  const Vec3Less less;
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (less(t[i], t[m])) m = i;
  return {t[m], t[(m + 1) % 3], t[(m + 2) % 3]};
}

Triangle sorted_key(Triangle t) {
  std::sort(t.begin(), t.end(), Vec3Less{});
  return t;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = cross(Vec3(b - a), Vec3(c - a));
  return n(0).is_zero() && n(1).is_zero() && n(2).is_zero();
}

}  // namespace

std::vector<std::pair<int, int>> PolyMesh::edges() const {
  std::set<std::pair<int, int>> e;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i];
      const int b = f[(i + 1) % f.size()];
      e.emplace(std::min(a, b), std::max(a, b));
    }
  return {e.begin(), e.end()};
}

long PolyMesh::euler_characteristic() const {
  return static_cast<long>(vertices.size()) - static_cast<long>(edges().size()) +
         static_cast<long>(faces.size());
}

bool PolyMesh::is_closed_oriented() const {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : faces)
    for (std::size_t i = 0; i < f.size(); ++i) ++directed[{f[i], f[(i + 1) % f.size()]}];
  for (const auto& [e, n] : directed) {
    if (n != 1) return false;
    const auto rev = directed.find({e.second, e.first});
    if (rev == directed.end() || rev->second != 1) return false;
  }
  return true;
}

std::map<Golden, std::size_t> radius_classes(const PolyMesh& mesh) {
  std::map<Golden, std::size_t> out;
  for (const Vec3& v : mesh.vertices) ++out[norm2(v)];
  return out;
}

std::vector<Golden> face_edge_norms(const PolyMesh& mesh, std::size_t face) {
  const auto& f = mesh.faces.at(face);
  std::vector<Golden> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(norm2(mesh.vertices[f[i]] - mesh.vertices[f[(i + 1) % f.size()]]));
  std::sort(out.begin(), out.end());
  return out;
}

PolyMesh orbit_polyhedron(PolyhedronRow row, const PairM& p) {
  if (p.is_zero()) throw std::invalid_argument("the pair (0, 0) gives a degenerate polyhedron");
  const Golden g = scale_factor(p).golden_part;
  PolyMesh mesh;
  mesh.vertices = h3().orbit(Vec3(g * row_seed(row)));
  // Negative scale (e.g. m2 < 0) flips the seed; the orbit is unaffected.
  mesh.faces = supporting_faces(mesh.vertices, axis_directions());
  return mesh;
}

PolyMesh triacontahedron() {
  const WeightTriple w = weight_triple();
  PolyMesh mesh;
  mesh.vertices = sorted_union(h3().orbit(w.v1), h3().orbit(w.v3));
  mesh.faces = supporting_faces(mesh.vertices, h3().orbit(w.v2));
  return mesh;
}

std::vector<Tile> tile_orbit(TileKind kind) {
  std::vector<Tile> out;
  out.reserve(h3().size());
  for (const auto& el : h3().elements()) out.push_back({kind, Motion::rotation(el.mat), 0});
  return out;
}

std::vector<Triangle> boundary_extract(const std::vector<Tile>& tiles) {
  std::map<Triangle, std::pair<int, Triangle>, TriangleLess> seen;
  for (const Tile& tile : tiles) {
    const Tetra v = tile.vertices();
    for (int skip = 0; skip < 4; ++skip) {
      Triangle f;
      int k = 0;
      for (int i = 0; i < 4; ++i)
        if (i != skip) f[k++] = v[i];
      // Outward: the opposite vertex lies on the negative side.
      if (orientation(f[0], f[1], f[2], v[skip]).sign() > 0) std::swap(f[1], f[2]);
      auto it = seen.try_emplace(sorted_key(f), 0, rotate_to_min(f)).first;
      if (++it->second.first > 2)
        throw std::runtime_error("a face is shared by more than two tiles");
    }
  }
  std::vector<Triangle> out;
  for (const auto& [key, entry] : seen)
    if (entry.first == 1) out.push_back(entry.second);
  return out;
}

PolyMesh coplanar_merge(const std::vector<Triangle>& faces) {
  IndexMap index;
  for (const Triangle& f : faces)
    for (const Vec3& p : f) index.emplace(p, 0);
  std::vector<Vec3> pts;
  for (auto& [p, i] : index) {
    i = static_cast<int>(pts.size());
    pts.push_back(p);
  }

  const std::size_t nf = faces.size();
  std::vector<std::array<int, 3>> tri(nf);
  for (std::size_t f = 0; f < nf; ++f)
    for (int i = 0; i < 3; ++i) tri[f][i] = index.at(faces[f][i]);

  std::map<std::pair<int, int>, std::vector<std::size_t>> directed;
  for (std::size_t f = 0; f < nf; ++f)
    for (int i = 0; i < 3; ++i) directed[{tri[f][i], tri[f][(i + 1) % 3]}].push_back(f);
  for (const auto& [e, fs] : directed) {
    const auto rev = directed.find({e.second, e.first});
    if (fs.size() != 1 || rev == directed.end() || rev->second.size() != 1)
      throw std::invalid_argument("surface is not a closed oriented manifold");
  }

  DisjointSets groups(nf);
  for (const auto& [e, fs] : directed) {
    const std::size_t f = fs[0];
    const std::size_t g = directed.at({e.second, e.first})[0];
    const auto& t = tri[f];
    const auto& u = tri[g];
    int apex = u[0] + u[1] + u[2] - e.first - e.second;
    if (orientation(pts[t[0]], pts[t[1]], pts[t[2]], pts[apex]).is_zero())
      groups.unite(static_cast<int>(f), static_cast<int>(g));
  }

  // Boundary loop of each group: directed edges whose reverse lies outside.
  std::map<int, std::map<int, int>> next;
  for (const auto& [e, fs] : directed) {
    const int f = groups.find(static_cast<int>(fs[0]));
    const int g = groups.find(static_cast<int>(directed.at({e.second, e.first})[0]));
    if (f == g) continue;
    if (!next[f].emplace(e.first, e.second).second)
      throw std::invalid_argument("merged face boundary is pinched");
  }

  std::vector<std::vector<int>> loops;
  for (const auto& [g, succ] : next) {
    std::vector<int> loop{succ.begin()->first};
    for (int v = succ.begin()->second; v != loop.front(); v = succ.at(v)) {
      loop.push_back(v);
      if (loop.size() > succ.size()) throw std::invalid_argument("merged face boundary is open");
    }
    if (loop.size() != succ.size())
      throw std::invalid_argument("merged face has more than one boundary loop");
    loops.push_back(std::move(loop));
  }

  // A vertex survives if it is a corner of at least one face.
  std::vector<char> corner(pts.size(), 0);
  for (const auto& loop : loops) {
    const std::size_t k = loop.size();
    for (std::size_t i = 0; i < k; ++i) {
      const int prev = loop[(i + k - 1) % k];
      const int cur = loop[i];
      const int nxt = loop[(i + 1) % k];
      if (!collinear(pts[prev], pts[cur], pts[nxt])) corner[cur] = 1;
    }
  }

  std::vector<int> remap(pts.size(), -1);
  PolyMesh mesh;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (corner[i]) {
      remap[i] = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(pts[i]);
    }
  for (const auto& loop : loops) {
    std::vector<int> f;
    for (int v : loop)
      if (remap[v] >= 0) f.push_back(remap[v]);
    rotate_to_min(f);
    mesh.faces.push_back(std::move(f));
  }
  std::sort(mesh.faces.begin(), mesh.faces.end());
  return mesh;
}

PolyMesh abck_polyhedron(TileKind kind) {
  if (kind == TileKind::A)
    throw std::invalid_argument("the orbit of tile A does not bound a manifold polyhedron");
  return coplanar_merge(boundary_extract(tile_orbit(kind)));
}

}  // namespace danzer
