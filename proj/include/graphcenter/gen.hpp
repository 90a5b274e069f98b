#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "profile.hpp"
#include "recognize.hpp"
#include "rng.hpp"

namespace gc {
namespace gen {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

inline Graph path(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw input_error("cycle: need n >= 3");
  EdgeList e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  EdgeList e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

// rows x cols grid of vertices; vertex (r,c) has index r*cols + c.
inline Graph square_grid(int rows, int cols) {
  EdgeList e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

// Grid plus diagonals in both directions (king move adjacency).
inline Graph king_grid(int rows, int cols) {
  EdgeList e;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (r + 1 < rows && c + 1 < cols) e.emplace_back(id(r, c), id(r + 1, c + 1));
      if (r + 1 < rows && c > 0) e.emplace_back(id(r, c), id(r + 1, c - 1));
    }
  return Graph(rows * cols, e);
}

// Parallelogram piece of the triangular lattice with edge-lengths a and b:
// vertices (i,j), 0<=i<=a, 0<=j<=b, with grid edges plus one diagonal per
// unit square (all faces triangles).
inline Graph triangular_lozenge(int a, int b) {
  EdgeList e;
  auto id = [&](int i, int j) { return i * (b + 1) + j; };
  for (int i = 0; i <= a; ++i)
    for (int j = 0; j <= b; ++j) {
      if (i < a) e.emplace_back(id(i, j), id(i + 1, j));
      if (j < b) e.emplace_back(id(i, j), id(i, j + 1));
      if (i < a && j < b) e.emplace_back(id(i, j), id(i + 1, j + 1));
    }
  return Graph((a + 1) * (b + 1), e);
}

// Triangle piece of the triangular lattice: vertices (i,j) with i+j <= s.
inline Graph triangular_triangle(int s) {
  std::vector<std::pair<int, int>> pts;
  for (int i = 0; i <= s; ++i)
    for (int j = 0; i + j <= s; ++j) pts.emplace_back(i, j);
  auto id = [&](int i, int j) {
    auto it = std::lower_bound(pts.begin(), pts.end(), std::make_pair(i, j));
    return static_cast<Vertex>(it - pts.begin());
  };
  EdgeList e;
  for (auto [i, j] : pts) {
    if (i + 1 + j <= s) e.emplace_back(id(i, j), id(i + 1, j));
    if (i + j + 1 <= s) e.emplace_back(id(i, j), id(i, j + 1));
    if (i + 1 + j + 1 <= s) e.emplace_back(id(i, j), id(i + 1, j + 1));
  }
  return Graph(static_cast<int>(pts.size()), e);
}

inline Graph hypercube(int r) {
  if (r < 1 || r > 20) throw input_error("hypercube: bad dimension");
  int n = 1 << r;
  EdgeList e;
  for (int v = 0; v < n; ++v)
    for (int bit = 0; bit < r; ++bit)
      if (!(v & (1 << bit))) e.emplace_back(v, v | (1 << bit));
  return Graph(n, e);
}

// 5-wheel: C5 rim joined to hubs forming a clique.
inline Graph wheel5(int hubs = 1) {
  EdgeList e;
  for (int i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (int h = 0; h < hubs; ++h) {
    for (int i = 0; i < 5; ++i) e.emplace_back(5 + h, i);
    for (int h2 = 0; h2 < h; ++h2) e.emplace_back(5 + h, 5 + h2);
  }
  return Graph(5 + hubs, e);
}

inline Graph random_tree(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  EdgeList e;
  for (int v = 1; v < n; ++v)
    e.emplace_back(static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(v))), v);
  return Graph(n, e);
}

// Random connected graph: random tree plus extra random edges.
inline Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::set<std::pair<Vertex, Vertex>> edges;
  for (int v = 1; v < n; ++v)
    edges.insert({static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(v))), v});
  int attempts = 0;
  while (extra_edges > 0 && attempts < 50 * extra_edges + 100) {
    ++attempts;
    Vertex u = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
    Vertex v = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edges.insert({u, v}).second) --extra_edges;
  }
  return Graph(n, EdgeList(edges.begin(), edges.end()));
}

// Cartesian product of two graphs (used with trees: cube-free median corpus).
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  EdgeList e;
  auto id = [&](Vertex a, Vertex b) { return a * g2.n() + b; };
  for (Vertex a = 0; a < g1.n(); ++a)
    for (Vertex b = 0; b < g2.n(); ++b) {
      for (Vertex b2 : g2.neighbors(b))
        if (b < b2) e.emplace_back(id(a, b), id(a, b2));
      for (Vertex a2 : g1.neighbors(a))
        if (a < a2) e.emplace_back(id(a, b), id(a2, b));
    }
  return Graph(g1.n() * g2.n(), e);
}

// Simplex graph of a triangle-free seed graph: vertices are the empty set,
// the vertices and the edges of the seed, adjacent when one contains the
// other with one element fewer.
inline Graph simplex_graph_triangle_free(const Graph& h) {
  for (auto [u, v] : h.edges())
    for (Vertex w : h.neighbors(u))
      if (w != v && h.has_edge(w, v))
        throw input_error("simplex_graph: seed graph has a triangle");
  // ids: 0 = empty clique; 1..n = singletons; then edges.
  EdgeList e;
  for (Vertex v = 0; v < h.n(); ++v) e.emplace_back(0, 1 + v);
  int next = 1 + h.n();
  for (auto [u, v] : h.edges()) {
    e.emplace_back(next, 1 + u);
    e.emplace_back(next, 1 + v);
    ++next;
  }
  return Graph(next, e);
}

// K_{n,n} minus a perfect matching.
inline Graph b_n(int n) {
  if (n < 3) throw input_error("b_n: need n >= 3 (smaller instances are disconnected)");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, n + j);
  return Graph(2 * n, e);
}

// b_n extended by two adjacent vertices a (adjacent to all b_j) and b
// (adjacent to all a_i); bipartite Helly for every n.
inline Graph b_hat_n(int n) {
  if (n < 2) throw input_error("b_hat_n: need n >= 2");
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) e.emplace_back(i, n + j);
  Vertex a = 2 * n, b = 2 * n + 1;
  e.emplace_back(a, b);
  for (int j = 0; j < n; ++j) e.emplace_back(a, n + j);
  for (int i = 0; i < n; ++i) e.emplace_back(b, i);
  return Graph(2 * n + 2, e);
}

// The weighted-profile counterexample instance: a (k) x (2k+2) grid (edge
// lengths) with a horizontal path of length k(k+1) glued to the bottom-left
// grid corner.  Profile: weight 1 on the far path end l, weight k+1 on the
// bottom-right grid corner r.  The named vertices match the walkthrough used
// in the tests: c is the unique center.
struct GridPlusPath {
  Graph graph;
  Profile profile;
  Vertex c, l, r;     // gluing corner, path end, weighted grid corner
  Vertex v, z, zp;    // upper-left corner and its two neighbors
  Vertex u, t;        // upper-right corner and its vertical neighbor
};

inline GridPlusPath grid_plus_path(int k) {
  if (k < 1) throw input_error("grid_plus_path: need k >= 1");
  const int W = k + 1;       // columns (x = 0..k)
  const int H = 2 * k + 3;   // rows (y = 0..2k+2)
  auto id = [&](int x, int y) { return y * W + x; };
  EdgeList e;
  for (int y = 0; y < H; ++y)
    for (int x = 0; x < W; ++x) {
      if (x + 1 < W) e.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < H) e.emplace_back(id(x, y), id(x, y + 1));
    }
  const int grid_n = W * H;
  const int plen = k * (k + 1);
  e.emplace_back(id(0, 0), grid_n);
  for (int i = 0; i + 1 < plen; ++i) e.emplace_back(grid_n + i, grid_n + i + 1);
  GridPlusPath out{Graph(grid_n + plen, e), Profile(), 0, 0, 0, 0, 0, 0, 0, 0};
  out.c = id(0, 0);
  out.l = grid_n + plen - 1;
  out.r = id(k, 0);
  out.v = id(0, 2 * k + 2);
  out.z = id(1, 2 * k + 2);
  out.zp = id(0, 2 * k + 1);
  out.u = id(k, 2 * k + 2);
  out.t = id(k, 2 * k + 1);
  out.profile = Profile::from_integers({{out.l, 1}, {out.r, k + 1}});
  return out;
}

// Hitting-set gadget graph.  x_sets and y_sets are subsets of {0..universe-1};
// the universe must be covered by both lists.  Returns the graph, the
// distinguished vertex v and the unit profile on all vertices.
struct HseInstance {
  Graph graph;
  Profile profile;
  Vertex v;
  std::vector<Vertex> x_vertices, y_vertices, u_vertices;
  Vertex a, b, c, w;
};

inline HseInstance gen_hse(const std::vector<std::vector<int>>& x_sets,
                           const std::vector<std::vector<int>>& y_sets,
                           int universe) {
  if (universe < 1) throw input_error("gen_hse: empty universe");
  std::vector<char> covered_x(static_cast<size_t>(universe), 0);
  std::vector<char> covered_y(static_cast<size_t>(universe), 0);
  for (const auto& s : x_sets)
    for (int u : s) {
      if (u < 0 || u >= universe) throw input_error("gen_hse: element out of range");
      covered_x[static_cast<size_t>(u)] = 1;
    }
  for (const auto& s : y_sets)
    for (int u : s) {
      if (u < 0 || u >= universe) throw input_error("gen_hse: element out of range");
      covered_y[static_cast<size_t>(u)] = 1;
    }
  for (int u = 0; u < universe; ++u)
    if (!covered_x[static_cast<size_t>(u)] || !covered_y[static_cast<size_t>(u)])
      throw input_error("gen_hse: universe must be covered by both set lists");

  HseInstance out{Graph(), Profile(), 0, {}, {}, {}, 0, 0, 0, 0};
  int next = 0;
  for (size_t i = 0; i < x_sets.size(); ++i) out.x_vertices.push_back(next++);
  for (size_t i = 0; i < y_sets.size(); ++i) out.y_vertices.push_back(next++);
  for (int u = 0; u < universe; ++u) out.u_vertices.push_back(next++);
  out.a = next++;
  out.b = next++;
  out.c = next++;
  out.v = next++;
  out.w = next++;

  EdgeList e;
  // U is a clique.
  for (int i = 0; i < universe; ++i)
    for (int j = i + 1; j < universe; ++j)
      e.emplace_back(out.u_vertices[static_cast<size_t>(i)],
                     out.u_vertices[static_cast<size_t>(j)]);
  // Incidence edges.
  for (size_t i = 0; i < x_sets.size(); ++i)
    for (int u : x_sets[i])
      e.emplace_back(out.x_vertices[i], out.u_vertices[static_cast<size_t>(u)]);
  for (size_t i = 0; i < y_sets.size(); ++i)
    for (int u : y_sets[i])
      e.emplace_back(out.y_vertices[i], out.u_vertices[static_cast<size_t>(u)]);
  // a~v, v~w, b~c; a,b adjacent to all of X and U; v adjacent to all of X.
  e.emplace_back(out.a, out.v);
  e.emplace_back(out.v, out.w);
  e.emplace_back(out.b, out.c);
  for (Vertex z : out.x_vertices) {
    e.emplace_back(out.a, z);
    e.emplace_back(out.b, z);
    e.emplace_back(out.v, z);
  }
  for (Vertex z : out.u_vertices) {
    e.emplace_back(out.a, z);
    e.emplace_back(out.b, z);
  }
  out.graph = Graph(next, e);
  std::vector<Vertex> all(static_cast<size_t>(next));
  for (int i = 0; i < next; ++i) all[static_cast<size_t>(i)] = i;
  out.profile = Profile::unit(all);
  return out;
}

// Whether some set in x_sets intersects every set in y_sets.
inline bool has_hitting_set(const std::vector<std::vector<int>>& x_sets,
                            const std::vector<std::vector<int>>& y_sets) {
  for (const auto& x : x_sets) {
    bool hits_all = true;
    for (const auto& y : y_sets) {
      bool meet = false;
      for (int ux : x)
        for (int uy : y)
          if (ux == uy) meet = true;
      if (!meet) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) return true;
  }
  return false;
}

// Glues `block` to `base` by identifying block vertex `at_block` with base
// vertex `at_base`.
inline Graph glue_at_vertex(const Graph& base, Vertex at_base, const Graph& block,
                            Vertex at_block) {
  EdgeList e = base.edges();
  std::vector<Vertex> remap(static_cast<size_t>(block.n()));
  int next = base.n();
  for (Vertex v = 0; v < block.n(); ++v)
    remap[static_cast<size_t>(v)] = (v == at_block) ? at_base : next++;
  for (auto [u, v] : block.edges())
    e.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
  return Graph(next, e);
}

enum class BlockPalette { Bridged, WeaklyBridged, ConvexBalls, BipartiteHelly, CubeFreeMedian };

// Random tree-of-blocks instance: repeatedly glues random palette blocks at
// random vertices.  Gluing along a single (gated) vertex preserves all the
// palette classes, so the result stays inside the class by construction;
// small instances are re-validated by the recognizers in tests.
inline Graph block_tree(BlockPalette palette, int target_n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto pick_block = [&]() -> Graph {
    switch (palette) {
      case BlockPalette::Bridged:
        switch (rng.next_below(4)) {
          case 0: return triangular_lozenge(1 + static_cast<int>(rng.next_below(4)),
                                            1 + static_cast<int>(rng.next_below(4)));
          case 1: return triangular_triangle(1 + static_cast<int>(rng.next_below(4)));
          case 2: return complete(2 + static_cast<int>(rng.next_below(3)));
          default: return path(2 + static_cast<int>(rng.next_below(4)));
        }
      case BlockPalette::WeaklyBridged:
        switch (rng.next_below(4)) {
          case 0: return wheel5(1 + static_cast<int>(rng.next_below(2)));
          case 1: return triangular_lozenge(1 + static_cast<int>(rng.next_below(4)),
                                            1 + static_cast<int>(rng.next_below(4)));
          case 2: return triangular_triangle(1 + static_cast<int>(rng.next_below(4)));
          default: return complete(2 + static_cast<int>(rng.next_below(3)));
        }
      case BlockPalette::ConvexBalls:
        switch (rng.next_below(5)) {
          case 0: return cycle(5);
          case 1: return wheel5(1);
          case 2: return triangular_lozenge(1 + static_cast<int>(rng.next_below(4)),
                                            1 + static_cast<int>(rng.next_below(4)));
          case 3: return triangular_triangle(1 + static_cast<int>(rng.next_below(4)));
          default: return path(2 + static_cast<int>(rng.next_below(4)));
        }
      case BlockPalette::BipartiteHelly:
        switch (rng.next_below(5)) {
          case 0: return square_grid(2 + static_cast<int>(rng.next_below(3)),
                                     2 + static_cast<int>(rng.next_below(4)));
          case 1: return b_hat_n(3 + static_cast<int>(rng.next_below(2)));
          case 2: return complete_bipartite(2 + static_cast<int>(rng.next_below(3)),
                                            2 + static_cast<int>(rng.next_below(3)));
          case 3: return random_tree(2 + static_cast<int>(rng.next_below(6)),
                                     rng.next());
          default: return square_grid(2, 2 + static_cast<int>(rng.next_below(5)));
        }
      case BlockPalette::CubeFreeMedian:
      default:
        switch (rng.next_below(4)) {
          case 0: return square_grid(2 + static_cast<int>(rng.next_below(3)),
                                     2 + static_cast<int>(rng.next_below(4)));
          case 1: return cartesian_product(random_tree(2 + static_cast<int>(rng.next_below(3)), rng.next()),
                                           random_tree(2 + static_cast<int>(rng.next_below(3)), rng.next()));
          case 2: return random_tree(2 + static_cast<int>(rng.next_below(6)), rng.next());
          default: return square_grid(2, 2 + static_cast<int>(rng.next_below(5)));
        }
    }
  };
  Graph g = pick_block();
  while (g.n() < target_n) {
    Graph block = pick_block();
    Vertex at_base = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(g.n())));
    Vertex at_block =
        static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(block.n())));
    g = glue_at_vertex(g, at_base, block, at_block);
  }
  return g;
}

// Pentagon with random pendant trees glued at rim vertices (a CB instance
// that is neither weakly modular nor bipartite).
inline Graph pentagon_tail(int target_n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g = cycle(5);
  while (g.n() < target_n) {
    Graph t = random_tree(2 + static_cast<int>(rng.next_below(5)), rng.next());
    Vertex at_base = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(g.n())));
    g = glue_at_vertex(g, at_base, t, 0);
  }
  return g;
}

// Random profile with integer weights in [1, 10] (or all 1 for 0-1 profiles)
// on a random support of size between 2 and max(2, n/2).
inline Profile random_profile(const Graph& g, std::uint64_t seed, bool weighted) {
  SplitMix64 rng(seed);
  int max_support = std::max(2, g.n() / 2);
  int size = 2 + static_cast<int>(rng.next_below(
                     static_cast<std::uint64_t>(max_support - 1)));
  size = std::min(size, g.n());
  std::set<Vertex> support;
  while (static_cast<int>(support.size()) < size)
    support.insert(static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(g.n()))));
  std::vector<std::pair<Vertex, std::int64_t>> entries;
  for (Vertex v : support)
    entries.emplace_back(v, weighted ? 1 + static_cast<std::int64_t>(rng.next_below(10)) : 1);
  return Profile::from_integers(entries);
}

// Diametral-pair-zero profile on a hypercube: weight 1 everywhere except on
// the antipodal pair {first, last} which is left out of the support.
inline Profile hypercube_diametral_profile(const Graph& q) {
  std::vector<Vertex> support;
  for (Vertex v = 1; v + 1 < q.n(); ++v) support.push_back(v);
  return Profile::unit(support);
}

// Runs the recognizer matching a class name; throws input_error for unknown
// names.  Used to certify generated instances before they are emitted.
inline bool passes_class(const Graph& g, const std::string& cls, int cap = 500) {
  if (cls == "weakly-modular") return recognize::is_weakly_modular(g, cap).verdict;
  if (cls == "modular") return recognize::is_modular(g, cap).verdict;
  if (cls == "median") return recognize::is_median(g, cap).verdict;
  if (cls == "cube-free-median") return recognize::is_cube_free_median(g, cap).verdict;
  if (cls == "bridged") return recognize::is_bridged(g, cap).verdict;
  if (cls == "weakly-bridged") return recognize::is_weakly_bridged(g, cap).verdict;
  if (cls == "convex-balls") return recognize::is_cb_graph(g, cap).verdict;
  if (cls == "bipartite-helly") return recognize::is_bipartite_helly(g, cap).verdict;
  throw input_error("unknown class name: " + cls);
}

}  // namespace gen
}  // namespace gc
