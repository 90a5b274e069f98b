#pragma once

#include <optional>
#include <vector>

#include "graph.hpp"

namespace gc {

// For a target set S, maps every vertex z outside S to a best "pre-neighbor"
// z* in B_{d(z,S)-1}(z) & B_1(S) maximizing |N(z*) & S|.  When S is outergated
// the selected z* is a genuine outergate of z (adjacent to all of proj_z(S)).
struct OutergateMap {
  std::vector<Vertex> target;
  std::vector<int> dist_to_target;        // d(z, S)
  std::vector<Vertex> gate;               // z* for z outside S; -1 on S
  std::vector<int> gate_score;            // |N(gate(z)) & S|
  std::vector<char> is_true_outergate;    // filled only by verify_outergates

  int dist(Vertex z) const { return dist_to_target[static_cast<size_t>(z)]; }
  Vertex operator[](Vertex z) const { return gate[static_cast<size_t>(z)]; }
};

// Single layered-BFS pass from S with score propagation; O(n + m) total.
// Vertices adjacent to S gate to themselves.  Ties among equal-score
// candidates break to the smallest gate index.
inline OutergateMap best_preneighbor_map(const Graph& g,
                                         const std::vector<Vertex>& s) {
  if (s.empty()) throw input_error("best_preneighbor_map: empty target set");
  OutergateMap out;
  out.target = s;
  DistanceRow row = bfs_distances(g, s);
  if (static_cast<int>(s.size()) == g.n())
    throw input_error("best_preneighbor_map: target set is all of V");
  out.dist_to_target = row.dist;
  out.gate.assign(static_cast<size_t>(g.n()), -1);
  out.gate_score.assign(static_cast<size_t>(g.n()), -1);

  std::vector<char> in_s(static_cast<size_t>(g.n()), 0);
  for (Vertex v : s) in_s[static_cast<size_t>(v)] = 1;

  // Order vertices by BFS layer.
  int max_layer = 0;
  for (Vertex v = 0; v < g.n(); ++v) max_layer = std::max(max_layer, row[v]);
  std::vector<std::vector<Vertex>> layers(static_cast<size_t>(max_layer) + 1);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in_s[static_cast<size_t>(v)])
      layers[static_cast<size_t>(row[v])].push_back(v);

  // Layer 1: each vertex is its own candidate with score |N(z) & S|.
  for (Vertex z : layers[1]) {
    int score = 0;
    for (Vertex u : g.neighbors(z)) score += in_s[static_cast<size_t>(u)];
    out.gate[static_cast<size_t>(z)] = z;
    out.gate_score[static_cast<size_t>(z)] = score;
  }
  // Layer k >= 2: best candidate among the gates of layer-(k-1) neighbors.
  for (int k = 2; k <= max_layer; ++k) {
    for (Vertex z : layers[static_cast<size_t>(k)]) {
      Vertex best = -1;
      int best_score = -1;
      for (Vertex y : g.neighbors(z)) {
        if (row[y] != k - 1) continue;
        Vertex cand = out.gate[static_cast<size_t>(y)];
        int sc = out.gate_score[static_cast<size_t>(y)];
        if (sc > best_score || (sc == best_score && cand < best)) {
          best = cand;
          best_score = sc;
        }
      }
      out.gate[static_cast<size_t>(z)] = best;
      out.gate_score[static_cast<size_t>(z)] = best_score;
    }
  }
  return out;
}

// Brute verification pass (|S| BFS sweeps): flags z whose gate is adjacent to
// every vertex of proj_z(S).  Intended for tests and desk-scale validation.
inline void verify_outergates(const Graph& g, OutergateMap& map) {
  map.is_true_outergate.assign(static_cast<size_t>(g.n()), 0);
  std::vector<DistanceRow> rows;
  rows.reserve(map.target.size());
  for (Vertex t : map.target) rows.push_back(bfs_distances(g, t));
  for (Vertex z = 0; z < g.n(); ++z) {
    Vertex zs = map.gate[static_cast<size_t>(z)];
    if (zs < 0) continue;
    bool ok = true;
    for (size_t i = 0; i < map.target.size() && ok; ++i) {
      if (rows[i][z] != map.dist(z)) continue;  // target not in proj_z(S)
      Vertex t = map.target[i];
      if (!g.has_edge(zs, t)) ok = false;
    }
    map.is_true_outergate[static_cast<size_t>(z)] = ok ? 1 : 0;
  }
}

// Interval-outergate witness: a vertex w of I(u,v) at distance d(u,v)-2 from u
// adjacent to every neighbor of v inside I(u,v).  Returns the smallest-index
// witness, or nothing if none exists.
inline std::optional<Vertex> verify_interval_outergate(const Graph& g, Vertex u,
                                                       Vertex v) {
  DistanceRow du = bfs_distances(g, u);
  DistanceRow dv = bfs_distances(g, v);
  int k = du[v];
  if (k < 2) throw input_error("verify_interval_outergate: d(u,v) < 2");
  std::vector<Vertex> gates;  // N(v) inside I(u,v)
  for (Vertex x : g.neighbors(v))
    if (du[x] == k - 1) gates.push_back(x);
  for (Vertex w = 0; w < g.n(); ++w) {
    if (du[w] != k - 2 || dv[w] != 2) continue;
    bool ok = true;
    for (Vertex x : gates)
      if (!g.has_edge(w, x)) {
        ok = false;
        break;
      }
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace gc
