#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "descent.hpp"
#include "graph.hpp"
#include "improve_bridged.hpp"
#include "outergates.hpp"
#include "profile.hpp"

namespace gc {

// Outergate status of every vertex with respect to a clique K of a CB-graph.
// Vertices without an outergate sit at the same distance d(z,K) from every
// clique vertex; for them the witness is a vertex at distance d(z,K)-2 from z
// seeing the whole clique at distance two.
struct CliqueGateStatus {
  std::vector<char> has_outergate;  // meaningless on K itself
  std::vector<Vertex> witness;      // gate, or the 2-outergate stand-in
  OutergateMap map;                 // the underlying layered-BFS map
};

// Marking process deciding, for every vertex, whether it has an outergate
// with respect to the clique: distance-2 vertices are marked when some
// neighbor inside B_1(K) escapes B_1 of their best pre-neighbor, and marks
// propagate outward along geodesics that keep the pre-neighbor score.
inline CliqueGateStatus clique_gate_status(const Graph& g,
                                           const std::vector<Vertex>& k) {
  if (k.empty()) throw input_error("clique_gate_status: empty clique");
  for (size_t i = 0; i < k.size(); ++i)
    for (size_t j = i + 1; j < k.size(); ++j)
      if (!g.has_edge(k[i], k[j]))
        throw input_error("clique_gate_status: input set is not a clique");
  CliqueGateStatus out;
  out.has_outergate.assign(static_cast<size_t>(g.n()), 1);
  out.witness.assign(static_cast<size_t>(g.n()), -1);
  if (static_cast<int>(k.size()) == g.n()) return out;
  out.map = best_preneighbor_map(g, k);

  std::vector<char> in_k(static_cast<size_t>(g.n()), 0);
  for (Vertex w : k) in_k[static_cast<size_t>(w)] = 1;

  int max_layer = 0;
  for (Vertex z = 0; z < g.n(); ++z) max_layer = std::max(max_layer, out.map.dist(z));
  std::vector<std::vector<Vertex>> layers(static_cast<size_t>(max_layer) + 1);
  for (Vertex z = 0; z < g.n(); ++z)
    if (!in_k[static_cast<size_t>(z)])
      layers[static_cast<size_t>(out.map.dist(z))].push_back(z);

  if (max_layer >= 1)
    for (Vertex z : layers[1]) out.witness[static_cast<size_t>(z)] = z;

  for (int d = 2; d <= max_layer; ++d)
    for (Vertex z : layers[static_cast<size_t>(d)]) {
      Vertex zs = out.map[z];
      bool marked = false;
      if (d == 2) {
        // Marked iff N(z) & B_1(K) escapes B_1(z*).
        for (Vertex y : g.neighbors(z)) {
          if (out.map.dist(y) > 1) continue;
          if (y != zs && !g.has_edge(y, zs)) {
            marked = true;
            break;
          }
        }
        if (marked) out.witness[static_cast<size_t>(z)] = z;
      } else {
        for (Vertex x : g.neighbors(z)) {
          if (out.map.dist(x) != d - 1) continue;
          if (out.has_outergate[static_cast<size_t>(x)]) continue;
          if (out.map.gate_score[static_cast<size_t>(x)] ==
              out.map.gate_score[static_cast<size_t>(z)]) {
            marked = true;
            out.witness[static_cast<size_t>(z)] =
                out.witness[static_cast<size_t>(x)];
            break;
          }
        }
      }
      if (marked)
        out.has_outergate[static_cast<size_t>(z)] = 0;
      else
        out.witness[static_cast<size_t>(z)] = zs;
    }
  return out;
}

// Exact eccentricities of every clique vertex of a CB-graph: vertices without
// an outergate are equidistant from the whole clique and feed one global
// term; the rest route through their gates exactly as in the weakly bridged
// case.
inline std::vector<Scaled> clique_eccentricities_cb(const Graph& g,
                                                    const Profile& pi,
                                                    const std::vector<Vertex>& k) {
  CliqueGateStatus status = clique_gate_status(g, k);
  std::vector<char> uniform(static_cast<size_t>(g.n()), 0);
  for (Vertex z = 0; z < g.n(); ++z)
    if (!status.has_outergate[static_cast<size_t>(z)])
      uniform[static_cast<size_t>(z)] = 1;
  return detail::clique_eccentricities_core(g, pi, k, &uniform);
}

// Minimizer of r_pi over B_1(v) in a CB-graph: smallest-index strict improver
// when one exists, v itself otherwise (v is then a local minimum in G).
inline Vertex minimize_ball1_cb(const Graph& g, const Profile& pi, Vertex v) {
  DistanceRow row = bfs_distances(g, v);
  RadiusEvaluation ev = radius_from_row(pi, v, row);
  Scaled zero{};
  if (ev.value == zero) return v;  // support == {v}

  std::vector<Vertex> close;
  for (Vertex z : ev.furthest)
    if (row[z] <= 1) close.push_back(z);
  if (close.size() >= 2) return v;  // every neighbor keeps one of them far
  if (close.size() == 1) {
    Vertex u = close.front();
    return radius_at(g, pi, u).value < ev.value ? u : v;
  }

  // K = intersection over z in F of N(v) & N(gate(z)), gates taken with
  // respect to the unit ball B_1(v).
  std::vector<Vertex> ball{v};
  for (Vertex w : g.neighbors(v)) ball.push_back(w);
  OutergateMap map = best_preneighbor_map(g, ball);
  std::vector<Vertex> gates;
  for (Vertex z : ev.furthest) gates.push_back(map[z]);
  std::sort(gates.begin(), gates.end());
  gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
  std::vector<int> hit(static_cast<size_t>(g.n()), 0);
  for (Vertex u : gates)
    for (Vertex w : g.neighbors(u)) ++hit[static_cast<size_t>(w)];
  std::vector<Vertex> kset;
  for (Vertex w : g.neighbors(v))
    if (hit[static_cast<size_t>(w)] == static_cast<int>(gates.size()))
      kset.push_back(w);
  if (kset.empty()) return v;

  std::vector<Scaled> ecc = clique_eccentricities_cb(g, pi, kset);
  Vertex best = v;
  Scaled best_r = ev.value;
  for (size_t i = 0; i < kset.size(); ++i)
    if (ecc[i] < best_r) {
      best = kset[i];
      best_r = ecc[i];
    }
  return best;
}

// One improvement step in B_2(v) for CB-graphs.  Improvement is guaranteed
// only when some strictly better vertex sits at distance other than 2 from v;
// a fixed point may therefore still have the whole center on its 2-sphere,
// which the center_cb driver resolves separately.
inline Vertex improve_eccentricity_cb(const Graph& g, const Profile& pi,
                                      Vertex v) {
  DistanceRow row = bfs_distances(g, v);
  RadiusEvaluation ev = radius_from_row(pi, v, row);
  Scaled rv = ev.value;

  Vertex u = minimize_ball1_cb(g, pi, v);
  if (u != v && radius_at(g, pi, u).value < rv) return u;
  for (Vertex z : ev.furthest)
    if (row[z] <= 1) return v;

  std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
  OutergateMap map = best_preneighbor_map(g, nv);
  ShadowPartition part = shadow_partition_wb(g, pi, v);
  int best_class = 0;
  for (size_t i = 1; i < part.classes.size(); ++i)
    if (part.shadow_size[i] > part.shadow_size[static_cast<size_t>(best_class)])
      best_class = static_cast<int>(i);
  if (part.classes.empty() ||
      part.shadow_size[static_cast<size_t>(best_class)] == part.furthest_count)
    return v;  // saturation: no improver away from the 2-sphere exists

  std::vector<char> gate_of_w0(static_cast<size_t>(g.n()), 0);
  for (Vertex gu : part.class_gates[static_cast<size_t>(best_class)])
    gate_of_w0[static_cast<size_t>(gu)] = 1;
  Vertex z = -1;
  for (Vertex cand : ev.furthest)
    if (!gate_of_w0[static_cast<size_t>(map[cand])]) {
      z = cand;
      break;
    }
  if (z < 0) return v;

  Vertex gz = map[z];
  std::vector<char> in_w0(static_cast<size_t>(g.n()), 0);
  for (Vertex w : part.classes[static_cast<size_t>(best_class)])
    in_w0[static_cast<size_t>(w)] = 1;
  Vertex w_max = -1;
  int best_cover = -1;
  for (Vertex w : g.neighbors(gz)) {
    if (!g.has_edge(v, w)) continue;
    int cover = 0;
    for (Vertex x : g.neighbors(w)) cover += in_w0[static_cast<size_t>(x)];
    if (cover > best_cover) {
      best_cover = cover;
      w_max = w;
    }
  }
  if (w_max < 0) return v;  // only reachable when no valid improver exists

  Vertex vp = minimize_ball1_cb(g, pi, w_max);
  if (radius_at(g, pi, vp).value < rv) return vp;
  return v;
}

inline ImproveStep cb_improve_step() {
  return ImproveStep{
      [](const Graph& g, const Profile& pi, Vertex v) {
        return improve_eccentricity_cb(g, pi, v);
      },
      2, "convex-balls"};
}

enum class TerminalMode { Randomized, Deterministic01 };

// A fixed point of improve_eccentricity_cb reached by the matching descent
// driver: either central, or the whole center sits on its 2-sphere.
inline Vertex terminal_vertex(const Graph& g, const Profile& pi,
                              TerminalMode mode, std::uint64_t seed = 0) {
  if (mode == TerminalMode::Deterministic01)
    return deterministic_descent_01(g, pi, cb_improve_step()).first;
  return sample_select_descent(g, pi, cb_improve_step(), seed).first;
}

// One snapshot of the shrinking phase of center_cb, for external property
// checks on small instances.
struct ShrinkState {
  std::vector<char> x_set;  // the convex set X_i
  Vertex anchor = -1;       // x_i
  Vertex best = -1;         // y_i
  int iteration = 0;
};

// Exact center of a CB-graph: a terminal vertex, then a shrinking convex set
// whose complement provably contains no vertex better than the best seen.
// Low-degree anchors finish by scanning the unit balls around B_1(x) & X;
// high-degree anchors cut X with a ball around a furthest profile vertex.
inline Vertex center_cb(const Graph& g, const Profile& pi, std::uint64_t seed,
                        std::vector<ShrinkState>* trace = nullptr) {
  Vertex vstar = terminal_vertex(g, pi, TerminalMode::Randomized, seed);

  std::vector<char> x_set(static_cast<size_t>(g.n()), 1);
  Vertex x = vstar, y = vstar;
  Scaled ry = radius_at(g, pi, y).value;
  const int threshold =
      static_cast<int>(std::ceil(std::sqrt(static_cast<double>(g.m()))));
  std::vector<char> used_anchor(static_cast<size_t>(g.n()), 0);

  for (int iteration = 0; iteration <= g.n(); ++iteration) {
    if (trace) trace->push_back({x_set, x, y, iteration});
    if (used_anchor[static_cast<size_t>(x)])
      throw invariant_violation(
          "center_cb: anchor repeated (input is not a CB-graph)");
    used_anchor[static_cast<size_t>(x)] = 1;

    int deg_in = 0;
    for (Vertex w : g.neighbors(x)) deg_in += x_set[static_cast<size_t>(w)];
    if (deg_in <= threshold) {
      // Scan minimize_ball1 around every surviving vertex of B_1(x); the
      // center, if not already found, lies in the union of those unit balls.
      Vertex best = y;
      Scaled best_r = ry;
      std::vector<Vertex> b1{x};
      for (Vertex w : g.neighbors(x)) b1.push_back(w);
      for (Vertex w : b1) {
        if (!x_set[static_cast<size_t>(w)]) continue;
        Vertex u = minimize_ball1_cb(g, pi, w);
        Scaled ru = radius_at(g, pi, u).value;
        if (ru < best_r || (ru == best_r && u < best)) {
          best = u;
          best_r = ru;
        }
      }
      return best;
    }

    RadiusEvaluation ev = radius_at(g, pi, x);
    if (ev.value == Scaled{}) return x;  // support == {x}
    Vertex z = ev.furthest.front();      // smallest index
    DistanceRow dz = bfs_distances(g, z);
    const int keep = dz[x] - 1;
    std::vector<char> next(static_cast<size_t>(g.n()), 0);
    int next_size = 0;
    int best_dist = -1;
    Vertex next_x = -1;
    DistanceRow dx = bfs_distances(g, x);
    for (Vertex w = 0; w < g.n(); ++w)
      if (x_set[static_cast<size_t>(w)] && dz[w] <= keep) {
        next[static_cast<size_t>(w)] = 1;
        ++next_size;
        if (best_dist < 0 || dx[w] < best_dist) {
          best_dist = dx[w];
          next_x = w;  // smallest index at the minimum distance
        }
      }
    if (ev.value < ry || (ev.value == ry && x < y)) {
      y = x;
      ry = ev.value;
    }
    if (next_size == 0) return y;  // nothing outside beats y, and X is empty
    x_set = std::move(next);
    x = next_x;
  }
  throw invariant_violation("center_cb: shrink loop failed to terminate");
}

// Brute quasi-median of a triplet by interval descent: each corner walks
// toward the two others while a neighbor lies on geodesics to both.  Returns
// the sorted side lengths of the resulting metric triangle.
inline std::array<int, 3> quasi_median_sides(const Graph& g, Vertex u, Vertex v,
                                             Vertex w) {
  std::array<Vertex, 3> c{u, v, w};
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < 3 && !moved; ++i) {
      Vertex a = c[static_cast<size_t>(i)];
      Vertex b = c[static_cast<size_t>((i + 1) % 3)];
      Vertex d = c[static_cast<size_t>((i + 2) % 3)];
      DistanceRow db = bfs_distances(g, b);
      DistanceRow dd = bfs_distances(g, d);
      for (Vertex nb : g.neighbors(a))
        if (db[nb] == db[a] - 1 && dd[nb] == dd[a] - 1) {
          c[static_cast<size_t>(i)] = nb;
          moved = true;
          break;
        }
    }
  }
  DistanceRow d0 = bfs_distances(g, c[0]);
  DistanceRow d1 = bfs_distances(g, c[1]);
  std::array<int, 3> sides{d0[c[1]], d1[c[2]], d0[c[2]]};
  std::sort(sides.begin(), sides.end());
  return sides;
}

}  // namespace gc
