#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "descent.hpp"
#include "graph.hpp"
#include "outergates.hpp"
#include "profile.hpp"
#include "rmq.hpp"

namespace gc {

namespace detail {

// Core of the clique-eccentricity computation, shared by the weakly bridged
// and the convex-balls pipelines.  Every profile vertex outside K reaches a
// clique vertex w either through its gate u (d = d(y,K) when u ~ w, else
// d(y,K)+1), or -- when `uniform` marks it as gateless -- at the same
// distance d(y,K) from every w in K.
inline std::vector<Scaled> clique_eccentricities_core(
    const Graph& g, const Profile& pi, const std::vector<Vertex>& k,
    const std::vector<char>* uniform) {
  if (k.empty()) throw input_error("clique_eccentricities: empty clique");
  for (size_t i = 0; i < k.size(); ++i)
    for (size_t j = i + 1; j < k.size(); ++j)
      if (!g.has_edge(k[i], k[j]))
        throw input_error("clique_eccentricities: input set is not a clique");

  std::vector<char> in_k(static_cast<size_t>(g.n()), 0);
  for (Vertex w : k) in_k[static_cast<size_t>(w)] = 1;

  // Top-2 weights inside the clique (for the max over K \ {w} term).
  Vertex top1 = -1, top2 = -1;
  Scaled w1, w2;
  for (Vertex w : k)
    if (auto pw = pi.weight(w)) {
      Scaled s = Scaled::of(*pw, 1);
      if (top1 < 0 || s > w1) {
        top2 = top1;
        w2 = w1;
        top1 = w;
        w1 = s;
      } else if (top2 < 0 || s > w2) {
        top2 = w;
        w2 = s;
      }
    }

  std::vector<Scaled> out(k.size());
  if (static_cast<int>(k.size()) == g.n()) {
    for (size_t i = 0; i < k.size(); ++i)
      out[i] = (k[i] == top1) ? (top2 < 0 ? Scaled{} : w2)
                              : (top1 < 0 ? Scaled{} : w1);
    return out;
  }

  OutergateMap map = best_preneighbor_map(g, k);

  // alpha/beta weights on N(K); the uniform (gateless) part feeds a global term.
  std::vector<Scaled> alpha(static_cast<size_t>(g.n()));
  std::vector<Scaled> beta(static_cast<size_t>(g.n()));
  Scaled uniform_term;
  bool have_uniform = false;
  for (const auto& [y, wy] : pi.entries()) {
    if (in_k[static_cast<size_t>(y)]) continue;
    int d = map.dist(y);
    if (uniform && (*uniform)[static_cast<size_t>(y)]) {
      Scaled s = Scaled::of(wy, d);
      if (!have_uniform || s > uniform_term) uniform_term = s;
      have_uniform = true;
      continue;
    }
    Vertex u = map[y];
    Scaled a = Scaled::of(wy, d);
    Scaled b = Scaled::of(wy, d + 1);
    size_t ui = static_cast<size_t>(u);
    if (a > alpha[ui]) alpha[ui] = a;
    if (b > beta[ui]) beta[ui] = b;
  }

  // Subgraph induced by N[K]; kappa = 0 on K and beta on N(K).  A single
  // non-neighbor range-maximum sweep yields max beta over N(K) \ N(w).
  std::vector<Vertex> local_to_global;
  std::vector<int> global_to_local(static_cast<size_t>(g.n()), -1);
  auto add_local = [&](Vertex v) {
    global_to_local[static_cast<size_t>(v)] =
        static_cast<int>(local_to_global.size());
    local_to_global.push_back(v);
  };
  for (Vertex w : k) add_local(w);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!in_k[static_cast<size_t>(v)] && map.dist(v) == 1) add_local(v);
  std::vector<std::pair<Vertex, Vertex>> sub_edges;
  for (Vertex v : local_to_global)
    for (Vertex u : g.neighbors(v))
      if (u > v && global_to_local[static_cast<size_t>(u)] >= 0)
        sub_edges.emplace_back(global_to_local[static_cast<size_t>(v)],
                               global_to_local[static_cast<size_t>(u)]);
  Graph sub(static_cast<int>(local_to_global.size()), sub_edges);
  std::vector<Scaled> kappa(local_to_global.size());
  for (size_t i = k.size(); i < local_to_global.size(); ++i)
    kappa[i] = beta[static_cast<size_t>(local_to_global[i])];
  std::vector<Scaled> beta_max = max_over_nonneighbors(sub, kappa);

  for (size_t i = 0; i < k.size(); ++i) {
    Vertex w = k[i];
    Scaled r = (w == top1) ? (top2 < 0 ? Scaled{} : w2)
                           : (top1 < 0 ? Scaled{} : w1);
    for (Vertex u : g.neighbors(w))
      if (!in_k[static_cast<size_t>(u)] && map.dist(u) == 1 &&
          alpha[static_cast<size_t>(u)] > r)
        r = alpha[static_cast<size_t>(u)];
    if (beta_max[i] > r) r = beta_max[i];
    if (have_uniform && uniform_term > r) r = uniform_term;
    out[i] = r;
  }
  return out;
}

}  // namespace detail

// Exact eccentricities of every clique vertex via outergates (cliques of
// weakly bridged graphs are outergated): one layered BFS plus one
// range-maximum sweep, instead of |K| full BFS runs.
inline std::vector<Scaled> clique_eccentricities_wb(const Graph& g,
                                                    const Profile& pi,
                                                    const std::vector<Vertex>& k) {
  return detail::clique_eccentricities_core(g, pi, k, nullptr);
}

// Minimizer of r_pi over B_1(v): returns the smallest-index strict improver
// if one exists, else v (v is then a local minimum of r_pi in G).
inline Vertex minimize_ball1_wb(const Graph& g, const Profile& pi, Vertex v) {
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

  // K = intersection over z in F of N(v) & N(gate(z)): count, per neighbor of
  // v, how many distinct gates it is adjacent to.
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

  std::vector<Scaled> ecc = clique_eccentricities_wb(g, pi, kset);
  Vertex best = v;
  Scaled best_r = ev.value;
  for (size_t i = 0; i < kset.size(); ++i)
    if (ecc[i] < best_r) {
      best = kset[i];
      best_r = ecc[i];
    }
  return best;
}

// Equivalence classes of N(v) by equal shadows (the furthest profile vertices
// routed through a neighbor), computed from outergate adjacency.
struct ShadowPartition {
  std::vector<std::vector<Vertex>> classes;       // members, ascending
  std::vector<long long> shadow_size;             // |shadow| per class
  std::vector<std::vector<Vertex>> class_gates;   // distinct gates per class
  long long furthest_count = 0;
};

inline ShadowPartition shadow_partition_wb(const Graph& g, const Profile& pi,
                                           Vertex v) {
  RadiusEvaluation ev = radius_at(g, pi, v);
  ShadowPartition out;
  out.furthest_count = static_cast<long long>(ev.furthest.size());
  std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
  OutergateMap map = best_preneighbor_map(g, nv);
  std::vector<long long> gate_count(static_cast<size_t>(g.n()), 0);
  for (Vertex z : ev.furthest) ++gate_count[static_cast<size_t>(map[z])];
  std::vector<Vertex> gates;
  for (Vertex u = 0; u < g.n(); ++u)
    if (gate_count[static_cast<size_t>(u)] > 0) gates.push_back(u);

  std::vector<char> is_nv(static_cast<size_t>(g.n()), 0);
  for (Vertex w : nv) is_nv[static_cast<size_t>(w)] = 1;
  std::map<std::vector<Vertex>, int> by_signature;
  std::vector<std::vector<Vertex>> signatures(static_cast<size_t>(g.n()));
  for (Vertex u : gates)
    for (Vertex w : g.neighbors(u))
      if (is_nv[static_cast<size_t>(w)])
        signatures[static_cast<size_t>(w)].push_back(u);
  for (Vertex w : nv) {
    auto& sig = signatures[static_cast<size_t>(w)];
    auto [it, fresh] = by_signature.try_emplace(sig, static_cast<int>(out.classes.size()));
    if (fresh) {
      out.classes.emplace_back();
      out.class_gates.push_back(sig);
      long long total = 0;
      for (Vertex u : sig) total += gate_count[static_cast<size_t>(u)];
      out.shadow_size.push_back(total);
    }
    out.classes[static_cast<size_t>(it->second)].push_back(w);
  }
  return out;
}

// One improvement step in B_2(v) for weakly bridged graphs.  Returns a vertex
// with strictly smaller r_pi when v is not central, and v itself otherwise
// (including the shadow-saturation branch, which is only reachable at central
// vertices).
inline Vertex improve_eccentricity_wb(const Graph& g, const Profile& pi,
                                      Vertex v) {
  DistanceRow row = bfs_distances(g, v);
  RadiusEvaluation ev = radius_from_row(pi, v, row);
  Scaled rv = ev.value;

  Vertex u = minimize_ball1_wb(g, pi, v);
  if (u != v && radius_at(g, pi, u).value < rv) return u;
  for (Vertex z : ev.furthest)
    if (row[z] <= 1) return v;  // a local minimum with adjacent furthest vertex is central

  std::vector<Vertex> nv(g.neighbors(v).begin(), g.neighbors(v).end());
  OutergateMap map = best_preneighbor_map(g, nv);
  ShadowPartition part = shadow_partition_wb(g, pi, v);
  int best_class = 0;
  for (size_t i = 1; i < part.classes.size(); ++i)
    if (part.shadow_size[i] > part.shadow_size[static_cast<size_t>(best_class)])
      best_class = static_cast<int>(i);
  if (part.classes.empty() ||
      part.shadow_size[static_cast<size_t>(best_class)] == part.furthest_count)
    return v;  // shadow saturation: descent terminates here

  std::vector<char> gate_of_w0(static_cast<size_t>(g.n()), 0);
  for (Vertex gu : part.class_gates[static_cast<size_t>(best_class)])
    gate_of_w0[static_cast<size_t>(gu)] = 1;
  Vertex z = -1;
  for (Vertex cand : ev.furthest)
    if (!gate_of_w0[static_cast<size_t>(map[cand])]) {
      z = cand;
      break;
    }
  if (z < 0) return v;  // shadows of the best class already cover F

  Vertex gz = map[z];
  std::vector<char> in_w0(static_cast<size_t>(g.n()), 0);
  for (Vertex w : part.classes[static_cast<size_t>(best_class)])
    in_w0[static_cast<size_t>(w)] = 1;
  Vertex w_max = -1;
  int best_cover = -1;
  for (Vertex w : g.neighbors(gz)) {
    if (!g.has_edge(v, w)) continue;  // restrict to N(v) & I(v,z)
    int cover = 0;
    for (Vertex x : g.neighbors(w)) cover += in_w0[static_cast<size_t>(x)];
    if (cover > best_cover) {
      best_cover = cover;
      w_max = w;
    }
  }
  if (w_max < 0)
    throw invariant_violation(
        "improve_eccentricity_wb: outergate misses the interval (input not weakly bridged)");

  Vertex vp = minimize_ball1_wb(g, pi, w_max);
  if (radius_at(g, pi, vp).value < rv) return vp;
  return v;
}

inline ImproveStep wb_improve_step() {
  return ImproveStep{
      [](const Graph& g, const Profile& pi, Vertex v) {
        return improve_eccentricity_wb(g, pi, v);
      },
      2, "weakly-bridged"};
}

}  // namespace gc
