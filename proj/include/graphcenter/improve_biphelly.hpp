#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "descent.hpp"
#include "graph.hpp"
#include "outergates.hpp"
#include "profile.hpp"

namespace gc {

namespace detail {

// BFS-parity bipartition; throws when an edge joins two same-side vertices.
inline std::vector<char> bipartition_sides(const Graph& g) {
  std::vector<char> side(static_cast<size_t>(g.n()), 0);
  DistanceRow row = bfs_distances(g, 0);
  for (Vertex v = 0; v < g.n(); ++v) side[static_cast<size_t>(v)] = static_cast<char>(row[v] % 2);
  for (auto [u, v] : g.edges())
    if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)])
      throw input_error("graph is not bipartite");
  return side;
}

// Intersection of N(v) & N(gate(z)) over a gate list, by adjacency counting.
inline std::vector<Vertex> common_gate_neighbors(const Graph& g, Vertex v,
                                                 std::vector<Vertex> gates) {
  std::sort(gates.begin(), gates.end());
  gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
  std::vector<int> hit(static_cast<size_t>(g.n()), 0);
  for (Vertex u : gates)
    for (Vertex w : g.neighbors(u)) ++hit[static_cast<size_t>(w)];
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (hit[static_cast<size_t>(w)] == static_cast<int>(gates.size()))
      out.push_back(w);
  return out;
}

}  // namespace detail

// Improving neighbor search for bipartite Helly graphs: either a u in N(v)
// with r_pi(u) < r_pi(v), or v itself (then v is a local minimum in G).
inline Vertex minimize_ball1_bh(const Graph& g, const Profile& pi, Vertex v) {
  DistanceRow row = bfs_distances(g, v);
  RadiusEvaluation ev = radius_from_row(pi, v, row);
  Scaled rv = ev.value;
  if (rv == Scaled{}) return v;

  // A = vertices that would become furthest after any move away from them.
  std::vector<Vertex> a_far;  // members of A at distance >= 2
  std::vector<Vertex> a_near;
  bool v_in_a = false;
  for (const auto& [z, wz] : pi.entries()) {
    if (Scaled::of(wz, row[z] + 1) >= rv) {
      if (z == v) v_in_a = true;
      else if (row[z] == 1) a_near.push_back(z);
      else a_far.push_back(z);
    }
  }
  if (v_in_a || a_near.size() > 1) return v;
  if (a_near.size() == 1) {
    Vertex u = a_near.front();
    return radius_at(g, pi, u).value < rv ? u : v;
  }

  // A & B_1(v) empty: u improves iff u lies in every interval I(v,z), z in A,
  // i.e. u is a common neighbor of v and all the outergates.
  std::vector<Vertex> ball{v};
  for (Vertex w : g.neighbors(v)) ball.push_back(w);
  OutergateMap map = best_preneighbor_map(g, ball);
  std::vector<Vertex> gates;
  gates.reserve(a_far.size());
  for (Vertex z : a_far) gates.push_back(map[z]);
  std::vector<Vertex> k = detail::common_gate_neighbors(g, v, std::move(gates));
  if (k.empty()) return v;
  return k.front();  // every member improves; smallest index
}

// All vertices with 0-1 eccentricity at most k, and their exact values
// (-1 when the eccentricity exceeds k).  One partition-evolution pass per
// support side, with a bucket-queue merge step per level.
inline std::vector<int> k_ball_radius_01(const Graph& g, const Profile& pi01,
                                         int k) {
  if (!pi01.is_01()) throw input_error("k_ball_radius_01: profile is not 0-1");
  if (k < 1) throw input_error("k_ball_radius_01: need k >= 1");
  std::vector<char> side = detail::bipartition_sides(g);

  auto one_side = [&](const std::vector<Vertex>& supp) {
    std::vector<int> val(static_cast<size_t>(g.n()), -1);
    if (supp.empty()) {
      for (auto& x : val) x = 0;
      return val;
    }
    if (supp.size() == 1) {
      DistanceRow row = bfs_distances(g, supp.front());
      for (Vertex v = 0; v < g.n(); ++v)
        if (row[v] <= k) val[static_cast<size_t>(v)] = row[v];
      return val;
    }
    // P-blocks partition the support; Y-blocks are the disjoint witness sets
    // intersecting all the i-balls of a block on the level-i parity side.
    std::vector<std::vector<Vertex>> y_blocks;
    for (Vertex x : supp) y_blocks.push_back({x});
    size_t block_count = y_blocks.size();  // current ell_i
    for (int i = 1; i <= k && !y_blocks.empty(); ++i) {
      // Z_j = N(Y_j); count per vertex in how many Z-sets it appears.
      std::vector<std::vector<Vertex>> z_blocks(y_blocks.size());
      std::vector<int> cnt(static_cast<size_t>(g.n()), 0);
      std::vector<char> seen(static_cast<size_t>(g.n()), 0);
      for (size_t j = 0; j < y_blocks.size(); ++j) {
        for (Vertex y : y_blocks[j])
          for (Vertex u : g.neighbors(y))
            if (!seen[static_cast<size_t>(u)]) {
              seen[static_cast<size_t>(u)] = 1;
              z_blocks[j].push_back(u);
            }
        for (Vertex u : z_blocks[j]) {
          seen[static_cast<size_t>(u)] = 0;
          ++cnt[static_cast<size_t>(u)];
        }
      }
      // Bucket queue over appearance counts; the maximum priority only drops.
      std::vector<std::vector<Vertex>> buckets(z_blocks.size() + 1);
      for (Vertex u = 0; u < g.n(); ++u)
        if (cnt[static_cast<size_t>(u)] > 0)
          buckets[static_cast<size_t>(cnt[static_cast<size_t>(u)])].push_back(u);
      std::vector<char> alive(z_blocks.size(), 1);
      // Map each vertex to the blocks containing it, for O(sum |Z_j|) lookups.
      std::vector<std::vector<int>> blocks_of(static_cast<size_t>(g.n()));
      for (size_t j = 0; j < z_blocks.size(); ++j)
        for (Vertex u : z_blocks[j])
          blocks_of[static_cast<size_t>(u)].push_back(static_cast<int>(j));

      std::vector<std::vector<Vertex>> next_y;
      size_t remaining = z_blocks.size();
      int top = static_cast<int>(z_blocks.size());
      std::vector<int> tmp(static_cast<size_t>(g.n()), 0);
      while (remaining > 0) {
        while (top > 0 && buckets[static_cast<size_t>(top)].empty()) --top;
        Vertex zt = buckets[static_cast<size_t>(top)].back();
        buckets[static_cast<size_t>(top)].pop_back();
        if (cnt[static_cast<size_t>(zt)] != top) {
          if (cnt[static_cast<size_t>(zt)] > 0)
            buckets[static_cast<size_t>(cnt[static_cast<size_t>(zt)])].push_back(zt);
          continue;
        }
        std::vector<int> jt;
        for (int j : blocks_of[static_cast<size_t>(zt)])
          if (alive[static_cast<size_t>(j)]) jt.push_back(j);
        // Y_t = intersection of the selected Z-blocks.
        std::vector<Vertex> yt;
        for (int j : jt)
          for (Vertex u : z_blocks[static_cast<size_t>(j)])
            if (++tmp[static_cast<size_t>(u)] == static_cast<int>(jt.size()))
              yt.push_back(u);
        for (int j : jt) {
          alive[static_cast<size_t>(j)] = 0;
          --remaining;
          for (Vertex u : z_blocks[static_cast<size_t>(j)]) {
            tmp[static_cast<size_t>(u)] = 0;
            --cnt[static_cast<size_t>(u)];
          }
        }
        std::sort(yt.begin(), yt.end());
        next_y.push_back(std::move(yt));
      }
      y_blocks = std::move(next_y);
      block_count = y_blocks.size();
      if (block_count == 1)
        for (Vertex u : y_blocks.front())
          if (val[static_cast<size_t>(u)] < 0) val[static_cast<size_t>(u)] = i;
    }
    (void)block_count;
    return val;
  };

  std::vector<Vertex> supp0, supp1;
  for (Vertex x : pi01.support())
    (side[static_cast<size_t>(x)] ? supp1 : supp0).push_back(x);
  std::vector<int> v0 = one_side(supp0);
  std::vector<int> v1 = one_side(supp1);
  std::vector<int> out(static_cast<size_t>(g.n()), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    int a = v0[static_cast<size_t>(v)], b = v1[static_cast<size_t>(v)];
    if (a >= 0 && b >= 0) out[static_cast<size_t>(v)] = std::max(a, b);
  }
  return out;
}

// S = intersection over x in X of N_2(v) & I(v,x), in near-linear time via
// the interval-outergate machinery (no per-x BFS).
inline std::vector<Vertex> interval_second_meet(const Graph& g, Vertex v,
                                                const std::vector<Vertex>& x_set) {
  if (x_set.empty()) throw input_error("interval_second_meet: empty X");
  DistanceRow dv = bfs_distances(g, v);

  // Case 1: a member inside B_1(v) kills every candidate.
  for (Vertex x : x_set)
    if (dv[x] <= 1) return {};

  // Case 2: a member at distance exactly 2 is the only possible survivor.
  std::vector<Vertex> at2;
  for (Vertex x : x_set)
    if (dv[x] == 2) at2.push_back(x);
  if (!at2.empty()) {
    if (at2.size() > 1) return {};
    Vertex x = at2.front();
    DistanceRow dx = bfs_distances(g, x);
    for (Vertex xp : x_set)
      if (dv[x] + dx[xp] != dv[xp]) return {};
    return {x};
  }

  // Case 3: members at distance 3 constrain S to their direct neighbors.
  std::vector<Vertex> at3, far;
  for (Vertex x : x_set) (dv[x] == 3 ? at3 : far).push_back(x);
  std::vector<Vertex> y3;
  if (!at3.empty()) {
    std::vector<int> hit(static_cast<size_t>(g.n()), 0);
    for (Vertex x : at3)
      for (Vertex u : g.neighbors(x)) ++hit[static_cast<size_t>(u)];
    for (Vertex u = 0; u < g.n(); ++u)
      if (dv[u] == 2 && hit[static_cast<size_t>(u)] == static_cast<int>(at3.size()))
        y3.push_back(u);
    if (far.empty()) return y3;
    if (y3.empty()) return {};
  }

  // Main case: all of `far` lies outside B_3(v).
  std::vector<Vertex> ball{v};
  for (Vertex w : g.neighbors(v)) ball.push_back(w);
  OutergateMap map_v = best_preneighbor_map(g, ball);
  std::vector<Vertex> gates;
  for (Vertex x : far) gates.push_back(map_v[x]);
  std::vector<Vertex> a_set = detail::common_gate_neighbors(g, v, gates);
  if (a_set.empty()) return {};

  // Find b in S adjacent to all of A by one improving-neighbor call on a
  // derived profile with exact rational weights r/d(a,x) and r/3.
  Vertex a = a_set.front();
  DistanceRow da = bfs_distances(g, a);
  std::int64_t r = 0;
  for (Vertex x : far) r = std::max<std::int64_t>(r, da[x]);
  std::vector<std::pair<Vertex, Weight>> derived;
  for (Vertex x : far) derived.emplace_back(x, Weight::ratio(r, da[x]));
  for (Vertex y : a_set) derived.emplace_back(y, Weight::ratio(r, 3));
  Profile prime(std::move(derived));
  Vertex b = minimize_ball1_bh(g, prime, a);
  if (b == a) return {};

  // Gates of `far` on B_1(b); the whole S lies within distance 2 of each.
  std::vector<Vertex> ball_b{b};
  for (Vertex w : g.neighbors(b)) ball_b.push_back(w);
  OutergateMap map_b = best_preneighbor_map(g, ball_b);
  std::vector<Vertex> b_gates;
  for (Vertex x : far) b_gates.push_back(map_b[x]);
  std::sort(b_gates.begin(), b_gates.end());
  b_gates.erase(std::unique(b_gates.begin(), b_gates.end()), b_gates.end());
  Profile second = Profile::unit(b_gates);
  std::vector<int> within2 = k_ball_radius_01(g, second, 2);

  std::vector<char> near_a(static_cast<size_t>(g.n()), 0);
  for (Vertex y : a_set)
    for (Vertex u : g.neighbors(y)) near_a[static_cast<size_t>(u)] = 1;
  std::vector<Vertex> s;
  for (Vertex u = 0; u < g.n(); ++u)
    if (dv[u] == 2 && near_a[static_cast<size_t>(u)] &&
        within2[static_cast<size_t>(u)] >= 0)
      s.push_back(u);
  if (!at3.empty()) {
    std::vector<Vertex> both;
    std::set_intersection(s.begin(), s.end(), y3.begin(), y3.end(),
                          std::back_inserter(both));
    return both;
  }
  return s;
}

// One improvement step in B_2(v) for bipartite Helly graphs: the candidates
// are the vertices simultaneously closer to every furthest profile vertex
// (S1) and not farther from any near-critical one (S2).
inline Vertex improve_eccentricity_bh(const Graph& g, const Profile& pi,
                                      Vertex v) {
  Vertex u = minimize_ball1_bh(g, pi, v);
  if (u != v) return u;

  DistanceRow row = bfs_distances(g, v);
  RadiusEvaluation ev = radius_from_row(pi, v, row);
  Scaled rv = ev.value;
  if (rv == Scaled{}) return v;

  std::vector<Vertex> s1 = interval_second_meet(g, v, ev.furthest);
  if (s1.empty()) return v;

  std::vector<char> in_f(static_cast<size_t>(g.n()), 0);
  for (Vertex z : ev.furthest) in_f[static_cast<size_t>(z)] = 1;
  std::vector<Vertex> x_near, x_far;
  for (const auto& [x, wx] : pi.entries()) {
    if (in_f[static_cast<size_t>(x)]) continue;
    if (Scaled::of(wx, row[x] + 2) < rv) continue;
    if (x == v) return v;  // moving two steps away from v itself cannot help
    (row[x] == 1 ? x_near : x_far).push_back(x);
  }

  std::vector<char> allowed(static_cast<size_t>(g.n()), 1);
  for (Vertex x : x_near) {
    std::vector<char> next(static_cast<size_t>(g.n()), 0);
    for (Vertex w : g.neighbors(x))
      if (allowed[static_cast<size_t>(w)]) next[static_cast<size_t>(w)] = 1;
    allowed = std::move(next);
  }

  std::vector<int> within2;
  if (!x_far.empty()) {
    std::vector<Vertex> ball{v};
    for (Vertex w : g.neighbors(v)) ball.push_back(w);
    OutergateMap map = best_preneighbor_map(g, ball);
    std::vector<Vertex> gates;
    for (Vertex x : x_far) gates.push_back(map[x]);
    std::sort(gates.begin(), gates.end());
    gates.erase(std::unique(gates.begin(), gates.end()), gates.end());
    within2 = k_ball_radius_01(g, Profile::unit(gates), 2);
  }

  for (Vertex cand : s1) {
    if (!allowed[static_cast<size_t>(cand)]) continue;
    if (!x_far.empty() && within2[static_cast<size_t>(cand)] < 0) continue;
    return cand;
  }
  return v;
}

inline ImproveStep bh_improve_step() {
  return ImproveStep{
      [](const Graph& g, const Profile& pi, Vertex v) {
        return improve_eccentricity_bh(g, pi, v);
      },
      2, "bipartite-helly"};
}

}  // namespace gc
