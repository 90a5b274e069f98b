#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"
#include "profile.hpp"
#include "rng.hpp"

namespace gc {
namespace recognize {

struct ClassReport {
  std::string class_name;
  bool verdict = true;
  std::string condition;            // violated condition name, if any
  std::vector<Vertex> witness;      // vertices of the counterexample
};

namespace detail {

// (TC): d(v,x)=d(v,y)=k, x~y  =>  exists z~x,y with d(v,z)=k-1.
inline bool triangle_condition(const Graph& g, const oracle::DistanceMatrix& dm,
                               std::vector<Vertex>& witness) {
  for (Vertex v = 0; v < g.n(); ++v)
    for (auto [x, y] : g.edges()) {
      int k = dm.at(v, x);
      if (k != dm.at(v, y) || k < 1) continue;
      bool ok = false;
      for (Vertex z : g.neighbors(x))
        if (dm.at(v, z) == k - 1 && g.has_edge(z, y)) {
          ok = true;
          break;
        }
      if (!ok) {
        witness = {v, x, y};
        return false;
      }
    }
  return true;
}

// (QC): d(v,x)=d(v,y)=k=d(v,u)-1, u~x,y, x !~ y  =>  exists z~x,y with
// d(v,z)=k-1.
inline bool quadrangle_condition(const Graph& g, const oracle::DistanceMatrix& dm,
                                 std::vector<Vertex>& witness) {
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex u = 0; u < g.n(); ++u) {
      int k = dm.at(v, u) - 1;
      if (k < 1) continue;
      auto nb = g.neighbors(u);
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
          Vertex x = nb[i], y = nb[j];
          if (dm.at(v, x) != k || dm.at(v, y) != k || g.has_edge(x, y)) continue;
          bool ok = false;
          for (Vertex z : g.neighbors(x))
            if (dm.at(v, z) == k - 1 && g.has_edge(z, y)) {
              ok = true;
              break;
            }
          if (!ok) {
            witness = {v, u, x, y};
            return false;
          }
        }
    }
  return true;
}

// Induced C4: nonadjacent pair with two nonadjacent common neighbors.
inline bool find_induced_c4(const Graph& g, std::vector<Vertex>& witness) {
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex c = a + 1; c < g.n(); ++c) {
      if (g.has_edge(a, c)) continue;
      std::vector<Vertex> common;
      for (Vertex b : g.neighbors(a))
        if (g.has_edge(b, c)) common.push_back(b);
      for (size_t i = 0; i < common.size(); ++i)
        for (size_t j = i + 1; j < common.size(); ++j)
          if (!g.has_edge(common[i], common[j])) {
            witness = {a, common[i], c, common[j]};
            return true;
          }
    }
  return false;
}

// Induced C5 search by path extension around one starting edge.
inline bool find_induced_c5(const Graph& g, std::vector<Vertex>& witness) {
  for (auto [a, b] : g.edges()) {
    for (Vertex c : g.neighbors(b)) {
      if (c == a || g.has_edge(c, a)) continue;
      for (Vertex d : g.neighbors(c)) {
        if (d == a || d == b || g.has_edge(d, a) || g.has_edge(d, b)) continue;
        for (Vertex e : g.neighbors(d)) {
          if (e == a || e == b || e == c) continue;
          if (g.has_edge(e, a) && !g.has_edge(e, b) && !g.has_edge(e, c)) {
            witness = {a, b, c, d, e};
            return true;
          }
        }
      }
    }
  }
  return false;
}

// Medians of a triple: vertices in all three pairwise intervals.
inline std::vector<Vertex> medians(const Graph& g, const oracle::DistanceMatrix& dm,
                                   Vertex u, Vertex v, Vertex w) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.n(); ++x)
    if (dm.at(u, x) + dm.at(x, v) == dm.at(u, v) &&
        dm.at(v, x) + dm.at(x, w) == dm.at(v, w) &&
        dm.at(u, x) + dm.at(x, w) == dm.at(u, w))
      out.push_back(x);
  return out;
}

// (INC): for every ordered pair (u,v), the neighbors of v in I(u,v) are
// pairwise adjacent.
inline bool inc_condition(const Graph& g, const oracle::DistanceMatrix& dm,
                          std::vector<Vertex>& witness) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v) {
      if (u == v) continue;
      std::vector<Vertex> inner;
      for (Vertex x : g.neighbors(v))
        if (dm.at(u, x) + 1 == dm.at(u, v)) inner.push_back(x);
      for (size_t i = 0; i < inner.size(); ++i)
        for (size_t j = i + 1; j < inner.size(); ++j)
          if (!g.has_edge(inner[i], inner[j])) {
            witness = {u, v, inner[i], inner[j]};
            return false;
          }
    }
  return true;
}

// (TPC): for every v and edge xy equidistant from v at distance k, either
// (TC) holds, or some pentagon x-w-z-w'-y (with d(v,z) <= k-2) closes the gap.
inline bool tpc_condition(const Graph& g, const oracle::DistanceMatrix& dm,
                          std::vector<Vertex>& witness) {
  for (Vertex v = 0; v < g.n(); ++v)
    for (auto [x, y] : g.edges()) {
      int k = dm.at(v, x);
      if (k != dm.at(v, y) || k < 1) continue;
      bool ok = false;
      for (Vertex z : g.neighbors(x))
        if (dm.at(v, z) == k - 1 && g.has_edge(z, y)) {
          ok = true;
          break;
        }
      if (!ok && k >= 2) {
        for (Vertex w : g.neighbors(x)) {
          if (w == y || ok) continue;
          for (Vertex wp : g.neighbors(y)) {
            if (wp == x || wp == w || ok) continue;
            for (Vertex z : g.neighbors(w)) {
              if (z == x || z == y || z == wp) continue;
              if (dm.at(v, z) <= k - 2 && g.has_edge(z, wp)) {
                ok = true;
                break;
              }
            }
          }
        }
      }
      if (!ok) {
        witness = {v, x, y};
        return false;
      }
    }
  return true;
}

// Two-coloring; returns the side of each vertex, or nothing with an odd-cycle
// witness vertex.
inline std::optional<std::vector<char>> bipartition(const Graph& g,
                                                    std::vector<Vertex>& witness) {
  DistanceRow row = bfs_distances(g, 0);
  std::vector<char> side(static_cast<size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    side[static_cast<size_t>(v)] = static_cast<char>(row[v] % 2);
  for (auto [u, v] : g.edges())
    if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)]) {
      witness = {u, v};
      return std::nullopt;
    }
  return side;
}

inline void require_cap(const Graph& g, int cap, const char* who) {
  if (g.n() > cap) throw size_limit_error(std::string(who) + ": cap exceeded");
}

}  // namespace detail

inline ClassReport is_weakly_modular(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_weakly_modular");
  ClassReport rep{"weakly-modular"};
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  if (!detail::triangle_condition(g, dm, rep.witness)) {
    rep.verdict = false;
    rep.condition = "TC";
  } else if (!detail::quadrangle_condition(g, dm, rep.witness)) {
    rep.verdict = false;
    rep.condition = "QC";
  }
  return rep;
}

inline ClassReport is_modular(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_modular");
  ClassReport rep{"modular"};
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      for (Vertex w = v + 1; w < g.n(); ++w)
        if (detail::medians(g, dm, u, v, w).empty()) {
          rep.verdict = false;
          rep.condition = "median-exists";
          rep.witness = {u, v, w};
          return rep;
        }
  return rep;
}

inline ClassReport is_median(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_median");
  ClassReport rep{"median"};
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      for (Vertex w = v + 1; w < g.n(); ++w)
        if (detail::medians(g, dm, u, v, w).size() != 1) {
          rep.verdict = false;
          rep.condition = "unique-median";
          rep.witness = {u, v, w};
          return rep;
        }
  return rep;
}

// Searches for a 3-cube through a vertex of a median graph: three pairwise
// square-spanning neighbors whose three squares close up at distance 3.
inline bool find_q3(const Graph& g, const oracle::DistanceMatrix& dm,
                    std::vector<Vertex>& witness) {
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    auto square_top = [&](Vertex a, Vertex b) -> Vertex {
      for (Vertex x : g.neighbors(a))
        if (x != u && dm.at(u, x) == 2 && g.has_edge(x, b)) return x;
      return -1;
    };
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        for (size_t l = j + 1; l < nb.size(); ++l) {
          Vertex a = nb[i], b = nb[j], c = nb[l];
          Vertex xab = square_top(a, b);
          Vertex xac = square_top(a, c);
          Vertex xbc = square_top(b, c);
          if (xab < 0 || xac < 0 || xbc < 0) continue;
          for (Vertex t : g.neighbors(xab))
            if (dm.at(u, t) == 3 && g.has_edge(t, xac) && g.has_edge(t, xbc)) {
              witness = {u, a, b, c, xab, xac, xbc, t};
              return true;
            }
        }
  }
  return false;
}

inline ClassReport is_cube_free_median(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_cube_free_median");
  ClassReport rep = is_median(g, cap);
  rep.class_name = "cube-free-median";
  if (!rep.verdict) return rep;
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  if (find_q3(g, dm, rep.witness)) {
    rep.verdict = false;
    rep.condition = "no-3-cube";
  }
  return rep;
}

inline ClassReport is_weakly_bridged(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_weakly_bridged");
  ClassReport rep = is_weakly_modular(g, cap);
  rep.class_name = "weakly-bridged";
  if (!rep.verdict) return rep;
  if (detail::find_induced_c4(g, rep.witness)) {
    rep.verdict = false;
    rep.condition = "no-induced-C4";
  }
  return rep;
}

inline ClassReport is_bridged(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_bridged");
  ClassReport rep = is_weakly_bridged(g, cap);
  rep.class_name = "bridged";
  if (!rep.verdict) return rep;
  if (detail::find_induced_c5(g, rep.witness)) {
    rep.verdict = false;
    rep.condition = "no-induced-C5";
  }
  return rep;
}

inline ClassReport is_cb_graph(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_cb_graph");
  ClassReport rep{"convex-balls"};
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  if (!detail::inc_condition(g, dm, rep.witness)) {
    rep.verdict = false;
    rep.condition = "INC";
  } else if (!detail::tpc_condition(g, dm, rep.witness)) {
    rep.verdict = false;
    rep.condition = "TPC";
  }
  return rep;
}

// Interval-outergate property for a single ordered pair, from a distance
// matrix: a second common neighbor of N(v) & I(u,v) inside I(u,v).
inline bool interval_outergate_holds(const Graph& g,
                                     const oracle::DistanceMatrix& dm, Vertex u,
                                     Vertex v) {
  int k = dm.at(u, v);
  std::vector<Vertex> inner;
  for (Vertex x : g.neighbors(v))
    if (dm.at(u, x) + 1 == k) inner.push_back(x);
  for (Vertex w = 0; w < g.n(); ++w) {
    if (dm.at(u, w) != k - 2 || dm.at(w, v) != 2) continue;
    bool ok = true;
    for (Vertex x : inner)
      if (!g.has_edge(w, x)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

inline ClassReport is_bipartite_helly(const Graph& g, int cap = 500) {
  detail::require_cap(g, cap, "is_bipartite_helly");
  ClassReport rep{"bipartite-helly"};
  if (!detail::bipartition(g, rep.witness)) {
    rep.verdict = false;
    rep.condition = "bipartite";
    return rep;
  }
  ClassReport mod = is_modular(g, cap);
  if (!mod.verdict) {
    rep.verdict = false;
    rep.condition = mod.condition;
    rep.witness = mod.witness;
    return rep;
  }
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v)
      if (u != v && dm.at(u, v) >= 3 && !interval_outergate_holds(g, dm, u, v)) {
        rep.verdict = false;
        rep.condition = "interval-outergate";
        rep.witness = {u, v};
        return rep;
      }
  return rep;
}

// Randomized falsification probe for the half-ball Helly property: samples
// subfamilies of half-balls and checks pairwise intersection implies a common
// vertex.  Returns false on any violation.
inline bool half_ball_helly_probe(const Graph& g, std::uint64_t seed,
                                  int trials = 2000, int cap = 80) {
  detail::require_cap(g, cap, "half_ball_helly_probe");
  std::vector<Vertex> side_witness;
  auto side = detail::bipartition(g, side_witness);
  if (!side) return false;
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  int diam = *std::max_element(dm.d.begin(), dm.d.end());
  SplitMix64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    int half = static_cast<int>(rng.next_below(2));
    int size = 3 + static_cast<int>(rng.next_below(6));
    std::vector<std::pair<Vertex, int>> family;
    for (int i = 0; i < size; ++i)
      family.emplace_back(static_cast<Vertex>(rng.next_below(
                              static_cast<std::uint64_t>(g.n()))),
                          1 + static_cast<int>(rng.next_below(
                                  static_cast<std::uint64_t>(diam))));
    // Pairwise intersection within the chosen half.
    auto in_half_ball = [&](const std::pair<Vertex, int>& b, Vertex x) {
      return (*side)[static_cast<size_t>(x)] == half && dm.at(b.first, x) <= b.second;
    };
    bool pairwise = true;
    for (size_t i = 0; i < family.size() && pairwise; ++i)
      for (size_t j = i + 1; j < family.size() && pairwise; ++j) {
        bool meet = false;
        for (Vertex x = 0; x < g.n() && !meet; ++x)
          if (in_half_ball(family[i], x) && in_half_ball(family[j], x)) meet = true;
        if (!meet) pairwise = false;
      }
    if (!pairwise) continue;
    bool common = false;
    for (Vertex x = 0; x < g.n() && !common; ++x) {
      bool in_all = true;
      for (size_t i = 0; i < family.size() && in_all; ++i)
        if (!in_half_ball(family[i], x)) in_all = false;
      if (in_all) common = true;
    }
    if (!common) return false;
  }
  return true;
}

struct GpUnimodalReport {
  bool verdict = true;
  Vertex u = -1, v = -1;  // failing pair when verdict is false
};

namespace detail {

// UC(u,v): every x in B_p(u) has a witness w with d(x,w) >= d(u,w) and
// d(x,w) > d(v,w).  When UC holds for a pair at distance > p, some radius
// function has a non-global local minimum at u in G^p.
inline bool uc_condition(const Graph& g, const oracle::DistanceMatrix& dm,
                         Vertex u, Vertex v, int p) {
  for (Vertex x = 0; x < g.n(); ++x) {
    if (dm.at(u, x) > p) continue;
    bool found = false;
    for (Vertex w = 0; w < g.n() && !found; ++w)
      if (dm.at(x, w) >= dm.at(u, w) && dm.at(x, w) > dm.at(v, w)) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace detail

// Decides whether all radius functions of G are G^p-unimodal.
inline GpUnimodalReport recognize_Gp_unimodal_radius(const Graph& g, int p,
                                                     int cap = 300) {
  if (p < 1) throw input_error("recognize_Gp_unimodal_radius: p must be >= 1");
  detail::require_cap(g, cap, "recognize_Gp_unimodal_radius");
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = 0; v < g.n(); ++v)
      if (u != v && dm.at(u, v) > p && detail::uc_condition(g, dm, u, v, p))
        return GpUnimodalReport{false, u, v};
  return GpUnimodalReport{};
}

// Builds the violating profile for a pair satisfying UC: support consists of
// the per-x witnesses w_x, with weight 1/min assigned distance.  Postconditions
// (r_pi(u)=1, u a local minimum in G^p, r_pi(v)<1) are verified exactly before
// returning.
inline Profile build_violating_profile(const Graph& g, Vertex u, Vertex v, int p,
                                       int cap = 300) {
  detail::require_cap(g, cap, "build_violating_profile");
  oracle::DistanceMatrix dm = oracle::all_pairs(g, cap);
  if (dm.at(u, v) <= p || !detail::uc_condition(g, dm, u, v, p))
    throw input_error("build_violating_profile: UC(u,v) does not hold");
  std::vector<std::int64_t> min_dist(static_cast<size_t>(g.n()), -1);
  for (Vertex x = 0; x < g.n(); ++x) {
    if (dm.at(u, x) > p) continue;
    // Smallest-index witness for x.
    for (Vertex w = 0; w < g.n(); ++w)
      if (dm.at(x, w) >= dm.at(u, w) && dm.at(x, w) > dm.at(v, w)) {
        auto& md = min_dist[static_cast<size_t>(w)];
        if (md < 0 || dm.at(w, x) < md) md = dm.at(w, x);
        break;
      }
  }
  std::vector<std::pair<Vertex, Weight>> entries;
  for (Vertex w = 0; w < g.n(); ++w)
    if (min_dist[static_cast<size_t>(w)] > 0)
      entries.emplace_back(w, Weight::ratio(1, min_dist[static_cast<size_t>(w)]));
  Profile pi(std::move(entries));
  // Exact verification of the construction.
  RadiusEvaluation ru = radius_at(g, pi, u);
  Scaled one{1.0, true, 1, 1};
  if (!(ru.value == one)) throw invariant_violation("violating profile: r(u) != 1");
  RadiusEvaluation rv = radius_at(g, pi, v);
  if (!(rv.value < one)) throw invariant_violation("violating profile: r(v) >= 1");
  for (Vertex x = 0; x < g.n(); ++x)
    if (dm.at(u, x) <= p && radius_at(g, pi, x).value < ru.value)
      throw invariant_violation("violating profile: u not a local minimum");
  return pi;
}

}  // namespace recognize
}  // namespace gc
