#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "profile.hpp"
#include "rng.hpp"

namespace gc {

// An improvement callback: given a current vertex v, returns some u within
// distance `radius` of v with r_pi(u) < r_pi(v), or v itself when no such
// vertex is claimed to exist.  The drivers below certify both promises at
// every step and raise invariant_violation on any breach.
struct ImproveStep {
  std::function<Vertex(const Graph&, const Profile&, Vertex)> step;
  int radius = 2;
  std::string class_name;
};

struct TraceEntry {
  Vertex vertex;
  Scaled value;
};

struct DescentTrace {
  std::vector<TraceEntry> path;  // strictly decreasing r_pi values
  std::uint64_t seed = 0;
  std::vector<Vertex> sample;    // the evaluated start candidates U
  Vertex terminal = -1;

  int steps() const { return static_cast<int>(path.size()) - 1; }
};

namespace detail {

// Runs certified local search from `start`: every move is checked to stay
// within the declared step radius and to strictly decrease r_pi.
inline void descend_from(const Graph& g, const Profile& pi,
                         const ImproveStep& improve, Vertex start,
                         DescentTrace& trace) {
  Vertex v = start;
  DistanceRow row = bfs_distances(g, v);
  Scaled rv = radius_from_row(pi, v, row).value;
  trace.path.push_back({v, rv});
  for (;;) {
    Vertex u = improve.step(g, pi, v);
    if (u == v) break;
    if (u < 0 || u >= g.n() || row[u] > improve.radius)
      throw invariant_violation(
          "descent: improve step left the declared ball (class " +
          improve.class_name + ")");
    row = bfs_distances(g, u);
    Scaled ru = radius_from_row(pi, u, row).value;
    if (!(ru < rv))
      throw invariant_violation(
          "descent: improve step did not decrease the radius (class " +
          improve.class_name + ")");
    v = u;
    rv = ru;
    trace.path.push_back({v, rv});
  }
  trace.terminal = v;
}

// Evaluates r_pi on the candidate set and returns the best start vertex
// (smallest index on ties).
inline Vertex best_of(const Graph& g, const Profile& pi,
                      const std::vector<Vertex>& candidates) {
  Vertex best = -1;
  Scaled best_r;
  for (Vertex u : candidates) {
    Scaled r = radius_at(g, pi, u).value;
    if (best < 0 || r < best_r) {
      best = u;
      best_r = r;
    }
  }
  return best;
}

}  // namespace detail

// Randomized driver: samples ceil(c * sqrt(n) * ln n) vertices, starts local
// search from the best of them.  With a class-valid improve step the terminal
// vertex is a fixed point of the step.
inline std::pair<Vertex, DescentTrace> sample_select_descent(
    const Graph& g, const Profile& pi, const ImproveStep& improve,
    std::uint64_t seed, double sample_factor = 3.0) {
  DescentTrace trace;
  trace.seed = seed;
  const int n = g.n();
  int want = static_cast<int>(std::ceil(
      sample_factor * std::sqrt(static_cast<double>(n)) *
      std::max(1.0, std::log(static_cast<double>(n)))));
  SplitMix64 rng(seed);
  if (want >= n) {
    for (Vertex v = 0; v < n; ++v) trace.sample.push_back(v);
  } else {
    std::set<Vertex> picked;
    while (static_cast<int>(picked.size()) < want)
      picked.insert(static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n))));
    trace.sample.assign(picked.begin(), picked.end());
  }
  Vertex start = detail::best_of(g, pi, trace.sample);
  detail::descend_from(g, pi, improve, start, trace);
  return {trace.terminal, trace};
}

// Greedy net: repeatedly picks the smallest-index vertex farther than
// 2*ceil(sqrt(n)) from all chosen centers.  Every vertex ends up within that
// radius of some center.
inline std::vector<Vertex> ball_cover_sqrt(const Graph& g) {
  const int n = g.n();
  const int radius =
      2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<Vertex> centers;
  std::vector<int> dist(static_cast<size_t>(n), -1);
  for (;;) {
    Vertex next = -1;
    for (Vertex v = 0; v < n; ++v)
      if (centers.empty() || dist[static_cast<size_t>(v)] > radius) {
        next = v;
        break;
      }
    if (next < 0) break;
    centers.push_back(next);
    dist = bfs_distances(g, centers).dist;
  }
  return centers;
}

// Deterministic 0-1 driver: starts from the best ball-cover center.  A 0-1
// radius function drops by at most 2 per step in G^2, which caps the number
// of improvement steps at 2(ceil(sqrt(n)) + 1); the bound is asserted.
inline std::pair<Vertex, DescentTrace> deterministic_descent_01(
    const Graph& g, const Profile& pi01, const ImproveStep& improve) {
  if (!pi01.is_01())
    throw input_error("deterministic_descent_01: profile is not 0-1");
  DescentTrace trace;
  trace.sample = ball_cover_sqrt(g);
  Vertex start = detail::best_of(g, pi01, trace.sample);
  detail::descend_from(g, pi01, improve, start, trace);
  const int bound =
      2 * (static_cast<int>(std::ceil(std::sqrt(static_cast<double>(g.n())))) + 1);
  if (trace.steps() > bound)
    throw invariant_violation(
        "deterministic_descent_01: step bound exceeded (class " +
        improve.class_name + ")");
  return {trace.terminal, trace};
}

// Double farthest-point scan restricted to supp(pi): the midpoint of the
// resulting geodesic is within 5*delta of the center in a delta-hyperbolic
// graph, so at most 5*delta + 1 improvement steps remain; asserted.
inline std::pair<Vertex, DescentTrace> fpscan_descent(const Graph& g,
                                                      const Profile& pi01,
                                                      int delta,
                                                      const ImproveStep& improve) {
  if (!pi01.is_01()) throw input_error("fpscan_descent: profile is not 0-1");
  if (delta < 0) throw input_error("fpscan_descent: negative delta");
  std::vector<Vertex> supp = pi01.support();

  auto furthest_support = [&](Vertex from) {
    DistanceRow row = bfs_distances(g, from);
    Vertex best = supp.front();
    for (Vertex s : supp)
      if (row[s] > row[best]) best = s;
    return best;
  };
  Vertex u = furthest_support(supp.front());
  Vertex w = furthest_support(u);

  // Smallest-index (u,w)-geodesic, floor midpoint.
  DistanceRow du = bfs_distances(g, u);
  DistanceRow dw = bfs_distances(g, w);
  Vertex c = u;
  for (int i = 0; i < du[w] / 2; ++i) {
    Vertex next = -1;
    for (Vertex y : g.neighbors(c))
      if (du[y] == du[c] + 1 && dw[y] == dw[c] - 1) {
        next = y;
        break;
      }
    c = next;
  }

  DescentTrace trace;
  trace.sample = {c};
  detail::descend_from(g, pi01, improve, c, trace);
  if (trace.steps() > 5 * delta + 1)
    throw invariant_violation("fpscan_descent: step bound 5*delta+1 exceeded");
  return {trace.terminal, trace};
}

// Fallback improve step: scans B_p(v) exhaustively (one BFS per candidate).
// Valid on any graph; intended for cross-validation and Helly-style corpora.
inline Vertex brute_improve(const Graph& g, const Profile& pi, Vertex v, int p) {
  if (p < 1) throw input_error("brute_improve: need p >= 1");
  DistanceRow row = bfs_distances(g, v);
  Scaled rv = radius_from_row(pi, v, row).value;
  for (Vertex w = 0; w < g.n(); ++w)
    if (w != v && row[w] <= p && radius_at(g, pi, w).value < rv) return w;
  return v;
}

// Ready-made ImproveStep wrapping brute_improve.
inline ImproveStep brute_improve_step(int p) {
  return ImproveStep{
      [p](const Graph& g, const Profile& pi, Vertex v) {
        return brute_improve(g, pi, v, p);
      },
      p, "brute"};
}

}  // namespace gc
