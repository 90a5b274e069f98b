#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "profile.hpp"

namespace gc {
namespace oracle {

// Full hop-distance matrix from n BFS sweeps.
struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major n*n

  int at(Vertex u, Vertex v) const {
    return d[static_cast<size_t>(u) * static_cast<size_t>(n) + static_cast<size_t>(v)];
  }
};

inline DistanceMatrix all_pairs(const Graph& g, int cap = 5000) {
  if (g.n() > cap) throw size_limit_error("all_pairs: vertex count exceeds cap");
  DistanceMatrix dm;
  dm.n = g.n();
  dm.d.resize(static_cast<size_t>(g.n()) * static_cast<size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    DistanceRow row = bfs_distances(g, v);
    std::copy(row.dist.begin(), row.dist.end(),
              dm.d.begin() + static_cast<size_t>(v) * static_cast<size_t>(g.n()));
  }
  return dm;
}

// All radius values r_pi(v), one BFS per vertex.
inline std::vector<Scaled> all_radius_values(const Graph& g, const Profile& pi) {
  std::vector<Scaled> r(static_cast<size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    r[static_cast<size_t>(v)] = radius_at(g, pi, v).value;
  return r;
}

struct PeaklessCounterexample {
  Vertex u = -1;
  Vertex v = -1;
  std::string explanation;
};

struct PeaklessReport {
  bool holds = true;
  std::optional<PeaklessCounterexample> counterexample;
};

// Exhaustive check that r_pi is p-weakly peakless.  The defining condition
// WP(u,v) -- some interior interval vertex w has value <= max of the endpoint
// values, with equality only when all three values coincide -- needs checking
// only for pairs with p+1 <= d(u,v) <= 2p (local-to-global).
inline PeaklessReport is_p_weakly_peakless(const Graph& g, const Profile& pi,
                                           int p, int cap = 1000) {
  if (p < 1) throw input_error("is_p_weakly_peakless: p must be >= 1");
  if (g.n() > cap) throw size_limit_error("is_p_weakly_peakless: cap exceeded");
  DistanceMatrix dm = all_pairs(g, cap);
  std::vector<Scaled> r = all_radius_values(g, pi);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      int duv = dm.at(u, v);
      if (duv < p + 1 || duv > 2 * p) continue;
      Scaled hi = std::max(r[static_cast<size_t>(u)], r[static_cast<size_t>(v)]);
      bool all_equal_ok =
          r[static_cast<size_t>(u)] == r[static_cast<size_t>(v)];
      bool ok = false;
      for (Vertex w = 0; w < g.n() && !ok; ++w) {
        if (w == u || w == v) continue;
        if (dm.at(u, w) + dm.at(w, v) != duv) continue;
        const Scaled& rw = r[static_cast<size_t>(w)];
        if (rw < hi || (all_equal_ok && rw == hi)) ok = true;
      }
      if (!ok) {
        PeaklessReport rep;
        rep.holds = false;
        rep.counterexample = PeaklessCounterexample{
            u, v, "no interior interval vertex satisfies WP(u,v)"};
        return rep;
      }
    }
  }
  return PeaklessReport{};
}

struct UnimodalReport {
  bool holds = true;
  Vertex counterexample = -1;  // smallest-index non-global local minimum
};

// Checks G^p-unimodality of r_pi: every vertex minimizing r_pi within its
// radius-p ball must be a global minimizer.
inline UnimodalReport is_Gp_unimodal_for_profile(const Graph& g, const Profile& pi,
                                                 int p, int cap = 1000) {
  if (p < 1) throw input_error("is_Gp_unimodal_for_profile: p must be >= 1");
  if (g.n() > cap) throw size_limit_error("is_Gp_unimodal_for_profile: cap exceeded");
  std::vector<Scaled> r = all_radius_values(g, pi);
  Scaled global = *std::min_element(r.begin(), r.end());
  for (Vertex v = 0; v < g.n(); ++v) {
    if (r[static_cast<size_t>(v)] == global) continue;
    DistanceRow row = bfs_distances(g, v);
    bool local_min = true;
    for (Vertex w = 0; w < g.n() && local_min; ++w)
      if (row[w] <= p && r[static_cast<size_t>(w)] < r[static_cast<size_t>(v)])
        local_min = false;
    if (local_min) return UnimodalReport{false, v};
  }
  return UnimodalReport{};
}

// Exact Gromov hyperbolicity via the four-point condition, returned as twice
// delta (so the result is integral); delta itself is the half-integer delta2/2.
inline int hyperbolicity_twice_exact(const Graph& g, int cap = 300) {
  if (g.n() > cap) throw size_limit_error("hyperbolicity_exact: cap exceeded");
  DistanceMatrix dm = all_pairs(g, cap);
  int delta2 = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      for (Vertex x = v + 1; x < g.n(); ++x)
        for (Vertex y = x + 1; y < g.n(); ++y) {
          int s1 = dm.at(u, v) + dm.at(x, y);
          int s2 = dm.at(u, x) + dm.at(v, y);
          int s3 = dm.at(u, y) + dm.at(v, x);
          int hi = std::max({s1, s2, s3});
          int mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          delta2 = std::max(delta2, hi - mid);
        }
  return delta2;
}

inline double hyperbolicity_exact(const Graph& g, int cap = 300) {
  return hyperbolicity_twice_exact(g, cap) / 2.0;
}

struct ConvexityReport {
  bool holds = true;
  Vertex center = -1;
  int radius = -1;
  Vertex x = -1, y = -1, w = -1;  // witness: w in I(x,y) but outside the ball
};

// Checks that every ball is convex.  Primary check: pairs at distance 2 inside
// a ball must have all common neighbors inside it; below full_cap every pair
// is checked against the whole interval.
inline ConvexityReport ball_convexity_check(const Graph& g, int cap = 500,
                                            int full_cap = 150) {
  if (g.n() > cap) throw size_limit_error("ball_convexity_check: cap exceeded");
  DistanceMatrix dm = all_pairs(g, cap);
  bool full = g.n() <= full_cap;
  int diam = 0;
  for (size_t i = 0; i < dm.d.size(); ++i) diam = std::max(diam, dm.d[i]);
  for (Vertex c = 0; c < g.n(); ++c) {
    for (int r = 1; r < diam; ++r) {
      for (Vertex x = 0; x < g.n(); ++x) {
        if (dm.at(c, x) > r) continue;
        for (Vertex y = x + 1; y < g.n(); ++y) {
          if (dm.at(c, y) > r) continue;
          int dxy = dm.at(x, y);
          if (!full && dxy != 2) continue;
          if (dxy < 2) continue;
          for (Vertex w = 0; w < g.n(); ++w)
            if (dm.at(x, w) + dm.at(w, y) == dxy && dm.at(c, w) > r)
              return ConvexityReport{false, c, r, x, y, w};
        }
      }
    }
  }
  return ConvexityReport{};
}

// Helly test for an explicit family of balls: pairwise intersection must
// imply a common vertex.
inline bool helly_balls_check(const Graph& g,
                              const std::vector<std::pair<Vertex, int>>& family,
                              int cap = 1000) {
  if (family.empty()) throw input_error("helly_balls_check: empty family");
  if (g.n() > cap) throw size_limit_error("helly_balls_check: cap exceeded");
  std::vector<DistanceRow> rows;
  rows.reserve(family.size());
  for (const auto& [c, r] : family) {
    if (r < 0) throw input_error("helly_balls_check: negative radius");
    rows.push_back(bfs_distances(g, c));
  }
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (rows[i][family[j].first] > family[i].second + family[j].second)
        return true;  // not pairwise intersecting: nothing to satisfy
  for (Vertex v = 0; v < g.n(); ++v) {
    bool in_all = true;
    for (size_t i = 0; i < family.size() && in_all; ++i)
      if (rows[i][v] > family[i].second) in_all = false;
    if (in_all) return true;
  }
  return false;
}

// For a 0-1 profile and a Helly-gap bound alpha: any vertex with
// r_pi(v) > rad + alpha must have an improving vertex within distance
// 2*alpha + 1.
inline bool verify_coarse_helly_unimodality(const Graph& g, const Profile& pi01,
                                            int alpha, int cap = 1000) {
  if (!pi01.is_01())
    throw input_error("verify_coarse_helly_unimodality: profile must be 0-1");
  if (g.n() > cap)
    throw size_limit_error("verify_coarse_helly_unimodality: cap exceeded");
  std::vector<Scaled> r = all_radius_values(g, pi01);
  Scaled rad = *std::min_element(r.begin(), r.end());
  Scaled bound{rad.value + alpha, rad.exact, rad.num + alpha * rad.den, rad.den};
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!(r[static_cast<size_t>(v)] > bound)) continue;
    DistanceRow row = bfs_distances(g, v);
    bool improving = false;
    for (Vertex w = 0; w < g.n() && !improving; ++w)
      if (row[w] <= 2 * alpha + 1 &&
          r[static_cast<size_t>(w)] < r[static_cast<size_t>(v)])
        improving = true;
    if (!improving) return false;
  }
  return true;
}

// Checks 2*rad(M) >= diam(M) >= 2*rad(M) - 2*alpha - 1 for the 0-1 profile
// supported on the subset M (radius minimized over all of V).
inline bool verify_diam_rad_inequality(const Graph& g,
                                       const std::vector<Vertex>& subset,
                                       int alpha, int cap = 1000) {
  if (subset.empty()) throw input_error("verify_diam_rad_inequality: empty subset");
  if (g.n() > cap)
    throw size_limit_error("verify_diam_rad_inequality: cap exceeded");
  std::vector<DistanceRow> rows;
  rows.reserve(subset.size());
  for (Vertex v : subset) rows.push_back(bfs_distances(g, v));
  int diam = 0;
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      diam = std::max(diam, rows[i][subset[j]]);
  int rad = g.n();  // min over all vertices of max distance to M
  for (Vertex v = 0; v < g.n(); ++v) {
    int ecc = 0;
    for (size_t i = 0; i < subset.size(); ++i) ecc = std::max(ecc, rows[i][v]);
    rad = std::min(rad, ecc);
  }
  return 2 * rad >= diam && diam >= 2 * rad - 2 * alpha - 1;
}

}  // namespace oracle
}  // namespace gc
