#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace gc {

// A strictly positive vertex weight.  Weights constructed from integers (or
// integer ratios) carry an exact num/den representation alongside the double,
// so that all comparisons in tests and in derived-profile reductions are exact.
struct Weight {
  double value = 1.0;
  bool exact = true;
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Weight integer(std::int64_t w) {
    return Weight{static_cast<double>(w), true, w, 1};
  }
  static Weight ratio(std::int64_t num, std::int64_t den) {
    return Weight{static_cast<double>(num) / static_cast<double>(den), true, num, den};
  }
  static Weight real(double w) { return Weight{w, false, 0, 1}; }
};

// A weighted distance value pi(z) * d(z,v), comparable exactly when the weight
// is exact.  Used for radius values and furthest-set membership.
struct Scaled {
  double value = 0.0;
  bool exact = true;
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Scaled of(const Weight& w, int dist) {
    Scaled s;
    s.value = w.value * dist;
    s.exact = w.exact;
    if (w.exact) {
      s.num = w.num * dist;
      s.den = w.den;
    }
    return s;
  }

  // -1 / 0 / +1 three-way comparison; exact via cross-multiplication whenever
  // both sides carry rational representations.
  static int compare(const Scaled& a, const Scaled& b) {
    if (a.exact && b.exact) {
      __int128 lhs = static_cast<__int128>(a.num) * b.den;
      __int128 rhs = static_cast<__int128>(b.num) * a.den;
      return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
    }
    return a.value < b.value ? -1 : (a.value > b.value ? 1 : 0);
  }

  bool operator<(const Scaled& o) const { return compare(*this, o) < 0; }
  bool operator>(const Scaled& o) const { return compare(*this, o) > 0; }
  bool operator==(const Scaled& o) const { return compare(*this, o) == 0; }
  bool operator<=(const Scaled& o) const { return compare(*this, o) <= 0; }
  bool operator>=(const Scaled& o) const { return compare(*this, o) >= 0; }
};

// Sparse map vertex -> positive weight; defines the radius function r_pi.
class Profile {
 public:
  Profile() = default;

  explicit Profile(std::vector<std::pair<Vertex, Weight>> weights) {
    std::sort(weights.begin(), weights.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i < weights.size(); ++i) {
      if (weights[i].second.value <= 0.0)
        throw input_error("profile weights must be strictly positive");
      if (i > 0 && weights[i].first == weights[i - 1].first)
        throw input_error("duplicate vertex in profile");
    }
    if (weights.empty()) throw input_error("profile support must be nonempty");
    entries_ = std::move(weights);
  }

  static Profile unit(const std::vector<Vertex>& support) {
    std::vector<std::pair<Vertex, Weight>> w;
    w.reserve(support.size());
    for (Vertex v : support) w.emplace_back(v, Weight::integer(1));
    return Profile(std::move(w));
  }

  static Profile unit_all(const Graph& g) {
    std::vector<Vertex> all(static_cast<size_t>(g.n()));
    for (Vertex v = 0; v < g.n(); ++v) all[static_cast<size_t>(v)] = v;
    return unit(all);
  }

  static Profile from_integers(const std::vector<std::pair<Vertex, std::int64_t>>& w) {
    std::vector<std::pair<Vertex, Weight>> out;
    out.reserve(w.size());
    for (auto [v, x] : w) out.emplace_back(v, Weight::integer(x));
    return Profile(std::move(out));
  }

  const std::vector<std::pair<Vertex, Weight>>& entries() const { return entries_; }

  std::vector<Vertex> support() const {
    std::vector<Vertex> s;
    s.reserve(entries_.size());
    for (const auto& e : entries_) s.push_back(e.first);
    return s;
  }

  std::optional<Weight> weight(Vertex v) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), v,
        [](const auto& e, Vertex x) { return e.first < x; });
    if (it == entries_.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  bool contains(Vertex v) const { return weight(v).has_value(); }

  // True iff every stored weight equals 1.
  bool is_01() const {
    for (const auto& e : entries_)
      if (!(e.second.exact && e.second.num == e.second.den)) return false;
    return true;
  }

 private:
  std::vector<std::pair<Vertex, Weight>> entries_;
};

// r_pi(vertex) together with the furthest set F_pi(vertex).
struct RadiusEvaluation {
  Vertex vertex = -1;
  Scaled value;
  std::vector<Vertex> furthest;
};

// Evaluates r_pi at v given a distance row from v (exact tie detection).
inline RadiusEvaluation radius_from_row(const Profile& pi, Vertex v,
                                        const DistanceRow& dv) {
  RadiusEvaluation out;
  out.vertex = v;
  bool first = true;
  for (const auto& [z, w] : pi.entries()) {
    Scaled s = Scaled::of(w, dv[z]);
    if (first || s > out.value) {
      out.value = s;
      out.furthest.clear();
      out.furthest.push_back(z);
      first = false;
    } else if (s == out.value) {
      out.furthest.push_back(z);
    }
  }
  return out;
}

// One BFS from v, then the exact weighted eccentricity and its argmax set.
inline RadiusEvaluation radius_at(const Graph& g, const Profile& pi, Vertex v) {
  if (v < 0 || v >= g.n()) throw input_error("radius_at: vertex out of range");
  return radius_from_row(pi, v, bfs_distances(g, v));
}

struct CenterResult {
  Scaled radius;
  std::vector<Vertex> centers;
};

// Exhaustive n-BFS oracle: exact rad_pi(G) and the full center C_pi(G).
inline CenterResult center_bruteforce_small(const Graph& g, const Profile& pi,
                                            int cap = 5000) {
  if (g.n() > cap)
    throw size_limit_error("center_bruteforce_small: vertex count exceeds cap");
  CenterResult out;
  bool first = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    RadiusEvaluation ev = radius_at(g, pi, v);
    if (first || ev.value < out.radius) {
      out.radius = ev.value;
      out.centers.assign(1, v);
      first = false;
    } else if (ev.value == out.radius) {
      out.centers.push_back(v);
    }
  }
  return out;
}

}  // namespace gc
