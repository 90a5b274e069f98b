#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "profile.hpp"

namespace gc {

// Static range-maximum structure (sparse table: O(n log n) build, O(1) query).
template <typename T = Scaled>
class RangeMaxIndex {
 public:
  explicit RangeMaxIndex(std::vector<T> values) {
    if (values.empty()) throw input_error("RangeMaxIndex: empty input");
    const int n = static_cast<int>(values.size());
    const int levels = std::bit_width(static_cast<unsigned>(n));
    table_.resize(static_cast<size_t>(levels));
    table_[0] = std::move(values);
    for (int i = 1; i < levels; ++i) {
      const int len = n - (1 << i) + 1;
      table_[static_cast<size_t>(i)].resize(static_cast<size_t>(len));
      for (int j = 0; j < len; ++j) {
        const T& a = table_[static_cast<size_t>(i) - 1][static_cast<size_t>(j)];
        const T& b = table_[static_cast<size_t>(i) - 1]
                           [static_cast<size_t>(j + (1 << (i - 1)))];
        table_[static_cast<size_t>(i)][static_cast<size_t>(j)] = a < b ? b : a;
      }
    }
  }

  int size() const { return static_cast<int>(table_[0].size()); }

  // Maximum of the values over the inclusive index range [i, j].
  T query(int i, int j) const {
    const int level = std::bit_width(static_cast<unsigned>(j - i + 1)) - 1;
    const T& a = table_[static_cast<size_t>(level)][static_cast<size_t>(i)];
    const T& b = table_[static_cast<size_t>(level)]
                       [static_cast<size_t>(j - (1 << level) + 1)];
    return a < b ? b : a;
  }

 private:
  std::vector<std::vector<T>> table_;
};

// For every vertex u, the maximum of kappa over V \ N[u] (strict
// non-neighbors; u itself is excluded).  Each sorted adjacency list plus u
// splits the complement into deg(u)+2 index ranges, each answered by one O(1)
// range-maximum query.  An empty complement yields the default value.
template <typename T = Scaled>
inline std::vector<T> max_over_nonneighbors(const Graph& g,
                                            const std::vector<T>& kappa) {
  if (static_cast<int>(kappa.size()) != g.n())
    throw input_error("max_over_nonneighbors: kappa size mismatch");
  RangeMaxIndex<T> idx(kappa);
  std::vector<T> out(static_cast<size_t>(g.n()));
  for (Vertex u = 0; u < g.n(); ++u) {
    bool first = true;
    T best{};
    int lo = 0;
    auto take = [&](int i, int j) {
      if (i > j) return;
      T q = idx.query(i, j);
      if (first || best < q) best = q;
      first = false;
    };
    bool placed = false;
    for (Vertex v : g.neighbors(u)) {
      if (!placed && u < v) {
        take(lo, u - 1);
        lo = u + 1;
        placed = true;
      }
      take(lo, v - 1);
      lo = v + 1;
    }
    if (!placed) {
      take(lo, u - 1);
      lo = u + 1;
    }
    take(lo, g.n() - 1);
    out[static_cast<size_t>(u)] = first ? T{} : best;
  }
  return out;
}

}  // namespace gc
