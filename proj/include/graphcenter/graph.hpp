#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gc {

using Vertex = int;

// Immutable simple undirected connected graph in compressed adjacency form.
// Neighbor lists are sorted ascending; each undirected edge is counted once in m().
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list.  Rejects self-loops, duplicate edges, out-of-range
  // endpoints and disconnected input.
  Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n <= 0) throw input_error("graph must have at least one vertex");
    n_ = n;
    std::vector<std::vector<Vertex>> adj(static_cast<size_t>(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw input_error("edge endpoint out of range");
      if (u == v) throw input_error("self-loops are not allowed");
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
    offsets_.assign(static_cast<size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
      auto& lst = adj[static_cast<size_t>(v)];
      std::sort(lst.begin(), lst.end());
      if (std::adjacent_find(lst.begin(), lst.end()) != lst.end())
        throw input_error("duplicate edge");
      offsets_[static_cast<size_t>(v) + 1] =
          offsets_[static_cast<size_t>(v)] + static_cast<int>(lst.size());
    }
    neighbors_.reserve(2 * edges.size());
    for (int v = 0; v < n; ++v)
      for (Vertex u : adj[static_cast<size_t>(v)]) neighbors_.push_back(u);
    m_ = static_cast<int>(edges.size());
    check_connected();
  }

  int n() const { return n_; }
  int m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[static_cast<size_t>(v)],
            neighbors_.data() + offsets_[static_cast<size_t>(v) + 1]};
  }

  int degree(Vertex v) const {
    return offsets_[static_cast<size_t>(v) + 1] - offsets_[static_cast<size_t>(v)];
  }

  bool has_edge(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m_));
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : neighbors(v))
        if (v < u) out.emplace_back(v, u);
    return out;
  }

 private:
  void check_connected() const {
    std::vector<char> seen(static_cast<size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : neighbors(v))
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    if (count != n_) throw input_error("graph is disconnected");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_;
  std::vector<Vertex> neighbors_;
};

// Hop distances from a source set (distance to the nearest source).
struct DistanceRow {
  std::vector<Vertex> sources;
  std::vector<int> dist;

  int operator[](Vertex v) const { return dist[static_cast<size_t>(v)]; }
};

// Multi-source BFS; deterministic regardless of source order.
inline DistanceRow bfs_distances(const Graph& g, const std::vector<Vertex>& sources) {
  if (sources.empty()) throw input_error("bfs_distances: empty source set");
  DistanceRow row;
  row.sources = sources;
  row.dist.assign(static_cast<size_t>(g.n()), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (s < 0 || s >= g.n()) throw input_error("bfs_distances: source out of range");
    if (row.dist[static_cast<size_t>(s)] != 0) {
      row.dist[static_cast<size_t>(s)] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    int dv = row.dist[static_cast<size_t>(v)];
    for (Vertex u : g.neighbors(v))
      if (row.dist[static_cast<size_t>(u)] < 0) {
        row.dist[static_cast<size_t>(u)] = dv + 1;
        q.push(u);
      }
  }
  return row;
}

inline DistanceRow bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::vector<Vertex>{source});
}

// True iff w lies on a geodesic between u and v, i.e. d(u,w)+d(w,v) = d(u,v).
inline bool in_interval(const Graph& /*g*/, Vertex /*u*/, Vertex v, Vertex w,
                        const DistanceRow& du, const DistanceRow& dv) {
  return du[w] + dv[w] == du[v];
}

// All vertices of the interval I(u,v), given distance rows from both ends.
inline std::vector<Vertex> interval_vertices(const Graph& g, Vertex /*u*/, Vertex v,
                                             const DistanceRow& du,
                                             const DistanceRow& dv) {
  std::vector<Vertex> out;
  for (Vertex w = 0; w < g.n(); ++w)
    if (du[w] + dv[w] == du[v]) out.push_back(w);
  return out;
}

}  // namespace gc
