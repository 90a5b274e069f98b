#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "graphcenter/gen.hpp"
#include "graphcenter/improve_bridged.hpp"
#include "graphcenter/oracle.hpp"

using namespace gc;

TEST_CASE("clique eccentricities via outergates") {
  Graph k4 = gen::complete(4);
  Profile pi = Profile::from_integers({{0, 3}, {2, 1}});
  std::vector<Scaled> ecc = clique_eccentricities_wb(k4, pi, {0, 1, 2, 3});
  CHECK(ecc[0] == Scaled::of(Weight::integer(1), 1));  // only vertex 2 is far
  CHECK(ecc[1] == Scaled::of(Weight::integer(3), 1));
  CHECK(ecc[2] == Scaled::of(Weight::integer(3), 1));
  CHECK(ecc[3] == Scaled::of(Weight::integer(3), 1));

  CHECK_THROWS_AS(clique_eccentricities_wb(k4, pi, {}), input_error);
  Graph p4 = gen::path(4);
  CHECK_THROWS_AS(clique_eccentricities_wb(p4, pi, {0, 2}), input_error);
}

TEST_CASE("clique eccentricities match the brute oracle on weakly bridged corpora") {
  SplitMix64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::WeaklyBridged, 60, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    auto edges = g.edges();
    for (int probes = 0; probes < 5; ++probes) {
      auto [a, b] = edges[rng.next_below(edges.size())];
      std::vector<Vertex> k{a, b};
      for (Vertex c : g.neighbors(a))
        if (c != b && g.has_edge(c, b)) {
          k.push_back(c);
          break;
        }
      std::vector<Scaled> ecc = clique_eccentricities_wb(g, pi, k);
      for (size_t i = 0; i < k.size(); ++i)
        CHECK(ecc[i] == radius_at(g, pi, k[i]).value);
    }
  }
}

TEST_CASE("minimize_ball1_wb on paths") {
  Graph p5 = gen::path(5);
  Profile unit = Profile::unit_all(p5);
  CHECK(minimize_ball1_wb(p5, unit, 0) == 1);
  CHECK(minimize_ball1_wb(p5, unit, 1) == 2);
  CHECK(minimize_ball1_wb(p5, unit, 2) == 2);
  CHECK(minimize_ball1_wb(p5, Profile::unit({3}), 3) == 3);
}

TEST_CASE("minimize_ball1_wb finds the exact unit-ball minimum") {
  SplitMix64 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::WeaklyBridged, 50, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex u = minimize_ball1_wb(g, pi, v);
      Scaled rv = radius_at(g, pi, v).value;
      if (u != v) {
        CHECK(g.has_edge(u, v));
        CHECK(radius_at(g, pi, u).value < rv);
      } else {
        for (Vertex w : g.neighbors(v)) CHECK_FALSE(radius_at(g, pi, w).value < rv);
      }
    }
  }
}

TEST_CASE("shadow partition classes carry exact shadows") {
  // In a weakly bridged graph, z lies in the shadow of a neighbor w of v
  // exactly when w is one step closer to z, and the gate signature detects it.
  SplitMix64 rng(59);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::WeaklyBridged, 50, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (Vertex v = 0; v < g.n(); ++v) {
      RadiusEvaluation ev = radius_at(g, pi, v);
      DistanceRow row = bfs_distances(g, v);
      bool has_close = false;
      for (Vertex z : ev.furthest)
        if (row[z] <= 1) has_close = true;
      if (has_close || ev.value == Scaled{}) continue;  // outside the op contract
      ShadowPartition part = shadow_partition_wb(g, pi, v);

      // Classes partition N(v).
      std::set<Vertex> seen;
      size_t total = 0;
      for (const auto& cls : part.classes) {
        total += cls.size();
        for (Vertex w : cls) CHECK(seen.insert(w).second);
      }
      CHECK(total == g.neighbors(v).size());
      CHECK(part.furthest_count == static_cast<long long>(ev.furthest.size()));

      // Per neighbor, the class shadow size equals the brute shadow count.
      for (size_t ci = 0; ci < part.classes.size(); ++ci)
        for (Vertex w : part.classes[ci]) {
          DistanceRow dw = bfs_distances(g, w);
          long long brute = 0;
          for (Vertex z : ev.furthest)
            if (dw[z] == row[z] - 1) ++brute;
          CHECK(part.shadow_size[ci] == brute);
        }
      if (++checked >= 60) break;
    }
    if (checked >= 60) break;
  }
  CHECK(checked > 0);
}

TEST_CASE("improve_eccentricity_wb steps") {
  Graph p5 = gen::path(5);
  Profile unit = Profile::unit_all(p5);
  CHECK(improve_eccentricity_wb(p5, unit, 0) == 1);
  CHECK(improve_eccentricity_wb(p5, unit, 2) == 2);

  // Non-fixed points move within B_2 and strictly improve.
  SplitMix64 rng(67);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::WeaklyBridged, 50, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex u = improve_eccentricity_wb(g, pi, v);
      if (u == v) continue;
      DistanceRow row = bfs_distances(g, v);
      CHECK(row[u] <= 2);
      CHECK(radius_at(g, pi, u).value < radius_at(g, pi, v).value);
    }
  }
}

TEST_CASE("weakly bridged descent reaches the exact center") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = trial % 2 == 0
                  ? gen::block_tree(gen::BlockPalette::WeaklyBridged, 80, rng.next())
                  : gen::block_tree(gen::BlockPalette::Bridged, 80, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    auto [t, trace] = sample_select_descent(g, pi, wb_improve_step(), rng.next());
    CenterResult truth = center_bruteforce_small(g, pi);
    CHECK(radius_at(g, pi, t).value == truth.radius);
    CHECK(trace.terminal == t);
  }

  // Deterministic 0-1 driver on the same corpus.
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::WeaklyBridged, 70, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), false);
    auto [t, trace] = deterministic_descent_01(g, pi, wb_improve_step());
    CHECK(radius_at(g, pi, t).value == center_bruteforce_small(g, pi).radius);
  }
}
