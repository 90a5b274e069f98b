#include <catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "graphcenter/gen.hpp"
#include "graphcenter/improve_biphelly.hpp"
#include "graphcenter/oracle.hpp"

using namespace gc;

TEST_CASE("minimize_ball1_bh on paths and grids") {
  Graph p5 = gen::path(5);
  Profile unit = Profile::unit_all(p5);
  CHECK(minimize_ball1_bh(p5, unit, 0) == 1);
  CHECK(minimize_ball1_bh(p5, unit, 2) == 2);
  CHECK(minimize_ball1_bh(p5, Profile::unit({3}), 3) == 3);

  Graph grid = gen::square_grid(3, 3);
  Profile ug = Profile::unit_all(grid);
  CHECK(minimize_ball1_bh(grid, ug, 0) != 0);   // a corner is never central
  CHECK(minimize_ball1_bh(grid, ug, 4) == 4);   // the middle is
}

TEST_CASE("minimize_ball1_bh finds the exact unit-ball minimum") {
  SplitMix64 rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 50, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex u = minimize_ball1_bh(g, pi, v);
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

TEST_CASE("k-ball radii for 0-1 profiles") {
  Graph p5 = gen::path(5);
  Profile ends = Profile::unit({0, 4});
  std::vector<int> val = k_ball_radius_01(p5, ends, 2);
  CHECK(val == std::vector<int>{-1, -1, 2, -1, -1});

  CHECK_THROWS_AS(k_ball_radius_01(p5, ends, 0), input_error);
  Profile weighted = Profile::from_integers({{0, 2}, {4, 1}});
  CHECK_THROWS_AS(k_ball_radius_01(p5, weighted, 2), input_error);
  CHECK_THROWS_AS(k_ball_radius_01(gen::cycle(5), Profile::unit({0}), 2), input_error);
}

TEST_CASE("k-ball radii match the brute oracle") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g;
    switch (trial % 3) {
      case 0: g = gen::square_grid(4, 5); break;
      case 1: g = gen::b_hat_n(4); break;
      default: g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 50, rng.next());
    }
    Profile pi = gen::random_profile(g, rng.next(), false);
    std::vector<Vertex> supp = pi.support();
    std::vector<DistanceRow> rows;
    for (Vertex s : supp) rows.push_back(bfs_distances(g, s));
    for (int k = 1; k <= 4; ++k) {
      std::vector<int> val = k_ball_radius_01(g, pi, k);
      for (Vertex v = 0; v < g.n(); ++v) {
        int ecc = 0;
        for (const auto& row : rows) ecc = std::max(ecc, row[v]);
        CHECK(val[static_cast<size_t>(v)] == (ecc <= k ? ecc : -1));
      }
    }
  }
}

TEST_CASE("interval second meet matches the brute intersection") {
  SplitMix64 rng(103);
  int nonempty = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 45, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (int probes = 0; probes < 6; ++probes) {
      Vertex v = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(g.n())));
      RadiusEvaluation ev = radius_at(g, pi, v);
      if (ev.value == Scaled{}) continue;
      std::vector<Vertex> s = interval_second_meet(g, v, ev.furthest);

      DistanceRow dv = bfs_distances(g, v);
      std::vector<Vertex> truth;
      for (Vertex u = 0; u < g.n(); ++u) {
        if (dv[u] != 2) continue;
        DistanceRow du = bfs_distances(g, u);
        bool in_all = true;
        for (Vertex x : ev.furthest)
          if (dv[u] + du[x] != dv[x]) {
            in_all = false;
            break;
          }
        if (in_all) truth.push_back(u);
      }
      std::sort(s.begin(), s.end());
      CHECK(s == truth);
      if (!truth.empty()) ++nonempty;
    }
  }
  CHECK(nonempty > 0);

  CHECK_THROWS_AS(interval_second_meet(gen::path(4), 0, {}), input_error);
}

TEST_CASE("improve_eccentricity_bh steps") {
  Graph p5 = gen::path(5);
  Profile unit = Profile::unit_all(p5);
  CHECK(improve_eccentricity_bh(p5, unit, 0) == 1);
  CHECK(improve_eccentricity_bh(p5, unit, 2) == 2);

  SplitMix64 rng(107);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 45, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (Vertex v = 0; v < g.n(); ++v) {
      Vertex u = improve_eccentricity_bh(g, pi, v);
      if (u == v) continue;
      DistanceRow row = bfs_distances(g, v);
      CHECK(row[u] <= 2);
      CHECK(radius_at(g, pi, u).value < radius_at(g, pi, v).value);
    }
  }
}

TEST_CASE("bipartite Helly descent reaches the exact center") {
  SplitMix64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 80, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    auto [t, trace] = sample_select_descent(g, pi, bh_improve_step(), rng.next());
    CHECK(radius_at(g, pi, t).value == center_bruteforce_small(g, pi).radius);
  }

  for (int trial = 0; trial < 5; ++trial) {
    Graph g = gen::block_tree(gen::BlockPalette::BipartiteHelly, 70, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), false);
    auto [t, trace] = deterministic_descent_01(g, pi, bh_improve_step());
    CHECK(radius_at(g, pi, t).value == center_bruteforce_small(g, pi).radius);
  }
}
