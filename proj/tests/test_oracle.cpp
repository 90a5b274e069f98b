#include <catch_amalgamated.hpp>

#include "graphcenter/gen.hpp"
#include "graphcenter/oracle.hpp"

using namespace gc;

TEST_CASE("all_pairs") {
  Graph p3 = gen::path(3);
  oracle::DistanceMatrix dm = oracle::all_pairs(p3);
  CHECK(dm.at(0, 2) == 2);
  CHECK(dm.at(1, 0) == 1);
  CHECK(dm.at(1, 1) == 0);

  Graph q3 = gen::hypercube(3);
  oracle::DistanceMatrix dq = oracle::all_pairs(q3);
  for (Vertex u = 0; u < 8; ++u)
    for (Vertex v = 0; v < 8; ++v)
      CHECK(dq.at(u, v) == std::popcount(static_cast<unsigned>(u ^ v)));

  CHECK_THROWS_AS(oracle::all_pairs(q3, 4), size_limit_error);
}

TEST_CASE("p-weak peaklessness") {
  Graph p5 = gen::path(5);
  CHECK(oracle::is_p_weakly_peakless(p5, Profile::unit_all(p5), 1).holds);

  // Hypercube with the diametral-pair-zero profile is not p-weakly peakless
  // for p < dimension.
  Graph q4 = gen::hypercube(4);
  Profile pi4 = gen::hypercube_diametral_profile(q4);
  for (int p = 1; p <= 3; ++p) {
    auto rep = oracle::is_p_weakly_peakless(q4, pi4, p);
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.counterexample.has_value());
    // The counterexample must be re-checkable: no interior vertex works.
    Vertex u = rep.counterexample->u, v = rep.counterexample->v;
    DistanceRow du = bfs_distances(q4, u), dv = bfs_distances(q4, v);
    Scaled ru = radius_at(q4, pi4, u).value, rv = radius_at(q4, pi4, v).value;
    Scaled hi = std::max(ru, rv);
    bool found = false;
    for (Vertex w = 0; w < q4.n() && !found; ++w) {
      if (w == u || w == v || du[w] + dv[w] != du[v]) continue;
      Scaled rw = radius_at(q4, pi4, w).value;
      if (rw < hi || (ru == rv && rw == hi)) found = true;
    }
    CHECK_FALSE(found);
  }

  gen::GridPlusPath inst = gen::grid_plus_path(4);
  CHECK(oracle::is_p_weakly_peakless(inst.graph, inst.profile, 2).holds);
}

TEST_CASE("Gp-unimodality brute force") {
  SplitMix64 rng(3);
  for (int t = 0; t < 5; ++t) {
    Graph tree = gen::random_tree(30, rng.next());
    Profile pi = gen::random_profile(tree, rng.next(), true);
    CHECK(oracle::is_Gp_unimodal_for_profile(tree, pi, 1).holds);
  }
  Graph c6 = gen::cycle(6);
  CHECK(oracle::is_Gp_unimodal_for_profile(c6, Profile::unit_all(c6), 1).holds);
  Graph q4 = gen::hypercube(4);
  Profile pi4 = gen::hypercube_diametral_profile(q4);
  auto rep = oracle::is_Gp_unimodal_for_profile(q4, pi4, 2);
  if (!rep.holds) {
    // The reported vertex must really be a non-global local minimum in G^2.
    Vertex v = rep.counterexample;
    Scaled rv = radius_at(q4, pi4, v).value;
    DistanceRow row = bfs_distances(q4, v);
    for (Vertex w = 0; w < q4.n(); ++w)
      if (row[w] <= 2) CHECK(radius_at(q4, pi4, w).value >= rv);
  }
}

TEST_CASE("exact hyperbolicity") {
  CHECK(oracle::hyperbolicity_twice_exact(gen::random_tree(20, 1)) == 0);
  CHECK(oracle::hyperbolicity_twice_exact(gen::cycle(4)) == 2);
  CHECK(oracle::hyperbolicity_twice_exact(gen::cycle(5)) == 1);
  CHECK(oracle::hyperbolicity_exact(gen::cycle(5)) == 0.5);
}

TEST_CASE("ball convexity") {
  CHECK(oracle::ball_convexity_check(gen::cycle(5)).holds);
  auto c4 = oracle::ball_convexity_check(gen::cycle(4));
  CHECK_FALSE(c4.holds);
  CHECK_FALSE(oracle::ball_convexity_check(gen::cycle(6)).holds);
  CHECK(oracle::ball_convexity_check(gen::triangular_lozenge(3, 3)).holds);
}

TEST_CASE("helly balls") {
  Graph c4 = gen::cycle(4);
  CHECK_FALSE(oracle::helly_balls_check(
      c4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
  CHECK(oracle::helly_balls_check(c4, {{0, 2}, {1, 2}, {2, 2}, {3, 2}}));
  Graph tree = gen::random_tree(25, 9);
  SplitMix64 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::pair<Vertex, int>> family;
    for (int i = 0; i < 4; ++i)
      family.emplace_back(static_cast<Vertex>(rng.next_below(25)),
                          static_cast<int>(rng.next_below(6)));
    CHECK(oracle::helly_balls_check(tree, family));
  }
}

TEST_CASE("coarse Helly unimodality and diameter-radius bounds") {
  Graph tree = gen::random_tree(40, 2);
  CHECK(oracle::verify_coarse_helly_unimodality(tree, Profile::unit_all(tree), 0));
  Graph grid = gen::square_grid(4, 4);
  SplitMix64 rng(23);
  for (int t = 0; t < 10; ++t) {
    Profile pi = gen::random_profile(grid, rng.next(), false);
    CHECK(oracle::verify_coarse_helly_unimodality(grid, pi, 1));
  }
  Graph c4 = gen::cycle(4);
  CHECK(oracle::verify_coarse_helly_unimodality(c4, Profile::unit_all(c4), 1));

  std::vector<Vertex> all;
  for (Vertex v = 0; v < tree.n(); ++v) all.push_back(v);
  CHECK(oracle::verify_diam_rad_inequality(tree, all, 0));
  Graph king = gen::king_grid(3, 3);
  std::vector<Vertex> allk;
  for (Vertex v = 0; v < king.n(); ++v) allk.push_back(v);
  CHECK(oracle::verify_diam_rad_inequality(king, allk, 0));
  CHECK(oracle::verify_diam_rad_inequality(grid, {0, 3, 12, 15}, 1));
}

TEST_CASE("peakless implies Gp-unimodal on random weighted instances") {
  SplitMix64 rng(77);
  for (int t = 0; t < 10; ++t) {
    Graph g = gen::random_connected(25, 15, rng.next());
    Profile pi = gen::random_profile(g, rng.next(), true);
    for (int p = 1; p <= 3; ++p)
      if (oracle::is_p_weakly_peakless(g, pi, p).holds)
        CHECK(oracle::is_Gp_unimodal_for_profile(g, pi, p).holds);
  }
}
