#include <catch_amalgamated.hpp>

#include "graphcenter/gen.hpp"
#include "graphcenter/recognize.hpp"

using namespace gc;

TEST_CASE("weak modularity") {
  CHECK(recognize::is_weakly_modular(gen::complete(3)).verdict);
  auto c5 = recognize::is_weakly_modular(gen::cycle(5));
  CHECK_FALSE(c5.verdict);
  CHECK(c5.condition == "TC");
  CHECK(recognize::is_weakly_modular(gen::cycle(4)).verdict);
}

TEST_CASE("median recognition") {
  CHECK(recognize::is_median(gen::random_tree(20, 4)).verdict);
  CHECK_FALSE(recognize::is_median(gen::complete_bipartite(2, 3)).verdict);
  CHECK_FALSE(recognize::is_median(gen::cycle(6)).verdict);
  CHECK(recognize::is_median(gen::square_grid(3, 4)).verdict);
  CHECK(recognize::is_median(gen::hypercube(3)).verdict);
}

TEST_CASE("cube-free median recognition") {
  CHECK(recognize::is_cube_free_median(gen::square_grid(4, 4)).verdict);
  auto q3 = recognize::is_cube_free_median(gen::hypercube(3));
  CHECK_FALSE(q3.verdict);
  CHECK(q3.condition == "no-3-cube");
  CHECK(recognize::is_cube_free_median(gen::simplex_graph_triangle_free(gen::cycle(5)))
            .verdict);
  gen::GridPlusPath inst = gen::grid_plus_path(2);
  CHECK(recognize::is_cube_free_median(inst.graph).verdict);
}

TEST_CASE("bridged and weakly bridged recognition") {
  CHECK(recognize::is_bridged(gen::triangular_lozenge(3, 3)).verdict);
  CHECK_FALSE(recognize::is_bridged(gen::cycle(5)).verdict);
  CHECK_FALSE(recognize::is_weakly_bridged(gen::cycle(5)).verdict);
  auto w5 = recognize::is_weakly_bridged(gen::wheel5(1));
  CHECK(w5.verdict);
  auto w5b = recognize::is_bridged(gen::wheel5(1));
  CHECK_FALSE(w5b.verdict);
  CHECK(w5b.condition == "no-induced-C5");
}

TEST_CASE("convex-balls recognition") {
  CHECK(recognize::is_cb_graph(gen::cycle(5)).verdict);
  auto c4 = recognize::is_cb_graph(gen::cycle(4));
  CHECK_FALSE(c4.verdict);
  CHECK(c4.condition == "INC");
  CHECK(recognize::is_cb_graph(gen::triangular_lozenge(2, 3)).verdict);
  CHECK(recognize::is_cb_graph(gen::wheel5(1)).verdict);
  // Cross-validation with the brute-force convexity oracle.
  SplitMix64 rng(9);
  for (int t = 0; t < 8; ++t) {
    Graph g = gen::random_connected(12, 8, rng.next());
    CHECK(recognize::is_cb_graph(g).verdict ==
          oracle::ball_convexity_check(g).holds);
  }
}

TEST_CASE("bipartite Helly recognition") {
  CHECK(recognize::is_bipartite_helly(gen::b_hat_n(4)).verdict);
  CHECK_FALSE(recognize::is_bipartite_helly(gen::b_n(4)).verdict);
  CHECK(recognize::is_bipartite_helly(gen::square_grid(4, 4)).verdict);
  CHECK_FALSE(recognize::is_bipartite_helly(gen::complete(3)).verdict);
  CHECK_FALSE(recognize::is_bipartite_helly(gen::cycle(6)).verdict);
  CHECK(recognize::is_bipartite_helly(gen::complete_bipartite(3, 4)).verdict);

  // Half-ball Helly probe agrees on positives and finds the B_n violation.
  CHECK(recognize::half_ball_helly_probe(gen::square_grid(3, 3), 5));
  CHECK(recognize::half_ball_helly_probe(gen::b_hat_n(4), 6));
}

TEST_CASE("Gp-unimodal radius recognition") {
  CHECK(recognize::recognize_Gp_unimodal_radius(gen::random_tree(25, 8), 1).verdict);
  auto c4p1 = recognize::recognize_Gp_unimodal_radius(gen::cycle(4), 1);
  CHECK_FALSE(c4p1.verdict);
  CHECK(recognize::recognize_Gp_unimodal_radius(gen::cycle(4), 2).verdict);
  gen::GridPlusPath inst = gen::grid_plus_path(2);
  CHECK(recognize::recognize_Gp_unimodal_radius(inst.graph, 2).verdict);

  // The violating profile reproduces the local-minimum configuration; the
  // construction itself verifies r(u)=1, r(v)<1 and local minimality.
  Profile pi = recognize::build_violating_profile(gen::cycle(4), c4p1.u, c4p1.v, 1);
  Graph c4 = gen::cycle(4);
  CHECK(radius_at(c4, pi, c4p1.u).value == Scaled::of(Weight::integer(1), 1));
  CHECK(radius_at(c4, pi, c4p1.v).value < Scaled::of(Weight::integer(1), 1));

  auto c6p1 = recognize::recognize_Gp_unimodal_radius(gen::cycle(6), 1);
  CHECK_FALSE(c6p1.verdict);
  CHECK_NOTHROW(recognize::build_violating_profile(gen::cycle(6), c6p1.u, c6p1.v, 1));

  Graph tree = gen::random_tree(10, 3);
  CHECK_THROWS_AS(recognize::build_violating_profile(tree, 0, tree.n() - 1, 1),
                  input_error);
}

TEST_CASE("monotonicity of Gp-unimodal recognition in p") {
  SplitMix64 rng(13);
  for (int t = 0; t < 6; ++t) {
    Graph g = gen::random_connected(14, 8, rng.next());
    bool prev = false;
    for (int p = 1; p <= 4; ++p) {
      bool now = recognize::recognize_Gp_unimodal_radius(g, p).verdict;
      if (prev) CHECK(now);
      prev = now;
    }
  }
}
