#include <doctest.h>

#include <random>

#include "dlucky/bounds.hpp"
#include "dlucky/constructions.hpp"
#include "dlucky/solver.hpp"
#include "support.hpp"

using namespace dlucky;

namespace {

std::vector<int> order_ints(const Graph& g) {
  const auto order = search_order(g);
  return {order.begin(), order.end()};
}

}  // namespace

TEST_CASE("search order is breadth-first from vertex 0") {
  const Graph g(5, {{0, 3}, {0, 1}, {3, 4}, {1, 2}});
  CHECK(search_order(g) == std::vector<Vertex>{0, 1, 3, 2, 4});
  CHECK(search_order(empty_graph(3)) == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("exact eta on small named graphs") {
  const auto k3 = exact_eta(complete_graph(3), 5);
  CHECK(k3.eta == 3u);

  const Graph p4 = path_graph(4);
  const auto r4 = exact_eta(p4, 5);
  REQUIRE(r4.eta == 2u);
  CHECK(verify(p4, *r4.witness).is_d_lucky());
  // Frozen from the brute-force enumeration in search order.
  const auto want = oracle::first_labeling(4, support::edge_list(p4), 2, order_ints(p4));
  REQUIRE(want);
  CHECK(*want == std::vector<int>{1, 1, 1, 2});
  CHECK(support::to_ints(r4.witness->labels()) == *want);
  // All-ones fails on the middle edge.
  CHECK(!exists_labeling(p4, 1));

  const Graph c4 = cycle_graph(4);
  const auto rc4 = exact_eta(c4, 5);
  CHECK(rc4.eta == 2u);
  CHECK(oracle::is_d_lucky(4, support::edge_list(c4), {1, 2, 1, 2}));
}

TEST_CASE("exists_labeling") {
  const Graph k2 = complete_graph(2);
  CHECK_FALSE(exists_labeling(k2, 1).has_value());
  CHECK(exists_labeling(k2, 2).has_value());

  const auto f = build_corona({2, 1});
  const auto w = exists_labeling(f.graph, Label(f.claimed_eta));
  REQUIRE(w);
  CHECK(verify(f.graph, *w).is_d_lucky());
  CHECK_FALSE(exists_labeling(f.graph, Label(f.claimed_eta - 1)));
}

TEST_CASE("budget handling") {
  CHECK_THROWS_AS(exact_eta(path_graph(17), 3), BudgetExceeded);
  CHECK_NOTHROW(exact_eta(path_graph(17), 3, {.vertex_cap = 17}));
  CHECK_THROWS_AS(exact_eta(path_graph(3), 0), std::invalid_argument);
  CHECK_THROWS_AS(exists_labeling(path_graph(3), 0), std::invalid_argument);

  const auto capped = exact_eta(complete_graph(4), 3);
  CHECK_FALSE(capped.eta.has_value());
  CHECK_FALSE(capped.witness.has_value());
  CHECK(capped.k_tried == 3);
  CHECK(capped.nodes_explored > 0);
}

TEST_CASE("degenerate graphs") {
  const auto empty = exact_eta(Graph(), 3);
  CHECK(empty.eta == 1u);
  CHECK(empty.witness->empty());
  CHECK(exact_eta(empty_graph(3), 3).eta == 1u);
}

TEST_CASE("solver agrees with brute force on random graphs") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto edges = oracle::random_edges(n, 0.5, rng);
    const Graph g = support::graph(n, edges);
    const auto result = exact_eta(g, 6);
    const auto want = oracle::eta(n, edges, 6);
    REQUIRE(result.eta.has_value() == want.has_value());
    if (!want) continue;
    CHECK(int(*result.eta) == *want);
    const auto lex = oracle::first_labeling(n, edges, *want, order_ints(g));
    CHECK(support::to_ints(result.witness->labels()) == *lex);
  }
}

TEST_CASE("monotonicity and determinism") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = support::random_graph(n, 0.5, rng);
    const Label k = 1 + rng() % 4;
    const auto at_k = exists_labeling(g, k);
    if (at_k) {
      const auto above = exists_labeling(g, k + 1);
      REQUIRE(above);
      // The witness for k also lies in [k + 1].
      CHECK(verify(g, Labeling({at_k->labels().begin(), at_k->labels().end()}, k + 1))
                .is_d_lucky());
    }
    const auto a = exact_eta(g, 6);
    const auto b = exact_eta(g, 6);
    CHECK(a.eta == b.eta);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
  }
}

TEST_CASE("parallel mode returns the sequential witness") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = support::random_graph(n, 0.5, rng);
    const auto seq = exact_eta(g, 6);
    const auto par = exact_eta(g, 6, {.threads = 3});
    const auto par2 = exact_eta(g, 6, {.threads = 3});
    CHECK(seq.eta == par.eta);
    CHECK(seq.witness == par.witness);
    CHECK(par.nodes_explored == par2.nodes_explored);
  }
}

TEST_CASE("exact eta never falls below the clique bound") {
  std::mt19937 rng(2718);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto edges = oracle::random_edges(n, 0.55, rng);
    if (!oracle::connected(n, edges)) continue;
    const Graph g = support::graph(n, edges);
    const auto result = exact_eta(g, 8);
    REQUIRE(result.eta);
    CHECK(lower_bound_thm1(g) <= *result.eta);
  }
}
