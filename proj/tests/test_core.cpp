#include <catch2/catch_amalgamated.hpp>

#include "corefall/core.hpp"
#include "support.hpp"

using corefall::core_decompose;
using corefall::graph;

TEST_CASE("coreness of standard shapes") {
  auto all_equal = [](const graph& g, int want) {
    auto d = core_decompose(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (g.is_live(v) && d.coreness[v] != want) return false;
    return true;
  };
  REQUIRE(all_equal(support::make_clique(4), 3));
  REQUIRE(all_equal(support::make_cycle(5), 2));
  REQUIRE(all_equal(support::make_path(4), 1));
  REQUIRE(all_equal(support::make_star(6), 1));
  REQUIRE(all_equal(support::make_edgeless(3), 0));
  REQUIRE(core_decompose(support::make_clique(4)).degeneracy == 3);
  REQUIRE(core_decompose(support::make_edgeless(3)).degeneracy == 0);
}

TEST_CASE("mixed components keep separate core levels") {
  graph g = support::disjoint_union(support::make_clique(4),
                                    support::make_cycle(5));
  g = support::disjoint_union(g, support::make_edgeless(2));
  auto d = core_decompose(g);
  REQUIRE(d.degeneracy == 3);
  for (int v = 0; v < 4; ++v) REQUIRE(d.coreness[v] == 3);
  for (int v = 4; v < 9; ++v) REQUIRE(d.coreness[v] == 2);
  for (int v = 9; v < 11; ++v) REQUIRE(d.coreness[v] == 0);

  auto hist = d.size_histogram();
  REQUIRE(hist == std::vector<std::int64_t>{2, 0, 5, 4});

  REQUIRE(d.members_of_core(3) == std::vector<int>{0, 1, 2, 3});
  REQUIRE(d.members_of_core(2).size() == 9);
  REQUIRE(d.members_of_core(0).size() == 11);
}

TEST_CASE("bucket peel matches the fixed-point oracle on random graphs") {
  corefall::rng64 rng(20260823);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng.below(29));
    double p = 0.05 + 0.9 * rng.unit();
    graph g = support::random_graph(n, p, rng);
    auto d = core_decompose(g);
    auto want = support::naive_coreness(g);
    INFO("trial " << trial << " n=" << n << " p=" << p);
    REQUIRE(d.coreness == want);
  }
}

TEST_CASE("peel respects tombstones") {
  corefall::rng64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    graph g = support::random_graph(15, 0.3, rng);
    auto gone = support::random_subset(15, 4, rng);
    graph h = g.without(gone);
    auto d = core_decompose(h);
    auto want = support::naive_coreness(h);
    REQUIRE(d.coreness == want);
    for (int v : gone) {
      REQUIRE(d.coreness[v] == 0);
      REQUIRE_FALSE(d.live[v]);
    }
  }
}

TEST_CASE("decomposition snapshot matches the graph live mask") {
  graph g = support::make_clique(5).without({2});
  auto d = core_decompose(g);
  for (int v = 0; v < 5; ++v) REQUIRE(static_cast<bool>(d.live[v]) == g.is_live(v));
  REQUIRE(d.degeneracy == 3);  // K4 remains
}
