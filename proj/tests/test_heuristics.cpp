#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "corefall/heuristics.hpp"
#include "support.hpp"

using namespace corefall;

TEST_CASE("node strength on small shapes") {
  graph p3 = support::make_path(3);
  auto base = core_decompose(p3);
  REQUIRE(node_strength(p3, base, 1) == 2);
  REQUIRE(node_strength(p3, base, 0) == 0);

  graph star = support::make_star(3);
  auto sb = core_decompose(star);
  REQUIRE(node_strength(star, sb, 0) == 3);
  REQUIRE(node_strength(star, sb, 2) == 0);

  graph c5 = support::make_cycle(5);
  auto cb = core_decompose(c5);
  for (int v = 0; v < 5; ++v) REQUIRE(node_strength(c5, cb, v) == 4);
}

TEST_CASE("bulk strengths equal the single-vertex routine") {
  corefall::rng64 rng(11);
  graph g = support::random_graph(18, 0.25, rng);
  auto base = core_decompose(g);
  auto cand = g.live_vertices();
  auto bulk = node_strengths(g, base, cand, 1);
  auto bulk3 = node_strengths(g, base, cand, 3);
  REQUIRE(bulk == bulk3);  // scoring threads cannot change values
  for (std::size_t i = 0; i < cand.size(); ++i)
    REQUIRE(bulk[i] == node_strength(g, base, cand[i]));
}

TEST_CASE("random selection is seeded sampling without replacement") {
  graph g = support::make_cycle(12);
  auto base = core_decompose(g);
  auto cand = g.live_vertices();
  auto a = select_random(g, base, cand, 5, 42);
  auto b = select_random(g, base, cand, 5, 42);
  REQUIRE(a.deleted == b.deleted);
  REQUIRE(a.deleted.size() == 5);
  REQUIRE(std::is_sorted(a.deleted.begin(), a.deleted.end()));
  auto c = select_random(g, base, cand, 5, 43);
  bool differs = a.deleted != c.deleted;
  auto d = select_random(g, base, cand, 5, 44);
  differs = differs || a.deleted != d.deleted;
  REQUIRE(differs);
  // budget above the pool size empties the pool
  REQUIRE(select_random(g, base, cand, 99, 1).deleted.size() == 12);
}

TEST_CASE("high-degree selection orders by degree then id") {
  // degrees: 0 -> 4 (star hub), 5..8 in a path have degree <= 2
  graph g = support::disjoint_union(support::make_star(4),
                                    support::make_path(4));
  auto base = core_decompose(g);
  auto r = select_high_degree(g, base, g.live_vertices(), 3, {});
  // hub 0 (deg 4), then path interiors 6, 7 (deg 2) beat leaves (deg 1)
  REQUIRE(r.deleted == std::vector<int>{0, 6, 7});
}

TEST_CASE("strength selection picks the decrease maximizer") {
  graph p3 = support::make_path(3);
  auto base = core_decompose(p3);
  auto r = select_high_decrease(p3, base, p3.live_vertices(), 1, {});
  REQUIRE(r.deleted == std::vector<int>{1});
  REQUIRE(r.f == 2);
}

TEST_CASE("first adaptive pick equals the one-shot strength pick") {
  corefall::rng64 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng.below(16));
    graph g = support::random_graph(n, 0.1 + 0.6 * rng.unit(), rng);
    auto base = core_decompose(g);
    auto cand = g.live_vertices();
    auto one = select_high_decrease(g, base, cand, 1, {});
    auto ada = select_adaptive(g, base, cand, 1, {});
    INFO("trial " << trial);
    REQUIRE(one.deleted == ada.deleted);
    REQUIRE(one.f == ada.f);
  }
}

TEST_CASE("adaptive selection dismantles twin cliques") {
  graph g = support::disjoint_union(support::make_clique(4),
                                    support::make_clique(4));
  auto base = core_decompose(g);
  auto r = select_adaptive(g, base, g.live_vertices(), 2, {});
  REQUIRE(r.deleted == std::vector<int>{0, 4});  // one hub per clique
  REQUIRE(r.f == 6);
  REQUIRE(r.steps.size() == 2);
  REQUIRE(r.steps[0].f_after == 3);
  REQUIRE(r.steps[1].f_after == 6);
}

TEST_CASE("adaptive pruning never changes the outcome") {
  corefall::rng64 rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5 + static_cast<int>(rng.below(18));
    graph g = support::random_graph(n, 0.1 + 0.5 * rng.unit(), rng);
    auto base = core_decompose(g);
    auto cand = g.live_vertices();
    std::size_t b = 1 + rng.below(4);
    attack_options with, without;
    without.prune = false;
    auto rp = select_adaptive(g, base, cand, b, with);
    auto rn = select_adaptive(g, base, cand, b, without);
    INFO("trial " << trial);
    REQUIRE(rp.deleted == rn.deleted);
    REQUIRE(rp.f == rn.f);
    for (std::size_t i = 0; i < rp.steps.size(); ++i) {
      REQUIRE(rp.steps[i].vertex == rn.steps[i].vertex);
      REQUIRE(rp.steps[i].f_after == rn.steps[i].f_after);
    }
  }
}

TEST_CASE("adaptive scoring threads do not change selections") {
  corefall::rng64 rng(515);
  graph g = support::random_graph(40, 0.15, rng);
  auto base = core_decompose(g);
  attack_options one, four;
  four.threads = 4;
  auto a = select_adaptive(g, base, g.live_vertices(), 6, one);
  auto b = select_adaptive(g, base, g.live_vertices(), 6, four);
  REQUIRE(a.deleted == b.deleted);
  for (std::size_t i = 0; i < a.steps.size(); ++i)
    REQUIRE(a.steps[i].vertex == b.steps[i].vertex);
}

TEST_CASE("zero-strength rounds still spend the budget, lowest id first") {
  graph g = support::make_edgeless(5);
  auto base = core_decompose(g);
  auto r = select_adaptive(g, base, g.live_vertices(), 3, {});
  REQUIRE(r.deleted == std::vector<int>{0, 1, 2});
  REQUIRE(r.f == 0);
  REQUIRE(r.steps.size() == 3);
}

TEST_CASE("candidate restriction is honored") {
  graph star = support::make_star(4);
  auto base = core_decompose(star);
  std::vector<int> leaves{1, 2, 3, 4};
  for (auto r : {select_adaptive(star, base, leaves, 2, {}),
                 select_high_degree(star, base, leaves, 2, {}),
                 select_high_decrease(star, base, leaves, 2, {}),
                 select_random(star, base, leaves, 2, 9)}) {
    REQUIRE(r.deleted.size() == 2);
    REQUIRE(std::find(r.deleted.begin(), r.deleted.end(), 0) ==
            r.deleted.end());
  }
  REQUIRE_THROWS_AS(select_adaptive(star, base, {9}, 1, {}),
                    std::invalid_argument);
}

TEST_CASE("traced steps match independent prefix evaluations") {
  corefall::rng64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    graph g = support::random_graph(14, 0.3, rng);
    auto base = core_decompose(g);
    attack_options opts;
    opts.trace = true;
    auto r = select_high_degree(g, base, g.live_vertices(), 4, opts);
    REQUIRE(r.steps.size() == 4);
    std::vector<int> prefix;
    for (const auto& s : r.steps) {
      prefix.push_back(s.vertex);
      REQUIRE(s.f_after ==
              static_cast<std::int64_t>(support::naive_affected(g, prefix).size()));
    }
    REQUIRE(r.steps.back().f_after == r.f);
  }
}

TEST_CASE("adaptive step objectives telescope to the final objective") {
  corefall::rng64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    graph g = support::random_graph(16, 0.25, rng);
    auto base = core_decompose(g);
    auto r = select_adaptive(g, base, g.live_vertices(), 5, {});
    std::int64_t sum = 0, prev = 0;
    for (const auto& s : r.steps) {
      sum += s.f_after - prev;
      prev = s.f_after;
    }
    REQUIRE(sum == r.f);
    // each step's running objective is a real evaluation of its prefix
    std::vector<int> prefix;
    for (const auto& s : r.steps) {
      prefix.push_back(s.vertex);
      REQUIRE(s.f_after == evaluate_attack(g, base, prefix).f);
    }
  }
}

TEST_CASE("budgets for disruption targets") {
  graph k4 = support::make_clique(4);
  auto base = core_decompose(k4);
  auto plan = budgets_for_targets(k4, base, k4.live_vertices(),
                                  {0.0, 0.5, 0.75, 0.9}, {});
  REQUIRE(plan.size() == 4);
  REQUIRE(plan[0] == std::pair<double, std::int64_t>{0.0, 0});
  REQUIRE(plan[1].second == 1);  // one deletion already disrupts 3/4
  REQUIRE(plan[2].second == 1);
  REQUIRE(plan[3].second == -1);  // 0.9 is out of reach
}
