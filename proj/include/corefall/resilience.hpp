#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "corefall/core.hpp"
#include "corefall/graph.hpp"
#include "corefall/heuristics.hpp"
#include "corefall/objective.hpp"
#include "corefall/parallel.hpp"
#include "corefall/rng.hpp"
#include "corefall/stats.hpp"

namespace corefall {

struct resilience_curve {
  std::vector<double> alphas;  // uniform grid, 0 to 1 inclusive
  std::vector<double> values;  // measurement at each grid point
  double auc = 0.0;            // trapezoidal area under the curve
  double score = 0.0;          // 1 - auc
};

namespace detail {

// component sizes of the live subgraph minus an extra removal mask
inline std::vector<std::int64_t> component_sizes(const graph& g,
                                                 const std::vector<char>& gone) {
  int n = g.vertex_count();
  std::vector<std::int64_t> sizes;
  std::vector<char> seen(n, 0);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (!g.is_live(s) || gone[s] || seen[s]) continue;
    std::int64_t sz = 0;
    queue.assign(1, s);
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++sz;
      for (int u : g.neighbors(v)) {
        if (gone[u] || seen[u]) continue;
        seen[u] = 1;
        queue.push_back(u);
      }
    }
    sizes.push_back(sz);
  }
  return sizes;
}

// Normalized component-size entropy. The sign convention makes the value
// live in [0,1]: 0 for one component, 1 for total fragmentation. raw_sign
// emits the unnegated (nonpositive) sum instead. Sizes are sorted before
// summing so any two graphs with equal component-size multisets get the
// bit-identical value regardless of vertex numbering.
inline double entropy_of_sizes(std::vector<std::int64_t> sizes,
                               bool raw_sign) {
  std::int64_t n = 0;
  for (std::int64_t s : sizes) n += s;
  if (n <= 1) return 0.0;
  bool all_singletons = true;
  for (std::int64_t s : sizes)
    if (s != 1) all_singletons = false;
  if (all_singletons) return raw_sign ? -1.0 : 1.0;  // uniform case, exact
  std::sort(sizes.begin(), sizes.end());
  double h = 0.0;
  for (std::int64_t s : sizes) {
    double p = static_cast<double>(s) / n;
    h += p * std::log(p);
  }
  double norm = h / std::log(static_cast<double>(n));  // nonpositive
  return raw_sign ? norm : -norm;
}

// area under a curve sampled on a uniform grid over [0,1]: endpoint-halved
// weights so constant curves integrate exactly
inline double trapezoid_auc(const std::vector<double>& values) {
  std::size_t g = values.size();
  double s = 0.5 * (values.front() + values.back());
  for (std::size_t i = 1; i + 1 < g; ++i) s += values[i];
  return s / (g - 1);
}

}  // namespace detail

// Fragmentation entropy of the live subgraph; see entropy_of_sizes for the
// convention. Graphs with at most one live vertex score 0.
inline double fragmentation_entropy(const graph& g, bool raw_sign = false) {
  std::vector<char> gone(g.vertex_count(), 0);
  return detail::entropy_of_sizes(detail::component_sizes(g, gone), raw_sign);
}

// Fragmentation response to uniform random deletion: for each grid fraction
// alpha, delete floor(alpha*n) uniformly chosen vertices and measure the
// fragmentation entropy, averaged over independent trials. The full-deletion
// endpoint is pinned to total fragmentation. score = 1 - auc, so a graph
// that shatters immediately scores near 0 and a robust one near 1.
inline resilience_curve resilience_rand(const graph& g, int trials,
                                        int grid_points, std::uint64_t seed,
                                        bool raw_sign = false,
                                        int threads = 1) {
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  int n = g.vertex_count();
  std::vector<int> live = g.live_vertices();
  std::int64_t nlive = static_cast<std::int64_t>(live.size());

  resilience_curve out;
  out.alphas.resize(grid_points);
  out.values.assign(grid_points, 0.0);
  for (int i = 0; i < grid_points; ++i)
    out.alphas[i] = static_cast<double>(i) / (grid_points - 1);

  // value matrix trial x grid, filled independently, reduced afterwards
  std::vector<std::vector<double>> h(trials,
                                     std::vector<double>(grid_points, 0.0));
  parallel_for(trials, threads, [&](std::size_t t) {
    std::vector<char> gone(n, 0);
    for (int i = 0; i < grid_points; ++i) {
      std::int64_t k = nlive * i / (grid_points - 1);
      if (k >= nlive) {
        h[t][i] = raw_sign ? -1.0 : 1.0;  // everything deleted
        continue;
      }
      rng64 rng(derive_seed(derive_seed(seed, t), i));
      std::vector<int> gone_list =
          sample_without_replacement(live, static_cast<std::size_t>(k), rng);
      std::fill(gone.begin(), gone.end(), 0);
      for (int v : gone_list) gone[v] = 1;
      h[t][i] =
          detail::entropy_of_sizes(detail::component_sizes(g, gone), raw_sign);
    }
  });
  std::vector<double> column(trials);
  for (int i = 0; i < grid_points; ++i) {
    for (int t = 0; t < trials; ++t) column[t] = h[t][i];
    out.values[i] = pairwise_sum(column) / trials;
  }
  out.auc = detail::trapezoid_auc(out.values);
  out.score = 1.0 - out.auc;
  return out;
}

enum class curve_method { adaptive, strength, random };

// Disruption response to targeted deletion: one deletion sequence over all
// live vertices is computed once, and grid point alpha reads the objective
// of its prefix of floor(alpha*n) deletions. score = 1 - auc; high scores
// mean the core structure resists even targeted removal.
inline resilience_curve resilience_core(const graph& g, int grid_points,
                                        curve_method method = curve_method::adaptive,
                                        std::uint64_t seed = 0,
                                        int threads = 1) {
  if (grid_points < 2) throw std::invalid_argument("grid needs >= 2 points");
  core_decomposition base = core_decompose(g);
  std::vector<int> live = g.live_vertices();
  std::int64_t nlive = static_cast<std::int64_t>(live.size());
  int n0 = static_cast<int>(nlive);

  resilience_curve out;
  out.alphas.resize(grid_points);
  out.values.assign(grid_points, 0.0);
  for (int i = 0; i < grid_points; ++i)
    out.alphas[i] = static_cast<double>(i) / (grid_points - 1);
  if (nlive == 0) {
    out.auc = detail::trapezoid_auc(out.values);
    out.score = 1.0 - out.auc;
    return out;
  }

  attack_options opts;
  opts.threads = threads;
  if (method == curve_method::adaptive) {
    // the greedy engine reports the objective after every step, so the
    // whole curve falls out of one run
    attack_result run =
        select_adaptive(g, base, live, static_cast<std::size_t>(nlive), opts);
    for (int i = 0; i < grid_points; ++i) {
      std::int64_t k = nlive * i / (grid_points - 1);
      out.values[i] =
          k == 0 ? 0.0
                 : static_cast<double>(run.steps[k - 1].f_after) / n0;
    }
  } else {
    std::vector<int> order;
    if (method == curve_method::strength) {
      order = detail::strength_order(g, base, live, threads);
    } else {
      order = live;
      rng64 rng(seed);
      shuffle(order, rng);
    }
    for (int i = 0; i < grid_points; ++i) {
      std::int64_t k = nlive * i / (grid_points - 1);
      if (k == 0) {
        out.values[i] = 0.0;
        continue;
      }
      std::vector<int> prefix(order.begin(), order.begin() + k);
      out.values[i] = evaluate_attack(g, base, prefix).disruption;
    }
  }
  out.auc = detail::trapezoid_auc(out.values);
  out.score = 1.0 - out.auc;
  return out;
}

}  // namespace corefall
