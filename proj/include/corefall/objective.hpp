#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "corefall/core.hpp"
#include "corefall/graph.hpp"

namespace corefall {

struct attack_step {
  int vertex;            // deleted at this step
  std::int64_t f_after;  // objective value after the deletion
};

struct attack_result {
  std::vector<int> deleted;       // B, ascending ids
  std::vector<int> affected;      // survivors whose coreness dropped, ascending
  std::int64_t f = 0;             // affected.size()
  double disruption = 0.0;        // f divided by the pre-attack vertex count
  std::vector<attack_step> steps; // selection order, when the method traces
  bool optimal = false;           // set by the exact solvers
};

// normalize a deletion set: sort, dedup, check ids are live
inline std::vector<int> normalize_deletions(const graph& g, std::vector<int> b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  for (int v : b) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("deletion target out of range");
    if (!g.is_live(v))
      throw std::invalid_argument("deletion target is not a live vertex");
  }
  return b;
}

// Survivors of the deletion whose coreness strictly drops, ascending. The
// deleted vertices themselves never count, no matter how central they were.
inline std::vector<int> affected_set(const graph& g,
                                     const core_decomposition& base,
                                     const std::vector<int>& b) {
  std::vector<int> bs = normalize_deletions(g, b);
  core_decomposition after = core_decompose(g.without(bs));
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_live(v) || !after.live[v]) continue;  // tombstoned or in B
    if (after.coreness[v] < base.coreness[v]) out.push_back(v);
  }
  return out;
}

// Full evaluation of a deletion set against the graph it was chosen from.
// F normalizes by the original vertex count, not the survivor count, so
// values are comparable across budgets.
inline attack_result evaluate_attack(const graph& g,
                                     const core_decomposition& base,
                                     const std::vector<int>& b) {
  attack_result r;
  r.deleted = normalize_deletions(g, b);
  r.affected = affected_set(g, base, r.deleted);
  r.f = static_cast<std::int64_t>(r.affected.size());
  int n = g.live_count();
  r.disruption = n > 0 ? static_cast<double>(r.f) / n : 0.0;
  return r;
}

}  // namespace corefall
