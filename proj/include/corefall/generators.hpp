#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "corefall/graph.hpp"
#include "corefall/rng.hpp"

namespace corefall {

// Uniform simple graph with exactly M = round(n*avg_degree/2) edges. Fixing
// the edge count (rather than an inclusion probability) pins the average
// degree exactly, which keeps threshold-style tests variance-free.
inline graph erdos_renyi(int n, double avg_degree, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 vertices");
  if (avg_degree < 0) throw std::invalid_argument("average degree must be >= 0");
  std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::int64_t M = std::llround(static_cast<double>(n) * avg_degree / 2.0);
  if (M > total)
    throw std::invalid_argument("edge target exceeds the complete graph");
  rng64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(M);
  if (M <= total / 2) {
    // sparse: rejection-sample distinct pairs
    std::unordered_map<std::int64_t, char> seen;
    while (static_cast<std::int64_t>(edges.size()) < M) {
      int u = static_cast<int>(rng.below(n));
      int v = static_cast<int>(rng.below(n));
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      std::int64_t key = static_cast<std::int64_t>(u) * n + v;
      if (seen.emplace(key, 1).second) edges.emplace_back(u, v);
    }
  } else {
    // dense: enumerate every pair and keep a random M-subset
    std::vector<std::pair<int, int>> all;
    all.reserve(total);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (std::int64_t i = 0; i < M; ++i) {
      std::int64_t j = i + static_cast<std::int64_t>(rng.below(all.size() - i));
      std::swap(all[i], all[j]);
    }
    all.resize(M);
    edges = std::move(all);
  }
  return graph::from_edges(n, edges);
}

// Preferential attachment: start from a clique on attach_m+1 vertices; each
// later vertex picks attach_m distinct neighbors with probability
// proportional to current degree (endpoint-list sampling). attach_m=1 grows
// a tree; attach_m=2 gives degeneracy exactly 2, and so on.
inline graph barabasi_albert(int n, int attach_m, std::uint64_t seed) {
  if (attach_m < 1) throw std::invalid_argument("attachment count must be >= 1");
  if (n <= attach_m + 1)
    throw std::invalid_argument("need more vertices than the seed clique");
  rng64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> endpoints;  // every edge contributes both ends
  int m0 = attach_m + 1;
  for (int u = 0; u < m0; ++u)
    for (int v = u + 1; v < m0; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  std::vector<int> targets;
  for (int v = m0; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < attach_m) {
      int t = endpoints[rng.below(endpoints.size())];
      bool dup = false;
      for (int x : targets)
        if (x == t) dup = true;
      if (!dup) targets.push_back(t);
    }
    for (int t : targets) {
      edges.emplace_back(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return graph::from_edges(n, edges);
}

}  // namespace corefall
