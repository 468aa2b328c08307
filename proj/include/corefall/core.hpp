#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "corefall/graph.hpp"

namespace corefall {

struct core_decomposition {
  std::vector<int> coreness;  // indexed by vertex id; 0 for tombstoned ids
  std::vector<char> live;     // snapshot of the graph's live mask
  int degeneracy = 0;         // max coreness over live vertices

  std::vector<int> members_of_core(int k) const {
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(coreness.size()); ++v)
      if (live[v] && coreness[v] >= k) out.push_back(v);
    return out;
  }

  // histogram[c] = number of live vertices with coreness exactly c
  std::vector<std::int64_t> size_histogram() const {
    std::vector<std::int64_t> h(degeneracy + 1, 0);
    for (int v = 0; v < static_cast<int>(coreness.size()); ++v)
      if (live[v]) ++h[coreness[v]];
    return h;
  }
};

// Bucket peel in O(n + m): vertices sorted into degree bins, repeatedly pop
// the minimum-degree vertex, demote its neighbors one bin. The degree at pop
// time is the coreness.
inline core_decomposition core_decompose(const graph& g) {
  int n = g.vertex_count();
  core_decomposition out;
  out.coreness.assign(n, 0);
  out.live.assign(n, 0);

  std::vector<int> deg(n, 0);
  int maxdeg = 0, nlive = 0;
  for (int v = 0; v < n; ++v) {
    if (!g.is_live(v)) continue;
    out.live[v] = 1;
    ++nlive;
    deg[v] = g.degree(v);
    maxdeg = std::max(maxdeg, deg[v]);
  }
  if (nlive == 0) return out;

  // counting sort of live vertices by degree
  std::vector<int> bin(maxdeg + 2, 0);
  for (int v = 0; v < n; ++v)
    if (out.live[v]) ++bin[deg[v]];
  int start = 0;
  for (int d = 0; d <= maxdeg; ++d) {
    int cnt = bin[d];
    bin[d] = start;
    start += cnt;
  }
  std::vector<int> vert(nlive), pos(n, -1);
  {
    std::vector<int> fill = bin;
    for (int v = 0; v < n; ++v) {
      if (!out.live[v]) continue;
      pos[v] = fill[deg[v]]++;
      vert[pos[v]] = v;
    }
  }

  for (int i = 0; i < nlive; ++i) {
    int v = vert[i];
    out.coreness[v] = deg[v];
    for (int u : g.neighbors(v)) {
      if (deg[u] <= deg[v]) continue;  // already popped or same bin
      // swap u with the first vertex of its bin, then shrink the bin
      int du = deg[u], pu = pos[u];
      int pw = bin[du], w = vert[pw];
      if (u != w) {
        std::swap(vert[pu], vert[pw]);
        pos[u] = pw;
        pos[w] = pu;
      }
      ++bin[du];
      --deg[u];
    }
  }
  for (int v = 0; v < n; ++v)
    if (out.live[v]) out.degeneracy = std::max(out.degeneracy, out.coreness[v]);
  return out;
}

}  // namespace corefall
