#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "corefall/core.hpp"
#include "corefall/graph.hpp"
#include "corefall/objective.hpp"
#include "corefall/parallel.hpp"
#include "corefall/rng.hpp"

namespace corefall {

struct attack_options {
  bool trace = false;  // record per-step objective values for every method
  bool prune = true;   // adaptive method: skip provably zero-strength candidates
  int threads = 1;     // parallel candidate scoring
};

namespace detail {

// immutable CSR copy of the live edges; deletions are expressed through an
// alive mask so repeated peels never touch the graph object
struct residual_csr {
  int n = 0;
  std::vector<std::size_t> off;
  std::vector<int> nbr;

  explicit residual_csr(const graph& g) : n(g.vertex_count()) {
    off.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
      off[v + 1] = off[v] + g.neighbors(v).size();
    nbr.reserve(off[n]);
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) nbr.push_back(u);
  }
};

// Reusable scratch for masked bucket peels. peel() computes the coreness of
// the subgraph induced by (alive minus skip); entries of excluded vertices
// are left 0.
struct peel_scratch {
  std::vector<int> deg, bin, pos, vert, core;

  void peel(const residual_csr& G, const std::vector<char>& alive, int skip) {
    int n = G.n;
    deg.assign(n, 0);
    core.assign(n, 0);
    pos.assign(n, -1);
    int maxdeg = 0, nlive = 0;
    for (int v = 0; v < n; ++v) {
      if (!alive[v] || v == skip) continue;
      ++nlive;
      int d = 0;
      for (std::size_t i = G.off[v]; i < G.off[v + 1]; ++i) {
        int u = G.nbr[i];
        if (alive[u] && u != skip) ++d;
      }
      deg[v] = d;
      maxdeg = std::max(maxdeg, d);
    }
    if (nlive == 0) return;
    bin.assign(maxdeg + 2, 0);
    for (int v = 0; v < n; ++v)
      if (alive[v] && v != skip) ++bin[deg[v]];
    int start = 0;
    for (int d = 0; d <= maxdeg; ++d) {
      int cnt = bin[d];
      bin[d] = start;
      start += cnt;
    }
    vert.assign(nlive, 0);
    {
      std::vector<int> cursor(bin.begin(), bin.end());
      for (int v = 0; v < n; ++v) {
        if (!alive[v] || v == skip) continue;
        pos[v] = cursor[deg[v]]++;
        vert[pos[v]] = v;
      }
    }
    for (int i = 0; i < nlive; ++i) {
      int v = vert[i];
      core[v] = deg[v];
      for (std::size_t j = G.off[v]; j < G.off[v + 1]; ++j) {
        int u = G.nbr[j];
        if (!alive[u] || u == skip) continue;
        if (deg[u] <= deg[v]) continue;
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
  }

  // after peel(G, alive, c): how many vertices other than c lost coreness
  // relative to ref
  std::int64_t count_drops(const residual_csr& G, const std::vector<char>& alive,
                           int skip, const std::vector<int>& ref) const {
    std::int64_t s = 0;
    for (int v = 0; v < G.n; ++v)
      if (alive[v] && v != skip && core[v] < ref[v]) ++s;
    return s;
  }
};

}  // namespace detail

inline std::vector<int> normalize_candidates(const graph& g,
                                             std::vector<int> cand) {
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  for (int v : cand) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("candidate id out of range");
    if (!g.is_live(v))
      throw std::invalid_argument("candidate is not a live vertex");
  }
  return cand;
}

// Strength of one vertex: how many survivors lose coreness if only v is
// deleted. Equals affected_set(g, base, {v}).size() by construction.
inline std::int64_t node_strength(const graph& g,
                                  const core_decomposition& base, int v) {
  detail::residual_csr G(g);
  detail::peel_scratch ws;
  ws.peel(G, base.live, v);
  return ws.count_drops(G, base.live, v, base.coreness);
}

// Bulk strengths against the unmodified graph, one masked peel per
// candidate; parallel across candidates.
inline std::vector<std::int64_t> node_strengths(const graph& g,
                                                const core_decomposition& base,
                                                const std::vector<int>& cand,
                                                int threads = 1) {
  detail::residual_csr G(g);
  std::vector<std::int64_t> out(cand.size(), 0);
  int workers = std::max(1, threads);
  std::vector<detail::peel_scratch> ws(workers);
  parallel_blocks(cand.size(), workers,
                  [&](int tid, std::size_t lo, std::size_t hi) {
                    for (std::size_t i = lo; i < hi; ++i) {
                      int c = cand[i];
                      if (base.coreness[c] == 0) continue;
                      ws[tid].peel(G, base.live, c);
                      out[i] = ws[tid].count_drops(G, base.live, c, base.coreness);
                    }
                  });
  return out;
}

namespace detail {

// selection order of the degree heuristic: degree descending, id ascending
inline std::vector<int> degree_order(const graph& g, std::vector<int> cand) {
  std::stable_sort(cand.begin(), cand.end(), [&](int a, int c) {
    return g.degree(a) != g.degree(c) ? g.degree(a) > g.degree(c) : a < c;
  });
  return cand;
}

// selection order of the one-shot strength heuristic
inline std::vector<int> strength_order(const graph& g,
                                       const core_decomposition& base,
                                       const std::vector<int>& cand,
                                       int threads) {
  std::vector<std::int64_t> s = node_strengths(g, base, cand, threads);
  std::vector<std::size_t> idx(cand.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t c) {
    return s[a] != s[c] ? s[a] > s[c] : cand[a] < cand[c];
  });
  std::vector<int> order;
  order.reserve(cand.size());
  for (std::size_t i : idx) order.push_back(cand[i]);
  return order;
}

// evaluate prefixes of an ordered deletion list to fill attack_step records
inline std::vector<attack_step> trace_prefixes(const graph& g,
                                               const core_decomposition& base,
                                               const std::vector<int>& order) {
  std::vector<attack_step> steps;
  steps.reserve(order.size());
  std::vector<int> prefix;
  for (int v : order) {
    prefix.push_back(v);
    steps.push_back({v, static_cast<std::int64_t>(
                            affected_set(g, base, prefix).size())});
  }
  return steps;
}

inline attack_result finish_attack(const graph& g,
                                   const core_decomposition& base,
                                   std::vector<int> order,
                                   std::vector<attack_step> steps) {
  attack_result r = evaluate_attack(g, base, order);
  r.steps = std::move(steps);
  return r;
}

}  // namespace detail

// Uniform sample of the candidate pool, no replacement. The draw order is
// the selection order for tracing purposes.
inline attack_result select_random(const graph& g,
                                   const core_decomposition& base,
                                   std::vector<int> candidates,
                                   std::size_t budget, std::uint64_t seed,
                                   const attack_options& opts = {}) {
  candidates = normalize_candidates(g, candidates);
  std::size_t b = std::min(budget, candidates.size());
  rng64 rng(seed);
  std::vector<int> order = sample_without_replacement(candidates, b, rng);
  auto steps = opts.trace ? detail::trace_prefixes(g, base, order)
                          : std::vector<attack_step>{};
  return detail::finish_attack(g, base, std::move(order), std::move(steps));
}

// Top-b degrees of the unmodified graph; ties broken toward the lowest id.
inline attack_result select_high_degree(const graph& g,
                                        const core_decomposition& base,
                                        std::vector<int> candidates,
                                        std::size_t budget,
                                        const attack_options& opts = {}) {
  candidates = normalize_candidates(g, candidates);
  std::size_t b = std::min(budget, candidates.size());
  std::vector<int> order = detail::degree_order(g, std::move(candidates));
  order.resize(b);
  auto steps = opts.trace ? detail::trace_prefixes(g, base, order)
                          : std::vector<attack_step>{};
  return detail::finish_attack(g, base, std::move(order), std::move(steps));
}

// Top-b one-shot strengths, scored once against the unmodified graph; ties
// broken toward the lowest id.
inline attack_result select_high_decrease(const graph& g,
                                          const core_decomposition& base,
                                          std::vector<int> candidates,
                                          std::size_t budget,
                                          const attack_options& opts = {}) {
  candidates = normalize_candidates(g, candidates);
  std::size_t b = std::min(budget, candidates.size());
  std::vector<int> order =
      detail::strength_order(g, base, candidates, opts.threads);
  order.resize(b);
  auto steps = opts.trace ? detail::trace_prefixes(g, base, order)
                          : std::vector<attack_step>{};
  return detail::finish_attack(g, base, std::move(order), std::move(steps));
}

namespace detail {

// Adaptive greedy engine. Each round re-scores the remaining candidates
// against the current residual graph, deletes the strongest (lowest id on
// ties), and refreshes the residual coreness. Rounds whose best strength is
// zero still consume budget by deleting the lowest-id candidate left, so a
// requested budget is always spent in full.
//
// Pruning (on by default) skips the expensive per-candidate peel when it
// cannot change anything: a vertex whose live neighbors all have strictly
// greater current coreness supports no one's core level, so its one-shot
// strength is zero. This filter only avoids work; selections are identical
// with it on or off.
//
// stop_f short-circuits once the running objective reaches the threshold
// (used to find minimal budgets for disruption targets).
inline attack_result adaptive_run(const graph& g, const core_decomposition& base,
                                  std::vector<int> candidates, std::size_t budget,
                                  const attack_options& opts,
                                  std::int64_t stop_f) {
  candidates = normalize_candidates(g, candidates);
  std::size_t b = std::min(budget, candidates.size());
  residual_csr G(g);
  std::vector<char> alive(base.live.begin(), base.live.end());
  std::vector<int> cur_core = base.coreness;
  std::vector<int> remaining = candidates;  // kept ascending
  int workers = std::max(1, opts.threads);
  std::vector<peel_scratch> ws(workers);
  peel_scratch refresh;
  std::vector<std::int64_t> strength;
  int n0 = g.live_count();

  attack_result r;
  r.steps.reserve(b);
  for (std::size_t round = 0; round < b; ++round) {
    strength.assign(remaining.size(), 0);
    parallel_blocks(remaining.size(), workers,
                    [&](int tid, std::size_t lo, std::size_t hi) {
                      for (std::size_t i = lo; i < hi; ++i) {
                        int c = remaining[i];
                        if (cur_core[c] == 0) continue;  // isolated, no effect
                        if (opts.prune) {
                          bool shielded = true;
                          for (std::size_t j = G.off[c];
                               shielded && j < G.off[c + 1]; ++j) {
                            int u = G.nbr[j];
                            if (alive[u] && cur_core[u] <= cur_core[c])
                              shielded = false;
                          }
                          if (shielded) continue;
                        }
                        ws[tid].peel(G, alive, c);
                        strength[i] =
                            ws[tid].count_drops(G, alive, c, cur_core);
                      }
                    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < remaining.size(); ++i)
      if (strength[i] > strength[best]) best = i;
    int pick = remaining[best];
    alive[pick] = 0;
    remaining.erase(remaining.begin() + best);
    refresh.peel(G, alive, -1);
    cur_core = refresh.core;
    std::int64_t f_cum = 0;
    for (int v = 0; v < G.n; ++v)
      if (alive[v] && cur_core[v] < base.coreness[v]) ++f_cum;
    r.steps.push_back({pick, f_cum});
    r.deleted.push_back(pick);
    if (f_cum >= stop_f) break;
  }

  std::sort(r.deleted.begin(), r.deleted.end());
  for (int v = 0; v < G.n; ++v)
    if (alive[v] && cur_core[v] < base.coreness[v]) r.affected.push_back(v);
  r.f = static_cast<std::int64_t>(r.affected.size());
  r.disruption = n0 > 0 ? static_cast<double>(r.f) / n0 : 0.0;
  return r;
}

}  // namespace detail

// Adaptive greedy: re-score survivors each round on the residual graph.
// Always traced (the per-round objective is a byproduct).
inline attack_result select_adaptive(const graph& g,
                                     const core_decomposition& base,
                                     std::vector<int> candidates,
                                     std::size_t budget,
                                     const attack_options& opts = {}) {
  return detail::adaptive_run(g, base, std::move(candidates), budget, opts,
                              std::numeric_limits<std::int64_t>::max());
}

// Minimal adaptive-greedy budgets reaching each disruption target (fraction
// of the vertex count). Returns (target, budget) pairs in the input order;
// budget is -1 when even deleting every candidate falls short.
inline std::vector<std::pair<double, std::int64_t>> budgets_for_targets(
    const graph& g, const core_decomposition& base,
    std::vector<int> candidates, const std::vector<double>& targets,
    const attack_options& opts = {}) {
  std::vector<std::pair<double, std::int64_t>> out;
  if (targets.empty()) return out;
  int n0 = g.live_count();
  double tmax = *std::max_element(targets.begin(), targets.end());
  std::int64_t stop_f = static_cast<std::int64_t>(std::ceil(tmax * n0 - 1e-9));
  attack_result run =
      detail::adaptive_run(g, base, std::move(candidates),
                           g.vertex_count() + 1ul, opts, std::max<std::int64_t>(stop_f, 0));
  for (double t : targets) {
    std::int64_t budget = -1;
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
      if (static_cast<double>(run.steps[i].f_after) / n0 >= t - 1e-12) {
        budget = static_cast<std::int64_t>(i + 1);
        break;
      }
    }
    if (t <= 1e-12) budget = 0;  // zero disruption needs no deletions
    out.emplace_back(t, budget);
  }
  return out;
}

}  // namespace corefall
