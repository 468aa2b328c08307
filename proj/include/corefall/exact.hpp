#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "corefall/core.hpp"
#include "corefall/graph.hpp"
#include "corefall/heuristics.hpp"
#include "corefall/objective.hpp"

namespace corefall {

// raised when an exact solver cannot handle the instance (candidate pool
// over the enumeration cap, or a non-forest input to the forest solver)
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct exact_options {
  std::size_t candidate_cap = 20;  // brute force refuses larger pools
};

// Exhaustive search over all candidate subsets of size <= budget, smallest
// size first and lexicographic within a size, keeping the first optimum
// found. That enumeration order makes the tie-break "fewest deletions, then
// lexicographically smallest set" fall out for free.
inline attack_result exact_bruteforce(const graph& g,
                                      const core_decomposition& base,
                                      std::vector<int> candidates,
                                      std::size_t budget,
                                      const exact_options& opts = {}) {
  candidates = normalize_candidates(g, candidates);
  if (candidates.size() > opts.candidate_cap)
    throw infeasible_error("brute force: " + std::to_string(candidates.size()) +
                           " candidates exceed the cap of " +
                           std::to_string(opts.candidate_cap));
  std::size_t b = std::min(budget, candidates.size());
  std::size_t n_cand = candidates.size();

  detail::residual_csr G(g);
  detail::peel_scratch ws;
  std::vector<char> alive;

  std::int64_t best_f = 0;  // the empty set scores 0
  std::vector<int> best_set;
  std::vector<std::size_t> comb;
  for (std::size_t k = 1; k <= b; ++k) {
    comb.resize(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      alive.assign(base.live.begin(), base.live.end());
      for (std::size_t idx : comb) alive[candidates[idx]] = 0;
      ws.peel(G, alive, -1);
      std::int64_t f = ws.count_drops(G, alive, -1, base.coreness);
      if (f > best_f) {
        best_f = f;
        best_set.clear();
        for (std::size_t idx : comb) best_set.push_back(candidates[idx]);
      }
      // advance to the next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && comb[i - 1] == n_cand - k + (i - 1)) --i;
      if (i == 0) break;
      ++comb[i - 1];
      for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  attack_result r = evaluate_attack(g, base, best_set);
  r.optimal = true;
  return r;
}

namespace detail {

// Budget-indexed value rows for the forest solver. Entries mean "best value
// using at most this much budget", so every valid row is nondecreasing.
// dp_bot marks unreachable states; INT64_MIN/4 keeps additions overflow-safe.
constexpr std::int64_t dp_bot = std::numeric_limits<std::int64_t>::min() / 4;
using dp_row = std::vector<std::int64_t>;

inline std::int64_t minus_one(std::int64_t x) {
  return x == dp_bot ? dp_bot : x - 1;
}

// max-plus convolution of two budget rows
inline dp_row knap_merge(const dp_row& a, const dp_row& b) {
  std::size_t len = a.size();
  dp_row r(len, dp_bot);
  for (std::size_t i = 0; i < len; ++i) {
    if (a[i] == dp_bot) continue;
    for (std::size_t j = 0; i + j < len; ++j) {
      if (b[j] == dp_bot) continue;
      r[i + j] = std::max(r[i + j], a[i] + b[j]);
    }
  }
  return r;
}

// Split a budget across items so the merged optimum at `budget` is realized;
// returns one budget share per item (shares may sum to less than `budget`).
// The smallest share is preferred at every step, which keeps reconstruction
// deterministic and avoids allocating budget that buys nothing.
inline std::vector<int> knap_split(const std::vector<const dp_row*>& items,
                                   int budget) {
  std::size_t t = items.size();
  std::vector<dp_row> pre(t + 1);
  pre[0].assign(budget + 1, 0);
  for (std::size_t i = 0; i < t; ++i) {
    dp_row cut(items[i]->begin(),
               items[i]->begin() + std::min<std::size_t>(items[i]->size(),
                                                         budget + 1));
    cut.resize(budget + 1, cut.empty() ? dp_bot : cut.back());
    pre[i + 1] = knap_merge(pre[i], cut);
  }
  std::vector<int> share(t, 0);
  int rem = budget;
  for (std::size_t i = t; i > 0; --i) {
    const dp_row& v = *items[i - 1];
    for (int l = 0; l <= rem; ++l) {
      std::int64_t vi = l < static_cast<int>(v.size()) ? v[l] : dp_bot;
      if (vi == dp_bot || pre[i - 1][rem - l] == dp_bot) continue;
      if (pre[i - 1][rem - l] + vi == pre[i][rem]) {
        share[i - 1] = l;
        rem -= l;
        break;
      }
    }
  }
  return share;
}

}  // namespace detail

// Exact solver for forests (degeneracy at most 1). Dynamic program over each
// tree with four per-vertex states:
//   A: vertex survives, every child is deleted   (counts the vertex itself
//      as newly isolated; a surviving parent subtracts that 1 back out)
//   B: vertex survives along with at least one child
//   C: vertex is deleted (requires candidate membership and a budget unit)
//   D: best of A/B/C, the view seen from a deleted or absent parent
// Rows are combined across children by bounded knapsack; tree roots combine
// across the forest the same way. Trees of one vertex hold no edges and can
// never produce an affected vertex, so they are skipped. Runs in
// O(n * budget^2); the optimum is exact, not a bound.
inline attack_result exact_forest_dp(const graph& g,
                                     const core_decomposition& base,
                                     std::vector<int> candidates,
                                     std::size_t budget) {
  using detail::dp_bot;
  using detail::dp_row;
  candidates = normalize_candidates(g, candidates);
  if (base.degeneracy > 1)
    throw infeasible_error(
        "forest solver: graph has degeneracy " +
        std::to_string(base.degeneracy) + ", expected a forest");
  int n = g.vertex_count();
  int bb = static_cast<int>(std::min(budget, candidates.size()));

  std::vector<char> in_gamma(n, 0);
  for (int v : candidates) in_gamma[v] = 1;

  // root every live component of size >= 2 at its smallest id
  std::vector<int> parent(n, -1), order, roots;
  std::vector<std::vector<int>> children(n);
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (!g.is_live(s) || seen[s] || g.degree(s) == 0) continue;
    roots.push_back(s);
    std::size_t head = order.size();
    order.push_back(s);
    seen[s] = 1;
    while (head < order.size()) {
      int v = order[head++];
      for (int u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = 1;
        parent[u] = v;
        children[v].push_back(u);
        order.push_back(u);
      }
    }
  }

  struct tables {
    dp_row A, B, C, D;
  };
  std::vector<tables> T(n);
  dp_row zero_row(bb + 1, 0), bot_row(bb + 1, dp_bot);

  // children before parents: walk the BFS order backwards
  for (std::size_t oi = order.size(); oi > 0; --oi) {
    int x = order[oi - 1];
    tables& t = T[x];
    const std::vector<int>& ch = children[x];
    int nch = static_cast<int>(ch.size());
    if (nch == 0) {
      t.A = dp_row(bb + 1, 1);
      t.B = bot_row;
      t.C = bot_row;
      if (in_gamma[x])
        for (int l = 1; l <= bb; ++l) t.C[l] = 0;
    } else {
      // A: delete the whole child layer, then the grandchildren are on
      // their own
      bool child_layer_deletable = true;
      for (int y : ch)
        if (!in_gamma[y]) child_layer_deletable = false;
      if (child_layer_deletable && nch <= bb) {
        std::vector<const dp_row*> grand;
        for (int y : ch)
          for (int z : children[y]) grand.push_back(&T[z].D);
        dp_row acc = zero_row;
        for (const dp_row* d : grand) acc = detail::knap_merge(acc, *d);
        t.A = bot_row;
        for (int l = nch; l <= bb; ++l)
          if (acc[l - nch] != dp_bot) t.A[l] = 1 + acc[l - nch];
      } else {
        t.A = bot_row;
      }
      // B: two-flag knapsack over children; flag = "a surviving child exists"
      dp_row g0 = zero_row, g1 = bot_row;
      for (int y : ch) {
        dp_row free_row(bb + 1), surv_row(bb + 1);
        for (int l = 0; l <= bb; ++l) {
          std::int64_t a1 = detail::minus_one(T[y].A[l]);
          surv_row[l] = std::max(a1, T[y].B[l]);
          free_row[l] = std::max(surv_row[l], T[y].C[l]);
        }
        dp_row ng1 = detail::knap_merge(g1, free_row);
        dp_row alt = detail::knap_merge(g0, surv_row);
        for (int l = 0; l <= bb; ++l) ng1[l] = std::max(ng1[l], alt[l]);
        g0 = detail::knap_merge(g0, free_row);
        g1 = std::move(ng1);
      }
      t.B = std::move(g1);
      // C: spend one unit on x itself, children see a deleted parent
      t.C = bot_row;
      if (in_gamma[x]) {
        dp_row acc = zero_row;
        for (int y : ch) acc = detail::knap_merge(acc, T[y].D);
        for (int l = 1; l <= bb; ++l)
          if (acc[l - 1] != dp_bot) t.C[l] = acc[l - 1];
      }
    }
    t.D.resize(bb + 1);
    for (int l = 0; l <= bb; ++l)
      t.D[l] = std::max({t.A[l], t.B[l], t.C[l]});
  }

  // combine the trees, then walk the choices back out
  std::vector<const dp_row*> root_rows;
  for (int r : roots) root_rows.push_back(&T[r].D);
  dp_row forest = zero_row;
  for (const dp_row* d : root_rows) forest = detail::knap_merge(forest, *d);
  std::int64_t f_star = forest[bb];
  std::vector<int> shares = detail::knap_split(root_rows, bb);

  std::vector<int> deleted;
  enum state { sA, sB, sC };
  auto argstate = [&](int v, int l) {
    if (T[v].A[l] != dp_bot && T[v].A[l] == T[v].D[l]) return sA;
    if (T[v].B[l] != dp_bot && T[v].B[l] == T[v].D[l]) return sB;
    return sC;
  };
  struct task {
    int v;
    state st;
    int l;
  };
  std::vector<task> stack;
  for (std::size_t i = 0; i < roots.size(); ++i)
    stack.push_back({roots[i], argstate(roots[i], shares[i]), shares[i]});
  while (!stack.empty()) {
    task tk = stack.back();
    stack.pop_back();
    int x = tk.v, l = tk.l;
    const std::vector<int>& ch = children[x];
    if (tk.st == sA) {
      std::vector<int> grand;
      std::vector<const dp_row*> rows;
      for (int y : ch) {
        deleted.push_back(y);
        for (int z : children[y]) {
          grand.push_back(z);
          rows.push_back(&T[z].D);
        }
      }
      std::vector<int> sh = detail::knap_split(rows, l - static_cast<int>(ch.size()));
      for (std::size_t i = 0; i < grand.size(); ++i)
        stack.push_back({grand[i], argstate(grand[i], sh[i]), sh[i]});
    } else if (tk.st == sC) {
      deleted.push_back(x);
      std::vector<const dp_row*> rows;
      for (int y : ch) rows.push_back(&T[y].D);
      std::vector<int> sh = detail::knap_split(rows, l - 1);
      for (std::size_t i = 0; i < ch.size(); ++i)
        stack.push_back({ch[i], argstate(ch[i], sh[i]), sh[i]});
    } else {
      // replay the two-flag knapsack to learn each child's share and role
      std::size_t nch = ch.size();
      std::vector<dp_row> g0s(nch + 1), g1s(nch + 1);
      std::vector<dp_row> frees(nch), survs(nch);
      g0s[0] = zero_row;
      g1s[0] = bot_row;
      for (std::size_t i = 0; i < nch; ++i) {
        int y = ch[i];
        frees[i].resize(bb + 1);
        survs[i].resize(bb + 1);
        for (int q = 0; q <= bb; ++q) {
          std::int64_t a1 = detail::minus_one(T[y].A[q]);
          survs[i][q] = std::max(a1, T[y].B[q]);
          frees[i][q] = std::max(survs[i][q], T[y].C[q]);
        }
        dp_row ng1 = detail::knap_merge(g1s[i], frees[i]);
        dp_row alt = detail::knap_merge(g0s[i], survs[i]);
        for (int q = 0; q <= bb; ++q) ng1[q] = std::max(ng1[q], alt[q]);
        g0s[i + 1] = detail::knap_merge(g0s[i], frees[i]);
        g1s[i + 1] = std::move(ng1);
      }
      bool need_surv = true;
      int rem = l;
      std::vector<std::pair<int, int>> picks(nch);  // (share, role: 0 free 1 surv)
      for (std::size_t i = nch; i > 0; --i) {
        const dp_row& cur = need_surv ? g1s[i] : g0s[i];
        bool found = false;
        for (int q = 0; q <= rem && !found; ++q) {
          if (need_surv) {
            if (g1s[i - 1][rem - q] != dp_bot && frees[i - 1][q] != dp_bot &&
                g1s[i - 1][rem - q] + frees[i - 1][q] == cur[rem]) {
              picks[i - 1] = {q, 0};
              rem -= q;
              found = true;
            } else if (g0s[i - 1][rem - q] != dp_bot &&
                       survs[i - 1][q] != dp_bot &&
                       g0s[i - 1][rem - q] + survs[i - 1][q] == cur[rem]) {
              picks[i - 1] = {q, 1};
              rem -= q;
              need_surv = false;
              found = true;
            }
          } else {
            if (g0s[i - 1][rem - q] != dp_bot && frees[i - 1][q] != dp_bot &&
                g0s[i - 1][rem - q] + frees[i - 1][q] == cur[rem]) {
              picks[i - 1] = {q, 0};
              rem -= q;
              found = true;
            }
          }
        }
      }
      for (std::size_t i = 0; i < nch; ++i) {
        int y = ch[i];
        auto [q, role] = picks[i];
        std::int64_t a1 = detail::minus_one(T[y].A[q]);
        state st;
        std::int64_t want = role == 1 ? survs[i][q] : frees[i][q];
        if (a1 != dp_bot && a1 == want)
          st = sA;
        else if (T[y].B[q] != dp_bot && T[y].B[q] == want)
          st = sB;
        else
          st = sC;
        stack.push_back({y, st, q});
      }
    }
  }

  attack_result r = evaluate_attack(g, base, deleted);
  if (r.f != f_star)
    throw std::logic_error("forest solver: reconstruction scored " +
                           std::to_string(r.f) + " but the tables promise " +
                           std::to_string(f_star));
  r.optimal = true;
  return r;
}

}  // namespace corefall
