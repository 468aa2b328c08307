#pragma once

// Shared test machinery: deliberately naive reference implementations
// (independent of the library's algorithms), tiny graph builders, and a
// subprocess runner for the command-line binary.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "corefall/graph.hpp"
#include "corefall/reductions.hpp"
#include "corefall/rng.hpp"

namespace support {

// ---------------------------------------------------------------- oracles

// Fixed-point definition of coreness: for each k, keep deleting vertices of
// degree < k until stable; a vertex's coreness is the last k it survived.
inline std::vector<int> naive_coreness(const corefall::graph& g) {
  int n = g.vertex_count();
  std::vector<int> core(n, 0);
  for (int k = 1;; ++k) {
    std::vector<char> in(n, 0);
    for (int v = 0; v < n; ++v)
      if (g.is_live(v)) in[v] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        int d = 0;
        for (int u : g.neighbors(v))
          if (in[u]) ++d;
        if (d < k) {
          in[v] = 0;
          changed = true;
        }
      }
    }
    bool any = false;
    for (int v = 0; v < n; ++v)
      if (in[v]) {
        core[v] = k;
        any = true;
      }
    if (!any) break;
  }
  return core;
}

// survivors whose naive coreness drops when b is deleted
inline std::vector<int> naive_affected(const corefall::graph& g,
                                       const std::vector<int>& b) {
  std::vector<int> before = naive_coreness(g);
  corefall::graph h = g.without(b);
  std::vector<int> after = naive_coreness(h);
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (h.is_live(v) && after[v] < before[v]) out.push_back(v);
  return out;
}

// best objective over every candidate subset of size <= budget, by the
// naive definitions above
inline std::int64_t naive_best_f(const corefall::graph& g,
                                 const std::vector<int>& candidates,
                                 int budget) {
  int m = static_cast<int>(candidates.size());
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > budget) continue;
    std::vector<int> b;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) b.push_back(candidates[i]);
    std::int64_t f = static_cast<std::int64_t>(naive_affected(g, b).size());
    if (f > best) best = f;
  }
  return best;
}

// does a cover of size <= r exist? plain subset enumeration
inline bool cover_exists(const corefall::set_cover_instance& inst, int r) {
  int m = static_cast<int>(inst.sets.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > r) continue;
    std::vector<char> covered(inst.universe_size + 1, 0);
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i))
        for (int e : inst.sets[i]) covered[e] = 1;
    bool all = true;
    for (int e = 1; e <= inst.universe_size; ++e)
      if (!covered[e]) all = false;
    if (all) return true;
  }
  return false;
}

// Two-sided t-tail by direct numerical integration of the density (Simpson
// on [|t|, T] plus a 1/x-substituted tail), independent of the incomplete
// beta route.
inline double t_two_sided_by_integration(double t, int nu) {
  double a = std::fabs(t);
  auto pdf = [nu](double x) {
    double lc = std::lgamma((nu + 1) / 2.0) - std::lgamma(nu / 2.0) -
                0.5 * std::log(nu * M_PI);
    return std::exp(lc - (nu + 1) / 2.0 * std::log1p(x * x / nu));
  };
  auto simpson = [](auto f, double lo, double hi, int steps) {
    double h = (hi - lo) / steps, s = f(lo) + f(hi);
    for (int i = 1; i < steps; ++i) s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  double T = a + 60.0;
  double head = simpson(pdf, a, T, 20000);
  // tail: x = 1/u maps [T, inf) to (0, 1/T]
  auto tail_f = [&](double u) {
    return u > 0 ? pdf(1.0 / u) / (u * u) : 0.0;
  };
  double tail = simpson(tail_f, 0.0, 1.0 / T, 20000);
  return 2.0 * (head + tail);
}

// ---------------------------------------------------------------- builders

inline corefall::graph make_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return corefall::graph::from_edges(n, e);
}

inline corefall::graph make_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return corefall::graph::from_edges(n, e);
}

inline corefall::graph make_clique(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return corefall::graph::from_edges(n, e);
}

// center 0, leaves 1..n-1
inline corefall::graph make_star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return corefall::graph::from_edges(leaves + 1, e);
}

inline corefall::graph make_edgeless(int n) {
  return corefall::graph::from_edges(n, {});
}

// id-shifted disjoint union
inline corefall::graph disjoint_union(const corefall::graph& a,
                                      const corefall::graph& b) {
  std::vector<std::pair<int, int>> e;
  int na = a.vertex_count();
  for (int u = 0; u < na; ++u)
    for (int v : a.neighbors(u))
      if (u < v) e.emplace_back(u, v);
  for (int u = 0; u < b.vertex_count(); ++u)
    for (int v : b.neighbors(u))
      if (u < v) e.emplace_back(na + u, na + v);
  return corefall::graph::from_edges(na + b.vertex_count(), e);
}

// every pair independently with probability p
inline corefall::graph random_graph(int n, double p, corefall::rng64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) e.emplace_back(u, v);
  return corefall::graph::from_edges(n, e);
}

// random parent attachment; skipping some vertices leaves singletons and
// multiple trees
inline corefall::graph random_forest(int n, double attach_p,
                                     corefall::rng64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v)
    if (rng.unit() < attach_p)
      e.emplace_back(static_cast<int>(rng.below(v)), v);
  return corefall::graph::from_edges(n, e);
}

// random subset of size k
inline std::vector<int> random_subset(int n, int k, corefall::rng64& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  return corefall::sample_without_replacement(pool, k, rng);
}

// ------------------------------------------------------------- subprocess

struct cli_result {
  int code = -1;
  std::string out;
  std::string err;
};

inline std::string temp_path(const std::string& hint) {
  static int counter = 0;
  std::ostringstream p;
  p << "/tmp/corefall_test_" << ::getpid() << "_" << counter++ << "_" << hint;
  return p.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// run the CLI binary with the given argument string
inline cli_result run_cli(const std::string& args) {
  cli_result r;
  std::string out = temp_path("stdout"), err = temp_path("stderr");
  std::string cmd =
      std::string(CLI_BIN) + " " + args + " >" + out + " 2>" + err;
  int rc = std::system(cmd.c_str());
  r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = read_file(out);
  r.err = read_file(err);
  std::remove(out.c_str());
  std::remove(err.c_str());
  return r;
}

inline std::string write_edge_file(const corefall::graph& g,
                                   const std::string& hint) {
  std::string path = temp_path(hint);
  std::ofstream out(path);
  g.serialize(out);
  return path;
}

}  // namespace support
