#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "corefall/generators.hpp"
#include "corefall/graph.hpp"
#include "corefall/heuristics.hpp"
#include "corefall/parallel.hpp"
#include "corefall/rng.hpp"

namespace corefall {

// one input graph of a sweep: either an edge-list file or a generator spec
struct dataset_spec {
  std::string name;
  std::string path;      // set for file-backed datasets
  std::string model;     // "er" or "ba" for generated ones
  int n = 0;
  double deg = 0.0;      // er: average degree; ba: attach count
  std::uint64_t seed = 0;
};

struct experiment_config {
  std::vector<dataset_spec> datasets;
  std::vector<std::string> methods;     // random, hd, hdr, ahdr
  std::vector<std::int64_t> budgets;    // absolute budgets ...
  std::vector<double> budget_fracs;     // ... or fractions of the vertex count
  std::uint64_t seed = 0;
  int threads = 1;
};

struct sweep_row {
  std::string dataset;
  std::string method;
  std::int64_t budget = 0;
  std::int64_t f = -1;
  double disruption = 0.0;
  double seconds = 0.0;
  std::vector<int> deleted;
  bool failed = false;
  std::string error;
};

inline experiment_config experiment_config_from_json(const nlohmann::json& j) {
  experiment_config cfg;
  try {
    for (const auto& d : j.at("datasets")) {
      dataset_spec ds;
      ds.name = d.at("name").get<std::string>();
      if (d.contains("path")) {
        ds.path = d.at("path").get<std::string>();
      } else {
        ds.model = d.at("model").get<std::string>();
        ds.n = d.at("n").get<int>();
        ds.deg = d.at("deg").get<double>();
        ds.seed = d.value("seed", 0ull);
        if (ds.model != "er" && ds.model != "ba")
          throw parse_error("dataset " + ds.name + ": unknown model " + ds.model);
      }
      cfg.datasets.push_back(std::move(ds));
    }
    cfg.methods = j.at("methods").get<std::vector<std::string>>();
    if (j.contains("budgets"))
      cfg.budgets = j.at("budgets").get<std::vector<std::int64_t>>();
    if (j.contains("budget_fracs"))
      cfg.budget_fracs = j.at("budget_fracs").get<std::vector<double>>();
    cfg.seed = j.value("seed", 0ull);
    cfg.threads = j.value("threads", 1);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("sweep config: ") + e.what());
  }
  if (cfg.methods.empty()) throw parse_error("sweep config: no methods");
  for (const std::string& m : cfg.methods)
    if (m != "random" && m != "hd" && m != "hdr" && m != "ahdr")
      throw parse_error("sweep config: unknown method " + m);
  if (cfg.budgets.empty() == cfg.budget_fracs.empty())
    throw parse_error("sweep config: give exactly one of budgets/budget_fracs");
  for (std::size_t i = 1; i < cfg.budgets.size(); ++i)
    if (cfg.budgets[i] <= cfg.budgets[i - 1])
      throw parse_error("sweep config: budgets must be strictly ascending");
  for (std::size_t i = 1; i < cfg.budget_fracs.size(); ++i)
    if (cfg.budget_fracs[i] <= cfg.budget_fracs[i - 1])
      throw parse_error("sweep config: budget_fracs must be strictly ascending");
  return cfg;
}

// Runs every (dataset, method, budget) cell. Cells are independent jobs for
// the worker pool; each draws its seed by hashing its own coordinates with
// the master seed, so any subset of cells reproduces the full run's values.
// Unreadable datasets yield one error row and do not stop the sweep.
inline std::vector<sweep_row> run_sweep(const experiment_config& cfg) {
  struct loaded {
    graph g;
    core_decomposition base;
    bool ok = false;
    std::string error;
  };
  std::vector<loaded> data(cfg.datasets.size());
  for (std::size_t d = 0; d < cfg.datasets.size(); ++d) {
    const dataset_spec& ds = cfg.datasets[d];
    try {
      if (!ds.path.empty())
        data[d].g = graph::from_edge_list_file(ds.path);
      else if (ds.model == "er")
        data[d].g = erdos_renyi(ds.n, ds.deg, ds.seed);
      else
        data[d].g = barabasi_albert(ds.n, std::max(1, static_cast<int>(std::llround(ds.deg))), ds.seed);
      data[d].base = core_decompose(data[d].g);
      data[d].ok = true;
    } catch (const std::exception& e) {
      data[d].error = e.what();
    }
  }

  struct cell {
    std::size_t dataset;
    std::string method;
    std::int64_t budget;
  };
  std::vector<cell> cells;
  std::vector<sweep_row> rows;
  for (std::size_t d = 0; d < cfg.datasets.size(); ++d) {
    if (!data[d].ok) {
      sweep_row r;
      r.dataset = cfg.datasets[d].name;
      r.method = "error";
      r.failed = true;
      r.error = data[d].error;
      rows.push_back(std::move(r));
      continue;
    }
    std::vector<std::int64_t> budgets = cfg.budgets;
    if (budgets.empty()) {
      int nlive = data[d].g.live_count();
      for (double frac : cfg.budget_fracs)
        budgets.push_back(static_cast<std::int64_t>(std::floor(frac * nlive)));
    }
    for (const std::string& m : cfg.methods)
      for (std::int64_t b : budgets) cells.push_back({d, m, b});
  }

  std::vector<sweep_row> cell_rows(cells.size());
  parallel_for(cells.size(), cfg.threads, [&](std::size_t i) {
    const cell& c = cells[i];
    const loaded& ld = data[c.dataset];
    sweep_row& r = cell_rows[i];
    r.dataset = cfg.datasets[c.dataset].name;
    r.method = c.method;
    r.budget = c.budget;
    std::uint64_t cell_seed = derive_seed(
        cfg.seed, fnv1a(r.dataset + "|" + c.method + "|" + std::to_string(c.budget)));
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> cand = ld.g.live_vertices();
    std::size_t b = c.budget < 0 ? 0 : static_cast<std::size_t>(c.budget);
    attack_result res;
    if (c.method == "random")
      res = select_random(ld.g, ld.base, cand, b, cell_seed);
    else if (c.method == "hd")
      res = select_high_degree(ld.g, ld.base, cand, b);
    else if (c.method == "hdr")
      res = select_high_decrease(ld.g, ld.base, cand, b);
    else
      res = select_adaptive(ld.g, ld.base, cand, b);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.f = res.f;
    r.disruption = res.disruption;
    r.deleted = std::move(res.deleted);
  });
  for (auto& r : cell_rows) rows.push_back(std::move(r));

  std::sort(rows.begin(), rows.end(), [](const sweep_row& a, const sweep_row& b) {
    if (a.dataset != b.dataset) return a.dataset < b.dataset;
    if (a.method != b.method) return a.method < b.method;
    return a.budget < b.budget;
  });
  return rows;
}

inline void sweep_csv(std::ostream& out, const std::vector<sweep_row>& rows) {
  out << "dataset,method,budget,f,F,seconds\n" << std::setprecision(12);
  for (const sweep_row& r : rows) {
    if (r.failed) {
      out << r.dataset << ",error,0,nan,nan,0\n";
      continue;
    }
    out << r.dataset << ',' << r.method << ',' << r.budget << ',' << r.f << ','
        << r.disruption << ',' << std::setprecision(3) << r.seconds
        << std::setprecision(12) << '\n';
  }
}

// deletion sets keyed "dataset|method|budget", for re-verification of every
// CSV row
inline nlohmann::json sweep_deletions_json(const std::vector<sweep_row>& rows) {
  nlohmann::json j = nlohmann::json::object();
  for (const sweep_row& r : rows) {
    if (r.failed) continue;
    j[r.dataset + "|" + r.method + "|" + std::to_string(r.budget)] = r.deleted;
  }
  return j;
}

}  // namespace corefall
