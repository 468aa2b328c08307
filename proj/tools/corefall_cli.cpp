// corefall: k-core robustness toolkit.
//
// One executable exposing the library: decomposition, attack heuristics,
// exact solvers, hardness-instance generators, resilience curves, random
// graph models and batch sweeps. Exit codes: 0 ok, 1 usage, 2 bad data,
// 3 infeasible request.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corefall/corefall.hpp"

namespace {

using namespace corefall;

struct global_opts {
  std::string input;
  std::string output;  // artifact prefix; stdout when empty
  std::string format = "csv";
  std::uint64_t seed = 0;
  int threads = 1;
};

graph load_input(const global_opts& go) {
  if (go.input.empty()) throw CLI::RequiredError("--input");
  return graph::from_edge_list_file(go.input);
}

std::ofstream open_artifact(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write " + path);
  return out;
}

// candidate pool file: vertex names separated by whitespace, '#' comments
std::vector<int> load_candidates(const graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  auto index = g.label_index();
  std::vector<int> cand;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      auto it = index.find(tok);
      if (it == index.end())
        throw parse_error(path + " line " + std::to_string(lineno) +
                          ": unknown vertex " + tok);
      cand.push_back(it->second);
    }
  }
  return cand;
}

std::vector<double> load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::vector<double> xs;
  double v;
  while (in >> v) xs.push_back(v);
  if (!in.eof()) throw parse_error(path + ": non-numeric token");
  return xs;
}

// keep only the largest connected component (first one on ties by scan order)
graph restrict_to_lcc(const graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<int> queue;
  int ncomp = 0;
  std::vector<std::int64_t> size;
  for (int s = 0; s < n; ++s) {
    if (!g.is_live(s) || comp[s] >= 0) continue;
    int c = ncomp++;
    size.push_back(0);
    queue.assign(1, s);
    comp[s] = c;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++size[c];
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = c;
          queue.push_back(u);
        }
    }
  }
  if (ncomp <= 1) return g;
  int keep = 0;
  for (int c = 1; c < ncomp; ++c)
    if (size[c] > size[keep]) keep = c;
  std::vector<int> drop;
  for (int v = 0; v < n; ++v)
    if (g.is_live(v) && comp[v] != keep) drop.push_back(v);
  return delete_vertices(g, drop);
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void emit(const global_opts& go, const std::string& suffix,
          const std::string& text) {
  if (go.output.empty())
    std::cout << text;
  else
    open_artifact(go.output + suffix) << text;
}

int run(int argc, char** argv) {
  CLI::App app{"k-core robustness toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  global_opts go;
  app.add_option("--input,-i", go.input, "edge-list file (\"u v\" per line)");
  app.add_option("--output,-o", go.output, "artifact path prefix (default: stdout)");
  app.add_option("--format", go.format, "stdout artifact format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", go.seed, "master random seed");
  app.add_option("--threads", go.threads, "worker threads")
      ->check(CLI::PositiveNumber);

  // ------------------------------------------------------------- decompose
  auto* cmd_dec = app.add_subcommand("decompose", "coreness of every vertex");

  // ---------------------------------------------------------------- attack
  auto* cmd_att = app.add_subcommand("attack", "run a deletion heuristic");
  std::string att_method;
  std::int64_t att_budget = -1;
  double att_frac = -1.0;
  std::string att_cand_file;
  std::vector<double> att_targets;
  bool att_trace = false, att_no_prune = false;
  cmd_att->add_option("--method", att_method, "selection heuristic")
      ->required()
      ->check(CLI::IsMember({"random", "hd", "hdr", "ahdr"}));
  cmd_att->add_option("--budget", att_budget, "number of deletions")
      ->check(CLI::NonNegativeNumber);
  cmd_att->add_option("--budget-frac", att_frac,
                      "deletions as a fraction of the vertex count")
      ->check(CLI::Range(0.0, 1.0));
  cmd_att->add_option("--candidates", att_cand_file,
                      "file restricting the deletable pool");
  cmd_att->add_option("--targets", att_targets,
                      "disruption targets; reports minimal adaptive budgets "
                      "instead of attacking")
      ->delimiter(',');
  cmd_att->add_flag("--trace", att_trace, "record the objective after each step");
  cmd_att->add_flag("--no-prune", att_no_prune,
                    "disable the zero-strength candidate filter");

  // ----------------------------------------------------------------- exact
  auto* cmd_ex = app.add_subcommand("exact", "provably optimal deletion set");
  std::string ex_solver = "brute";
  std::int64_t ex_budget = 0;
  std::string ex_cand_file;
  std::size_t ex_cap = 20;
  cmd_ex->add_option("--solver", ex_solver, "brute (any graph) or forest-dp")
      ->check(CLI::IsMember({"brute", "forest-dp"}));
  cmd_ex->add_option("--budget", ex_budget, "number of deletions")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_ex->add_option("--candidates", ex_cand_file,
                     "file restricting the deletable pool");
  cmd_ex->add_option("--cap", ex_cap, "candidate limit for the brute solver");

  // ------------------------------------------------------------ resilience
  auto* cmd_res = app.add_subcommand("resilience", "deletion-response curve");
  std::string res_metric = "core";
  std::string res_method = "ahdr";
  int res_grid = 101, res_trials = 10;
  bool res_lcc = false, res_raw = false;
  cmd_res->add_option("--metric", res_metric,
                      "core (targeted, objective curve) or rand (random, "
                      "fragmentation curve)")
      ->check(CLI::IsMember({"core", "rand"}));
  cmd_res->add_option("--method", res_method, "deletion order for --metric core")
      ->check(CLI::IsMember({"ahdr", "hdr", "random"}));
  cmd_res->add_option("--grid", res_grid, "grid points over [0,1]")
      ->check(CLI::Range(2, 1000000));
  cmd_res->add_option("--trials", res_trials, "trials for --metric rand")
      ->check(CLI::PositiveNumber);
  cmd_res->add_flag("--lcc", res_lcc, "restrict to the largest component");
  cmd_res->add_flag("--raw-entropy", res_raw,
                    "emit the unnegated (nonpositive) entropy");

  // ------------------------------------------------------------- correlate
  auto* cmd_cor = app.add_subcommand("correlate", "Pearson r with p-value");
  std::string cor_x, cor_y;
  cmd_cor->add_option("--x", cor_x, "file of numbers")->required();
  cmd_cor->add_option("--y", cor_y, "file of numbers")->required();

  // -------------------------------------------------------------- generate
  auto* cmd_gen = app.add_subcommand("generate", "synthetic random graph");
  std::string gen_model;
  int gen_n = 0;
  double gen_deg = 0.0;
  cmd_gen->add_option("--model", gen_model, "er or ba")
      ->required()
      ->check(CLI::IsMember({"er", "ba"}));
  cmd_gen->add_option("--n", gen_n, "vertex count")
      ->required()
      ->check(CLI::Range(2, 1 << 30));
  cmd_gen->add_option("--deg", gen_deg,
                      "average degree (er) or attachment count (ba)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  // ---------------------------------------------------------------- reduce
  auto* cmd_red = app.add_subcommand(
      "reduce", "set-cover instance to attack-instance construction");
  std::string red_construction, red_instance;
  int red_gadget = 6;
  cmd_red->add_option("--construction", red_construction,
                      "w2, exactcover or inapprox")
      ->required()
      ->check(CLI::IsMember({"w2", "exactcover", "inapprox"}));
  cmd_red->add_option("--instance", red_instance, "set-cover JSON file")
      ->required();
  cmd_red->add_option("--gadget-size", red_gadget,
                      "gadget vertices for inapprox (even, >= 6)");

  // ----------------------------------------------------------------- sweep
  auto* cmd_sw = app.add_subcommand("sweep", "batch attack grid from a config");
  std::string sw_config;
  cmd_sw->add_option("--config", sw_config, "experiment JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return 1;
  }

  if (cmd_dec->parsed()) {
    graph g = load_input(go);
    core_decomposition d = core_decompose(g);
    std::ostringstream csv, js;
    coreness_csv(csv, g, d);
    js << decompose_summary_json(g, d).dump(2) << '\n';
    if (go.output.empty()) {
      std::cout << (go.format == "json" ? js.str() : csv.str());
    } else {
      open_artifact(go.output + ".coreness.csv") << csv.str();
      open_artifact(go.output + ".summary.json") << js.str();
    }
    return 0;
  }

  if (cmd_att->parsed()) {
    graph g = load_input(go);
    core_decomposition base = core_decompose(g);
    std::vector<int> cand = att_cand_file.empty()
                                ? g.live_vertices()
                                : load_candidates(g, att_cand_file);
    attack_options opts;
    opts.trace = att_trace;
    opts.prune = !att_no_prune;
    opts.threads = go.threads;

    if (!att_targets.empty()) {
      auto plan = budgets_for_targets(g, base, cand, att_targets, opts);
      nlohmann::json j = nlohmann::json::array();
      for (auto [target, budget] : plan)
        j.push_back({{"target", target}, {"budget", budget}});
      emit(go, ".targets.json", j.dump(2) + "\n");
      return 0;
    }

    if ((att_budget < 0) == (att_frac < 0))
      throw CLI::ValidationError(
          "attack", "give exactly one of --budget / --budget-frac");
    std::size_t b = att_budget >= 0
                        ? static_cast<std::size_t>(att_budget)
                        : static_cast<std::size_t>(att_frac * g.live_count());
    attack_result r;
    if (att_method == "random")
      r = select_random(g, base, cand, b, go.seed, opts);
    else if (att_method == "hd")
      r = select_high_degree(g, base, cand, b, opts);
    else if (att_method == "hdr")
      r = select_high_decrease(g, base, cand, b, opts);
    else
      r = select_adaptive(g, base, cand, b, opts);

    nlohmann::json j = attack_to_json(r, g);
    if (!r.steps.empty()) {
      nlohmann::json steps = nlohmann::json::array();
      for (const attack_step& s : r.steps)
        steps.push_back({{"vertex", s.vertex}, {"f", s.f_after}});
      j["steps"] = steps;
    }
    if (go.output.empty()) {
      if (go.format == "csv") {
        std::ostringstream csv;
        attack_steps_csv(csv, r, g);
        std::cout << csv.str();
      } else {
        std::cout << j.dump(2) << '\n';
      }
    } else {
      open_artifact(go.output + ".attack.json") << j.dump(2) << '\n';
      if (!r.steps.empty()) {
        std::ostringstream csv;
        attack_steps_csv(csv, r, g);
        open_artifact(go.output + ".steps.csv") << csv.str();
      }
    }
    return 0;
  }

  if (cmd_ex->parsed()) {
    graph g = load_input(go);
    core_decomposition base = core_decompose(g);
    std::vector<int> cand = ex_cand_file.empty()
                                ? g.live_vertices()
                                : load_candidates(g, ex_cand_file);
    attack_result r;
    if (ex_solver == "brute") {
      exact_options opts;
      opts.candidate_cap = ex_cap;
      r = exact_bruteforce(g, base, cand, static_cast<std::size_t>(ex_budget),
                           opts);
    } else {
      r = exact_forest_dp(g, base, cand, static_cast<std::size_t>(ex_budget));
    }
    emit(go, ".exact.json", attack_to_json(r, g).dump(2) + "\n");
    return 0;
  }

  if (cmd_res->parsed()) {
    graph g = load_input(go);
    if (res_lcc) g = restrict_to_lcc(g);
    resilience_curve c;
    if (res_metric == "rand") {
      c = resilience_rand(g, res_trials, res_grid, go.seed, res_raw,
                          go.threads);
    } else {
      curve_method m = res_method == "ahdr"   ? curve_method::adaptive
                       : res_method == "hdr" ? curve_method::strength
                                             : curve_method::random;
      c = resilience_core(g, res_grid, m, go.seed, go.threads);
    }
    std::ostringstream csv, js;
    curve_csv(csv, c);
    js << curve_summary_json(c).dump(2) << '\n';
    if (go.output.empty()) {
      std::cout << (go.format == "json" ? js.str() : csv.str());
    } else {
      open_artifact(go.output + ".curve.csv") << csv.str();
      open_artifact(go.output + ".score.json") << js.str();
    }
    return 0;
  }

  if (cmd_cor->parsed()) {
    std::vector<double> xs = load_series(cor_x), ys = load_series(cor_y);
    pearson_result pr;
    try {
      pr = pearson(xs, ys);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());  // bad series content, not usage
    }
    nlohmann::json j{{"r", pr.r}, {"p", pr.p}, {"N", pr.n}};
    emit(go, ".correlation.json", j.dump(2) + "\n");
    return 0;
  }

  if (cmd_gen->parsed()) {
    graph g = gen_model == "er"
                  ? erdos_renyi(gen_n, gen_deg, go.seed)
                  : barabasi_albert(
                        gen_n, std::max(1, static_cast<int>(std::llround(gen_deg))),
                        go.seed);
    std::ostringstream edges;
    g.serialize(edges);
    if (go.output.empty())
      std::cout << edges.str();
    else
      open_artifact(go.output) << edges.str();  // -o names the file itself
    return 0;
  }

  if (cmd_red->parsed()) {
    set_cover_instance inst = set_cover_from_json(read_json_file(red_instance));
    reduction_output red;
    try {
      if (red_construction == "w2")
        red = cover_attack_instance(inst);
      else if (red_construction == "exactcover")
        red = exact_cover_attack_instance(inst);
      else
        red = hub_gadget_attack_instance(inst, red_gadget);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what());  // instance fails the construction's shape
    }
    std::ostringstream edges;
    red.g.serialize(edges);
    if (go.output.empty()) {
      if (go.format == "csv") {
        std::cout << edges.str();
      } else {
        nlohmann::json j = reduction_summary_json(red);
        j["roles"] = roles_json(red);
        std::cout << j.dump(2) << '\n';
      }
    } else {
      open_artifact(go.output + ".edges") << edges.str();
      open_artifact(go.output + ".roles.json") << roles_json(red).dump(2) << '\n';
      open_artifact(go.output + ".thresholds.json")
          << reduction_summary_json(red).dump(2) << '\n';
    }
    return 0;
  }

  if (cmd_sw->parsed()) {
    experiment_config cfg = experiment_config_from_json(read_json_file(sw_config));
    if (go.threads > 1) cfg.threads = go.threads;
    if (go.seed != 0) cfg.seed = go.seed;
    std::vector<sweep_row> rows = run_sweep(cfg);
    std::ostringstream csv;
    sweep_csv(csv, rows);
    if (go.output.empty()) {
      if (go.format == "json")
        std::cout << sweep_deletions_json(rows).dump(2) << '\n';
      else
        std::cout << csv.str();
    } else {
      open_artifact(go.output + ".sweep.csv") << csv.str();
      open_artifact(go.output + ".deletions.json")
          << sweep_deletions_json(rows).dump(2) << '\n';
    }
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const corefall::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const corefall::parse_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::ParseError& e) {
    // post-parse usage violations (missing --input, conflicting flags)
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
