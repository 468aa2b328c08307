#pragma once

#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corefall/core.hpp"
#include "corefall/graph.hpp"
#include "corefall/objective.hpp"
#include "corefall/reductions.hpp"
#include "corefall/resilience.hpp"

namespace corefall {

using nlohmann::json;

inline json attack_to_json(const attack_result& r, const graph& g) {
  json j;
  j["B"] = r.deleted;
  j["f"] = r.f;
  j["F"] = r.disruption;
  j["affected"] = r.affected;
  if (r.optimal) j["optimal"] = true;
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (int v : r.deleted) labels.push_back(g.label(v));
    j["B_labels"] = labels;
  }
  return j;
}

// step,vertex,f_cum,F_cum rows in selection order
inline void attack_steps_csv(std::ostream& out, const attack_result& r,
                             const graph& g) {
  int n0 = g.live_count();
  out << "step,vertex,f_cum,F_cum\n";
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    double frac = n0 > 0 ? static_cast<double>(r.steps[i].f_after) / n0 : 0.0;
    out << (i + 1) << ',' << g.label(r.steps[i].vertex) << ','
        << r.steps[i].f_after << ',' << std::setprecision(12) << frac << '\n';
  }
}

inline void coreness_csv(std::ostream& out, const graph& g,
                         const core_decomposition& d) {
  out << "vertex,coreness\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.is_live(v)) out << g.label(v) << ',' << d.coreness[v] << '\n';
}

inline json decompose_summary_json(const graph& g,
                                   const core_decomposition& d) {
  json j;
  j["n"] = g.live_count();
  j["m"] = g.edge_count();
  j["degeneracy"] = d.degeneracy;
  j["core_size_histogram"] = d.size_histogram();
  return j;
}

inline void curve_csv(std::ostream& out, const resilience_curve& c) {
  out << "alpha,value\n" << std::setprecision(12);
  for (std::size_t i = 0; i < c.alphas.size(); ++i)
    out << c.alphas[i] << ',' << c.values[i] << '\n';
}

inline json curve_summary_json(const resilience_curve& c) {
  json j;
  j["auc"] = c.auc;
  j["score"] = c.score;
  return j;
}

// {"n":4,"sets":[[1,2],[1,3,4],[3]],"r":2}
inline set_cover_instance set_cover_from_json(const json& j) {
  set_cover_instance inst;
  try {
    inst.universe_size = j.at("n").get<int>();
    inst.sets = j.at("sets").get<std::vector<std::vector<int>>>();
    inst.target = j.at("r").get<int>();
  } catch (const json::exception& e) {
    throw parse_error(std::string("set-cover instance: ") + e.what());
  }
  for (auto& s : inst.sets) std::sort(s.begin(), s.end());
  return inst;
}

inline json reduction_summary_json(const reduction_output& red) {
  json j;
  j["n"] = red.g.vertex_count();
  j["m"] = red.g.edge_count();
  j["candidates"] = red.candidates;
  j["budget"] = red.budget;
  j["yes_threshold"] = red.yes_threshold;
  return j;
}

inline json roles_json(const reduction_output& red) {
  json j = json::object();
  for (std::size_t v = 0; v < red.vertex_roles.size(); ++v)
    j[std::to_string(v)] = red.vertex_roles[v];
  return j;
}

}  // namespace corefall
