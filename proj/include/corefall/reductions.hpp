#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "corefall/graph.hpp"

namespace corefall {

// Set-cover instance: universe {1..universe_size}, a family of sets, and a
// target cover size. Feeds the hardness-construction generators below.
struct set_cover_instance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;
  int target = 0;

  void validate() const {
    if (universe_size < 1) throw std::invalid_argument("universe must be nonempty");
    if (sets.empty()) throw std::invalid_argument("need at least one set");
    if (target < 1 || target > static_cast<int>(sets.size()))
      throw std::invalid_argument("cover target out of range");
    for (const auto& s : sets) {
      if (s.empty()) throw std::invalid_argument("sets must be nonempty");
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > universe_size)
          throw std::invalid_argument("set element outside the universe");
        if (i > 0 && s[i] <= s[i - 1])
          throw std::invalid_argument("sets must be sorted and duplicate-free");
      }
    }
  }

  // the restricted shape the exact-cover construction needs
  bool exact_cover_shape() const {
    for (const auto& s : sets)
      if (s.size() != 3) return false;
    std::vector<int> occurrences(universe_size + 1, 0);
    for (const auto& s : sets)
      for (int e : s) ++occurrences[e];
    for (int e = 1; e <= universe_size; ++e)
      if (occurrences[e] != 2) return false;
    return true;
  }
};

// A generated attack instance with its certificate: the graph, the
// candidate pool, the budget, and the objective value that separates
// yes-instances from no-instances.
struct reduction_output {
  graph g;
  std::vector<int> candidates;
  std::size_t budget = 0;
  std::int64_t yes_threshold = 0;
  std::vector<std::string> vertex_roles;
};

namespace detail {

inline void add_clique(std::vector<std::pair<int, int>>& edges, int first,
                       int size) {
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      edges.emplace_back(first + a, first + b);
}

inline std::vector<std::vector<char>> membership_table(
    const set_cover_instance& inst) {
  std::vector<std::vector<char>> member(
      inst.sets.size(), std::vector<char>(inst.universe_size + 1, 0));
  for (std::size_t i = 0; i < inst.sets.size(); ++i)
    for (int e : inst.sets[i]) member[i][e] = 1;
  return member;
}

}  // namespace detail

// Covering instance -> attack instance. One 4-clique per set with an
// attackable hub P_{i,1}; one m-cycle per element whose node Q_{j,i} leans
// on set i's hub when the element belongs to that set and on its own
// 4-clique anchor R_{j,1} otherwise. Every vertex starts in the 3-core.
// Deleting the hubs of a cover unravels every element cycle, so the
// objective reaches 3 survivors per deleted clique plus all m*n cycle
// vertices exactly when a cover of the target size exists.
inline reduction_output cover_attack_instance(const set_cover_instance& inst) {
  inst.validate();
  int m = static_cast<int>(inst.sets.size());
  int n = inst.universe_size;
  if (m < 3)
    throw std::invalid_argument("element cycles need at least 3 sets");
  auto member = detail::membership_table(inst);

  int p_base = 0, q_base = 4 * m, r_base = 4 * m + n * m;
  int total = 4 * m + n * m + 4 * n;
  std::vector<std::pair<int, int>> edges;
  auto P = [&](int i, int t) { return p_base + 4 * i + t; };
  auto Q = [&](int j, int i) { return q_base + m * j + i; };
  auto R = [&](int j, int t) { return r_base + 4 * j + t; };

  for (int i = 0; i < m; ++i) detail::add_clique(edges, P(i, 0), 4);
  for (int j = 0; j < n; ++j) detail::add_clique(edges, R(j, 0), 4);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      edges.emplace_back(Q(j, i), Q(j, (i + 1) % m));
      if (member[i][j + 1])
        edges.emplace_back(P(i, 0), Q(j, i));
      else
        edges.emplace_back(Q(j, i), R(j, 0));
    }

  reduction_output out;
  out.g = graph::from_edges(total, edges);
  for (int i = 0; i < m; ++i) out.candidates.push_back(P(i, 0));
  out.budget = static_cast<std::size_t>(inst.target);
  out.yes_threshold = 3ll * inst.target + 1ll * m * n;
  out.vertex_roles.resize(total);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < 4; ++t)
      out.vertex_roles[P(i, t)] =
          "P_" + std::to_string(i + 1) + "_" + std::to_string(t + 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      out.vertex_roles[Q(j, i)] =
          "Q_" + std::to_string(j + 1) + "_" + std::to_string(i + 1);
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < 4; ++t)
      out.vertex_roles[R(j, t)] =
          "R_" + std::to_string(j + 1) + "_" + std::to_string(t + 1);
  return out;
}

// Exact-cover variant: demands the restricted shape (3-element sets, every
// element in exactly two sets) and replaces each element cycle by a single
// edge between two slot vertices, one per occurrence, both leaning on a
// shared 4-clique anchor. Maximum degree lands at exactly 6 (set hubs:
// 3 clique edges + 3 occurrences). Cover found <=> both slots of every
// element unravel: threshold 3b + 2n.
inline reduction_output exact_cover_attack_instance(
    const set_cover_instance& inst) {
  inst.validate();
  if (!inst.exact_cover_shape())
    throw std::invalid_argument(
        "instance lacks the exact-cover shape (3-element sets, every element "
        "in exactly 2 sets)");
  int m = static_cast<int>(inst.sets.size());
  int n = inst.universe_size;
  // first/second containing set per element, by ascending set index
  std::vector<int> first_set(n + 1, -1), second_set(n + 1, -1);
  for (int i = 0; i < m; ++i)
    for (int e : inst.sets[i]) {
      if (first_set[e] < 0)
        first_set[e] = i;
      else
        second_set[e] = i;
    }

  int p_base = 0, q_base = 4 * m, r_base = 4 * m + 2 * n;
  int total = 4 * m + 2 * n + 4 * n;
  std::vector<std::pair<int, int>> edges;
  auto P = [&](int i, int t) { return p_base + 4 * i + t; };
  auto Q = [&](int j, int c) { return q_base + 2 * j + c; };
  auto R = [&](int j, int t) { return r_base + 4 * j + t; };

  for (int i = 0; i < m; ++i) detail::add_clique(edges, P(i, 0), 4);
  for (int j = 0; j < n; ++j) detail::add_clique(edges, R(j, 0), 4);
  for (int j = 0; j < n; ++j) {
    edges.emplace_back(Q(j, 0), Q(j, 1));
    edges.emplace_back(P(first_set[j + 1], 0), Q(j, 0));
    edges.emplace_back(P(second_set[j + 1], 0), Q(j, 1));
    edges.emplace_back(Q(j, 0), R(j, 0));
    edges.emplace_back(Q(j, 1), R(j, 0));
  }

  reduction_output out;
  out.g = graph::from_edges(total, edges);
  for (int i = 0; i < m; ++i) out.candidates.push_back(P(i, 0));
  out.budget = static_cast<std::size_t>(inst.target);
  out.yes_threshold = 3ll * inst.target + 2ll * n;
  out.vertex_roles.resize(total);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < 4; ++t)
      out.vertex_roles[P(i, t)] =
          "P_" + std::to_string(i + 1) + "_" + std::to_string(t + 1);
  for (int j = 0; j < n; ++j)
    for (int c = 0; c < 2; ++c)
      out.vertex_roles[Q(j, c)] =
          "Q_" + std::to_string(j + 1) + "_" + std::to_string(c + 1);
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < 4; ++t)
      out.vertex_roles[R(j, t)] =
          "R_" + std::to_string(j + 1) + "_" + std::to_string(t + 1);
  return out;
}

// Hub-and-gadget variant: element cycles as in cover_attack_instance, but
// all non-membership edges converge on a single unprotected hub R backed by
// a 3-regular gadget T of t vertices (two cycles of t/2 joined by a
// matching; the first matching pair is wired to R instead of each other, so
// T has no 3-core of its own and collapses once R goes). A full cover
// therefore drags down every cycle, then R, then all of T:
// threshold 3r + mn + 1 + t. Any uncovered element keeps a live cycle
// leaning on R, which keeps R and T standing.
inline reduction_output hub_gadget_attack_instance(
    const set_cover_instance& inst, int gadget_size) {
  inst.validate();
  int m = static_cast<int>(inst.sets.size());
  int n = inst.universe_size;
  if (m < 3)
    throw std::invalid_argument("element cycles need at least 3 sets");
  if (gadget_size < 6 || gadget_size % 2 != 0)
    throw std::invalid_argument("gadget size must be even and at least 6");
  auto member = detail::membership_table(inst);
  std::int64_t non_memberships = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (!member[i][j + 1]) ++non_memberships;
  if (non_memberships == 0)
    throw std::invalid_argument(
        "hub needs at least one non-membership to reach degree 3");

  int p_base = 0, q_base = 4 * m;
  int hub = 4 * m + n * m;
  int half = gadget_size / 2;
  int a_base = hub + 1, b_base = hub + 1 + half;
  int total = hub + 1 + gadget_size;
  std::vector<std::pair<int, int>> edges;
  auto P = [&](int i, int t) { return p_base + 4 * i + t; };
  auto Q = [&](int j, int i) { return q_base + m * j + i; };

  for (int i = 0; i < m; ++i) detail::add_clique(edges, P(i, 0), 4);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      edges.emplace_back(Q(j, i), Q(j, (i + 1) % m));
      if (member[i][j + 1])
        edges.emplace_back(P(i, 0), Q(j, i));
      else
        edges.emplace_back(Q(j, i), hub);
    }
  for (int k = 0; k < half; ++k) {
    edges.emplace_back(a_base + k, a_base + (k + 1) % half);
    edges.emplace_back(b_base + k, b_base + (k + 1) % half);
    if (k > 0) edges.emplace_back(a_base + k, b_base + k);
  }
  edges.emplace_back(a_base, hub);
  edges.emplace_back(b_base, hub);

  reduction_output out;
  out.g = graph::from_edges(total, edges);
  for (int i = 0; i < m; ++i) out.candidates.push_back(P(i, 0));
  out.budget = static_cast<std::size_t>(inst.target);
  out.yes_threshold =
      3ll * inst.target + 1ll * m * n + 1 + gadget_size;
  out.vertex_roles.resize(total);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < 4; ++t)
      out.vertex_roles[P(i, t)] =
          "P_" + std::to_string(i + 1) + "_" + std::to_string(t + 1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i)
      out.vertex_roles[Q(j, i)] =
          "Q_" + std::to_string(j + 1) + "_" + std::to_string(i + 1);
  out.vertex_roles[hub] = "R";
  for (int k = 0; k < half; ++k) {
    out.vertex_roles[a_base + k] = "T_A_" + std::to_string(k);
    out.vertex_roles[b_base + k] = "T_B_" + std::to_string(k);
  }
  return out;
}

}  // namespace corefall
