#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace corefall {

// malformed input data (edge lists, candidate files, config files, ...)
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct parse_stats {
  std::size_t duplicate_edges = 0;  // repeated pairs collapsed to one edge
  std::size_t self_loops = 0;       // u-u lines dropped
};

// Undirected simple graph over the dense id space [0, n). Vertex deletion
// tombstones the id instead of renumbering, so per-vertex arrays (coreness
// before/after an attack, notably) stay index-aligned across the deletion.
// Tombstoned vertices keep their label but lose all incident edges and are
// excluded from every count except vertex_count().
class graph {
 public:
  graph() = default;

  // Build from 0-based endpoint pairs; self-loops and duplicates are
  // silently dropped (use from_edge_list for ingestion stats).
  static graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    graph g;
    g.adj_.assign(n, {});
    g.removed_.assign(n, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) continue;
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    g.dedup_and_count();
    return g;
  }

  // Whitespace-separated "u v" lines; '#' starts a comment; blank lines ok.
  // Vertex names are arbitrary tokens, mapped to ids in first-appearance
  // order and kept as labels.
  static graph from_edge_list(std::istream& in, parse_stats* stats = nullptr) {
    graph g;
    std::unordered_map<std::string, int> id_of;
    std::vector<std::pair<int, int>> edges;
    parse_stats local;
    std::string line;
    std::size_t lineno = 0;
    auto intern = [&](const std::string& tok) {
      auto it = id_of.find(tok);
      if (it != id_of.end()) return it->second;
      int id = static_cast<int>(g.labels_.size());
      id_of.emplace(tok, id);
      g.labels_.push_back(tok);
      return id;
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.resize(hash);
      std::istringstream ls(line);
      std::string a, b, extra;
      if (!(ls >> a)) continue;  // blank or comment-only
      if (!(ls >> b) || (ls >> extra))
        throw parse_error("line " + std::to_string(lineno) +
                          ": expected two vertex tokens");
      int u = intern(a), v = intern(b);
      if (u == v) {
        ++local.self_loops;
        continue;
      }
      edges.emplace_back(u, v);
    }
    int n = static_cast<int>(g.labels_.size());
    g.adj_.assign(n, {});
    g.removed_.assign(n, 0);
    for (auto [u, v] : edges) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    local.duplicate_edges = g.dedup_and_count();
    if (stats) *stats = local;
    return g;
  }

  static graph from_edge_list_file(const std::string& path,
                                   parse_stats* stats = nullptr) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return from_edge_list(in, stats);
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  int live_count() const {
    int n = 0;
    for (char r : removed_)
      if (!r) ++n;
    return n;
  }

  std::size_t edge_count() const { return m_; }

  bool is_live(int v) const { return !removed_[v]; }

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // sorted ascending; contains live vertices only
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool has_labels() const { return !labels_.empty(); }

  // label if the graph was read from a named edge list, else the id itself
  std::string label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }

  std::unordered_map<std::string, int> label_index() const {
    std::unordered_map<std::string, int> idx;
    for (int v = 0; v < vertex_count(); ++v) idx.emplace(label(v), v);
    return idx;
  }

  std::vector<int> live_vertices() const {
    std::vector<int> vs;
    vs.reserve(adj_.size());
    for (int v = 0; v < vertex_count(); ++v)
      if (!removed_[v]) vs.push_back(v);
    return vs;
  }

  // Copy with the given vertices tombstoned. Ids already removed are
  // accepted (no-op); duplicates in the list are fine.
  graph without(const std::vector<int>& to_delete) const {
    graph g = *this;
    for (int v : to_delete) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("delete: vertex id out of range");
      g.removed_[v] = 1;
    }
    std::size_t m2 = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.removed_[v]) {
        g.adj_[v].clear();
        continue;
      }
      auto& nb = g.adj_[v];
      nb.erase(std::remove_if(nb.begin(), nb.end(),
                              [&](int u) { return g.removed_[u]; }),
               nb.end());
      m2 += nb.size();
    }
    g.m_ = m2 / 2;
    return g;
  }

  // "u v" per line, endpoints sorted within the line, lines sorted; a graph
  // written and re-read round-trips to the same structure
  void serialize(std::ostream& out) const {
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[u])
        if (u < v) out << u << ' ' << v << '\n';
  }

  bool operator==(const graph& o) const {
    return adj_ == o.adj_ && removed_ == o.removed_;
  }

 private:
  // sort adjacency, drop duplicate entries, recount m; returns the number
  // of duplicate input pairs removed
  std::size_t dedup_and_count() {
    std::size_t before = 0, after = 0;
    for (auto& nb : adj_) {
      before += nb.size();
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      after += nb.size();
    }
    m_ = after / 2;
    return (before - after) / 2;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<char> removed_;
  std::vector<std::string> labels_;
  std::size_t m_ = 0;
};

inline graph delete_vertices(const graph& g, const std::vector<int>& b) {
  return g.without(b);
}

}  // namespace corefall
