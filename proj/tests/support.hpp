#pragma once

// Shared fixtures and generators for the test suites.  The ten-vertex
// threshold fixture and the ten-vertex bipartite fixture are written in
// their published vertex labels and translated to creation indices through
// the lookup tables below, so the fixtures stay readable against the
// reference drawings.

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "spantree/counting.hpp"
#include "spantree/difference.hpp"
#include "spantree/graph.hpp"
#include "spantree/rng.hpp"
#include "spantree/threshold.hpp"

namespace spantree::testing {

inline const char* kTenVertexSequence = "*010100101";
inline const char* kTenVertexBipartiteSequence = "0010100101";

/// Degree-sorted label v_i (1-based) -> creation index, for the threshold
/// fixture built from "*010100101".
inline VertexId tv(int paper_label) {
  static constexpr std::array<VertexId, 11> map{~0ull, 8, 6, 5, 3, 1, 0, 2, 4, 7, 9};
  return map[static_cast<std::size_t>(paper_label)];
}

/// x_i / y_i (1-based within side) -> creation index, for the difference
/// fixture built from "0010100101".
inline VertexId dx(int label) {
  static constexpr std::array<VertexId, 5> map{~0ull, 2, 4, 7, 9};
  return map[static_cast<std::size_t>(label)];
}
inline VertexId dy(int label) {
  static constexpr std::array<VertexId, 7> map{~0ull, 8, 6, 5, 3, 1, 0};
  return map[static_cast<std::size_t>(label)];
}

/// The 22 edges of the threshold fixture, in its published labels.
inline std::vector<Edge> ten_vertex_edges() {
  static const std::vector<std::pair<int, int>> published = {
      {7, 5}, {7, 6}, {8, 4},  {8, 7},  {8, 5},  {8, 6},  {9, 6},  {9, 5},
      {9, 7}, {9, 4}, {9, 8},  {9, 3},  {9, 2},  {10, 6}, {10, 5}, {10, 7},
      {10, 4}, {10, 8}, {10, 3}, {10, 2}, {10, 9}, {10, 1}};
  std::vector<Edge> edges;
  edges.reserve(published.size());
  for (const auto& [a, b] : published) edges.push_back(make_edge(tv(a), tv(b)));
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline Graph ten_vertex_graph() {
  Graph g(10);
  for (const Edge& e : ten_vertex_edges()) g.add_edge(e.first, e.second);
  return g;
}

/// The 16 edges of the difference fixture, published as (x_i, y_j) pairs.
inline std::vector<Edge> ten_vertex_bipartite_edges() {
  static const std::vector<std::pair<int, int>> published = {
      {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 5}, {3, 4},
      {3, 3}, {3, 2}, {4, 6}, {4, 5}, {4, 4}, {4, 3}, {4, 2}, {4, 1}};
  std::vector<Edge> edges;
  edges.reserve(published.size());
  for (const auto& [x, y] : published) edges.push_back(make_edge(dx(x), dy(y)));
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (VertexId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

inline CreationSequence random_sequence(Rng& rng, std::size_t n, double p = 0.5) {
  std::string chars = "*";
  for (std::size_t i = 1; i < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  return CreationSequence::parse(chars);
}

inline CreationSequence random_connected_sequence(Rng& rng, std::size_t n, double p = 0.5) {
  std::string chars = "*";
  for (std::size_t i = 1; i + 1 < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  if (n >= 2) chars += '1';
  return CreationSequence::parse(chars);
}

inline BipartiteCreationSequence random_bipartite_sequence(Rng& rng, std::size_t n,
                                                           double p = 0.5) {
  std::string chars;
  for (std::size_t i = 0; i < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  return BipartiteCreationSequence::parse(chars);
}

inline BipartiteCreationSequence random_connected_bipartite_sequence(Rng& rng, std::size_t n,
                                                                     double p = 0.5) {
  std::string chars = "0";
  for (std::size_t i = 1; i + 1 < n; ++i) chars += rng.bernoulli(p) ? '1' : '0';
  if (n >= 2) chars += '1';
  return BipartiteCreationSequence::parse(chars);
}

/// Independent spanning-tree check by union-find: n-1 host edges, no cycle.
inline bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges) {
  const std::size_t n = g.vertex_count();
  if (edges.size() + 1 != n) return false;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n || !g.has_edge(e.first, e.second)) return false;
    const std::size_t a = find(e.first);
    const std::size_t b = find(e.second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

/// Relabels the edges of a built graph through creation_order and compares
/// the result with `original` as an edge set.
inline bool isomorphic_via(const Graph& built, const std::vector<VertexId>& creation_order,
                           const Graph& original) {
  if (built.vertex_count() != original.vertex_count()) return false;
  if (built.edge_count() != original.edge_count()) return false;
  for (const Edge& e : built.edges()) {
    if (!original.has_edge(creation_order[e.first], creation_order[e.second])) return false;
  }
  return true;
}

/// Degree-sorted neighborhood identities for threshold graphs: with the
/// independent set as prefix and m = |Z|, N(v_i) = {deg >= n-i} for
/// i <= m and N[v_i] = {deg >= n-i+1} for i >= m+2 (i 1-based).
inline bool neighborhood_identities_hold(const ThresholdGraph& t) {
  const std::size_t n = t.vertex_count();
  const auto labels = degree_sorted_labels(t);
  const std::size_t m = t.independent_vertices().size();
  if (labels[m] != t.initial_vertex()) return false;

  auto degree_at_least = [&](std::size_t bound) {
    std::set<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
      if (t.graph().degree(v) >= bound) out.insert(v);
    }
    return out;
  };
  for (std::size_t i = 1; i <= m; ++i) {
    if (!t.is_independent(labels[i - 1])) return false;
    const auto& nbrs = t.graph().neighbors(labels[i - 1]);
    if (std::set<VertexId>(nbrs.begin(), nbrs.end()) != degree_at_least(n - i)) return false;
  }
  for (std::size_t i = m + 2; i <= n; ++i) {
    if (!t.is_dominating(labels[i - 1])) return false;
    const auto& nbrs = t.graph().neighbors(labels[i - 1]);
    std::set<VertexId> closed(nbrs.begin(), nbrs.end());
    closed.insert(labels[i - 1]);
    if (closed != degree_at_least(n - i + 1)) return false;
  }
  return true;
}

/// Side-by-side identities for difference graphs: with each side sorted by
/// degree, N(x_i) = {y : deg(y) >= |X|-i+1} and N(y_i) = {x : deg(x) >=
/// |Y|-i+1}.
inline bool side_identities_hold(const DifferenceGraph& h) {
  const Graph& g = h.graph();
  auto sorted_side = [&](const std::vector<VertexId>& side) {
    std::vector<VertexId> out = side;
    std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    });
    return out;
  };
  auto at_least = [&](const std::vector<VertexId>& side, std::size_t bound) {
    std::set<VertexId> out;
    for (VertexId v : side) {
      if (g.degree(v) >= bound) out.insert(v);
    }
    return out;
  };
  const auto xs = sorted_side(h.side_x());
  const auto ys = sorted_side(h.side_y());
  for (std::size_t i = 1; i <= xs.size(); ++i) {
    const auto& nbrs = g.neighbors(xs[i - 1]);
    if (std::set<VertexId>(nbrs.begin(), nbrs.end()) != at_least(h.side_y(), xs.size() - i + 1)) {
      return false;
    }
  }
  for (std::size_t i = 1; i <= ys.size(); ++i) {
    const auto& nbrs = g.neighbors(ys[i - 1]);
    if (std::set<VertexId>(nbrs.begin(), nbrs.end()) != at_least(h.side_x(), ys.size() - i + 1)) {
      return false;
    }
  }
  return true;
}

/// All sequences of length n with a fixed first character, for exhaustive
/// sweeps.
inline std::vector<std::string> all_tail_strings(std::size_t tail_length) {
  std::vector<std::string> out;
  const std::size_t total = std::size_t{1} << tail_length;
  out.reserve(total);
  for (std::size_t bits = 0; bits < total; ++bits) {
    std::string tail;
    for (std::size_t i = 0; i < tail_length; ++i) tail += (bits >> i) & 1 ? '1' : '0';
    out.push_back(tail);
  }
  return out;
}

}  // namespace spantree::testing
