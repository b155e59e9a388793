#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "spantree/matrix.hpp"

namespace spantree {

/// Vertices are identified by their creation position: 0 is the
/// first-created vertex, so "created later" is an ordinary < comparison.
using VertexId = std::size_t;

/// Undirected edge, stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Labeled simple undirected graph over vertices 0..n-1.  Adjacency is kept
/// in sorted sets so every traversal in the library is deterministic.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Inserts the undirected edge {u,v}; re-adding an existing edge is a
  /// no-op.  Self-loops and out-of-range ids throw.
  void add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  const std::set<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  /// All edges as (min,max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  /// Entry i-1 holds |{v : deg(v) >= i}| for i = 1..n; nonincreasing.
  std::vector<std::size_t> conjugate_degree_counts() const;

  /// Integer Laplacian: degree diagonal, -1 per adjacency, 0 elsewhere.
  IntegerMatrix laplacian() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::set<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace spantree
