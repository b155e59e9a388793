#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/threshold.hpp"

namespace spantree {

/// A bipartite creation sequence over {0,1}.  Character i describes vertex
/// i: '1' joins side X with edges to every vertex currently in Y, '0'
/// joins side Y isolated.
class BipartiteCreationSequence {
 public:
  static BipartiteCreationSequence parse(std::string_view text);

  std::size_t size() const { return chars_.size(); }
  char at(std::size_t i) const { return chars_[i]; }
  const std::string& chars() const { return chars_; }

  bool describes_connected_graph() const {
    return chars_.size() == 1 || (chars_.front() == '0' && chars_.back() == '1');
  }

  friend bool operator==(const BipartiteCreationSequence&,
                         const BipartiteCreationSequence&) = default;

 private:
  explicit BipartiteCreationSequence(std::string chars) : chars_(std::move(chars)) {}
  std::string chars_;
};

/// A difference graph (X, Y, E) with its bipartite creation sequence;
/// vertex ids equal creation indices.
class DifferenceGraph {
 public:
  explicit DifferenceGraph(BipartiteCreationSequence sequence);

  const Graph& graph() const { return graph_; }
  const BipartiteCreationSequence& sequence() const { return sequence_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  bool in_x(VertexId v) const { return sequence_.at(v) == '1'; }
  const std::vector<VertexId>& side_x() const { return side_x_; }
  const std::vector<VertexId>& side_y() const { return side_y_; }

  bool is_connected() const { return sequence_.describes_connected_graph(); }

 private:
  BipartiteCreationSequence sequence_;
  Graph graph_;
  std::vector<VertexId> side_x_;
  std::vector<VertexId> side_y_;
};

inline DifferenceGraph build_difference(const BipartiteCreationSequence& sequence) {
  return DifferenceGraph(sequence);
}

struct DifferenceRecognition {
  BipartiteCreationSequence sequence;
  std::vector<VertexId> creation_order;  // creation index -> input vertex
};

/// Reverse construction for a bipartite graph with the given (X, Y) split:
/// strip an X vertex adjacent to all remaining Y (recording '1', valid
/// also when Y is empty), else an isolated Y vertex (recording '0').
/// Returns nullopt when stuck.  Throws std::invalid_argument if (x, y)
/// fails to partition the vertices or an edge stays inside one side.
std::optional<DifferenceRecognition> recognize_difference(
    const Graph& g, const std::vector<VertexId>& x, const std::vector<VertexId>& y);

/// The threshold graph built from the same sequence with the leading '0'
/// replaced by '*'.  Its graph is the difference graph plus every edge
/// inside X, with vertex ids unchanged.  Throws std::invalid_argument when
/// the sequence does not start with '0'.
ThresholdGraph threshold_companion(const DifferenceGraph& h);

}  // namespace spantree
