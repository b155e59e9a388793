#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

/// A creation sequence: '*' followed by characters in {0,1}.  Character i
/// describes vertex i: '1' arrives adjacent to every existing vertex
/// (dominating), '0' arrives isolated (independent).
class CreationSequence {
 public:
  /// Validates and wraps `text` (surrounding whitespace ignored).  Throws
  /// std::invalid_argument for an empty string, a first character other
  /// than '*', or any later character outside {0,1}.
  static CreationSequence parse(std::string_view text);

  std::size_t size() const { return chars_.size(); }
  char at(std::size_t i) const { return chars_[i]; }
  const std::string& chars() const { return chars_; }

  /// The built graph is connected exactly when n == 1 or the last
  /// character is '1'.
  bool describes_connected_graph() const {
    return chars_.size() == 1 || chars_.back() == '1';
  }

  friend bool operator==(const CreationSequence&, const CreationSequence&) = default;

 private:
  explicit CreationSequence(std::string chars) : chars_(std::move(chars)) {}
  std::string chars_;
};

enum class VertexClass { initial, dominating, independent };

/// A threshold graph together with its creation sequence.  Vertex ids equal
/// creation indices, so the type cannot hold a non-threshold graph.
class ThresholdGraph {
 public:
  explicit ThresholdGraph(CreationSequence sequence);

  const Graph& graph() const { return graph_; }
  const CreationSequence& sequence() const { return sequence_; }
  std::size_t vertex_count() const { return graph_.vertex_count(); }

  VertexClass class_of(VertexId v) const;
  bool is_dominating(VertexId v) const { return class_of(v) == VertexClass::dominating; }
  bool is_independent(VertexId v) const { return class_of(v) == VertexClass::independent; }

  /// The '*' vertex; its neighborhood is exactly the dominating set.
  VertexId initial_vertex() const { return 0; }

  /// Dominating set U / independent set Z, ascending creation index.
  const std::vector<VertexId>& dominating_vertices() const { return dominating_; }
  const std::vector<VertexId>& independent_vertices() const { return independent_; }

  bool is_connected() const { return sequence_.describes_connected_graph(); }

 private:
  CreationSequence sequence_;
  Graph graph_;
  std::vector<VertexId> dominating_;
  std::vector<VertexId> independent_;
};

inline ThresholdGraph build_threshold(const CreationSequence& sequence) {
  return ThresholdGraph(sequence);
}

/// Result of recognizing a threshold graph: the sequence plus the
/// relabeling that realizes the isomorphism.  creation_order[i] is the
/// input vertex that received creation index i.
struct ThresholdRecognition {
  CreationSequence sequence;
  std::vector<VertexId> creation_order;
};

/// Reverse construction: repeatedly strip a dominating vertex (recording
/// '1') or, failing that, an isolated vertex (recording '0'); a graph that
/// survives to a single vertex is threshold.  Returns nullopt otherwise.
/// Ties pick the highest vertex id, so a graph produced by
/// build_threshold recognizes to its own sequence with the identity
/// relabeling.
std::optional<ThresholdRecognition> recognize_threshold(const Graph& g);

/// Integer vertex weights and threshold realizing a creation sequence:
/// u ~ v in the built graph iff phi[u] + phi[v] >= alpha.
struct WeightAssignment {
  std::vector<std::int64_t> phi;  // indexed by creation index
  std::int64_t alpha = 0;

  bool adjacent(VertexId u, VertexId v) const {
    return u != v && phi[u] + phi[v] >= alpha;
  }
};

WeightAssignment assign_weights(const CreationSequence& sequence);

/// Vertices in nondecreasing degree order arranged so the independent set
/// is a prefix, the initial vertex sits between, and the dominating set is
/// the suffix.  Degree ties are broken independent-first, then by creation
/// index.
std::vector<VertexId> degree_sorted_labels(const ThresholdGraph& t);

}  // namespace spantree
