#include "spantree/threshold.hpp"

#include <algorithm>
#include <stdexcept>

namespace spantree {

namespace {

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t' || text.front() == '\r' ||
                           text.front() == '\n')) {
    text.remove_prefix(1);
  }
  while (!text.empty() &&
         (text.back() == ' ' || text.back() == '\t' || text.back() == '\r' || text.back() == '\n')) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

CreationSequence CreationSequence::parse(std::string_view text) {
  const std::string_view body = trimmed(text);
  if (body.empty()) throw std::invalid_argument("creation sequence is empty");
  if (body.front() != '*') {
    throw std::invalid_argument("creation sequence must start with '*': \"" + std::string(body) +
                                "\"");
  }
  for (std::size_t i = 1; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw std::invalid_argument("creation sequence character " + std::to_string(i) +
                                  " must be '0' or '1'");
    }
  }
  return CreationSequence(std::string(body));
}

ThresholdGraph::ThresholdGraph(CreationSequence sequence)
    : sequence_(std::move(sequence)), graph_(sequence_.size()) {
  for (VertexId v = 1; v < sequence_.size(); ++v) {
    if (sequence_.at(v) == '1') {
      dominating_.push_back(v);
      for (VertexId u = 0; u < v; ++u) graph_.add_edge(u, v);
    } else {
      independent_.push_back(v);
    }
  }
}

VertexClass ThresholdGraph::class_of(VertexId v) const {
  switch (sequence_.at(v)) {
    case '*':
      return VertexClass::initial;
    case '1':
      return VertexClass::dominating;
    default:
      return VertexClass::independent;
  }
}

std::optional<ThresholdRecognition> recognize_threshold(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return std::nullopt;

  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  std::size_t remaining = n;

  std::string reversed_chars;
  std::vector<VertexId> removal;
  reversed_chars.reserve(n);
  removal.reserve(n);

  while (remaining > 1) {
    // A dominating and an isolated vertex cannot coexist, so the recorded
    // character is forced; among equals the highest id is removed.
    VertexId pick = n;
    char recorded = '1';
    for (VertexId v = n; v-- > 0;) {
      if (alive[v] && degree[v] == remaining - 1) {
        pick = v;
        break;
      }
    }
    if (pick == n) {
      recorded = '0';
      for (VertexId v = n; v-- > 0;) {
        if (alive[v] && degree[v] == 0) {
          pick = v;
          break;
        }
      }
    }
    if (pick == n) return std::nullopt;

    alive[pick] = 0;
    --remaining;
    for (VertexId u : g.neighbors(pick)) {
      if (alive[u]) --degree[u];
    }
    reversed_chars.push_back(recorded);
    removal.push_back(pick);
  }

  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) removal.push_back(v);
  }
  reversed_chars.push_back('*');

  std::string chars(reversed_chars.rbegin(), reversed_chars.rend());
  std::vector<VertexId> creation_order(removal.rbegin(), removal.rend());
  return ThresholdRecognition{CreationSequence::parse(chars), std::move(creation_order)};
}

WeightAssignment assign_weights(const CreationSequence& sequence) {
  const std::size_t n = sequence.size();
  WeightAssignment assignment;
  assignment.alpha = 1;
  assignment.phi.reserve(n);
  assignment.phi.push_back(0);
  std::int64_t lowest = 0;
  std::int64_t highest = 0;
  for (std::size_t i = 1; i < n; ++i) {
    // A new dominating vertex clears the threshold even against the
    // lowest weight; a new independent vertex stays below it even against
    // the highest.
    const std::int64_t w =
        sequence.at(i) == '1' ? assignment.alpha - lowest : assignment.alpha - highest - 1;
    assignment.phi.push_back(w);
    lowest = std::min(lowest, w);
    highest = std::max(highest, w);
  }
  return assignment;
}

std::vector<VertexId> degree_sorted_labels(const ThresholdGraph& t) {
  const std::size_t n = t.vertex_count();
  std::vector<VertexId> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = v;
  auto rank = [&](VertexId v) {
    switch (t.class_of(v)) {
      case VertexClass::independent:
        return 0;
      case VertexClass::initial:
        return 1;
      default:
        return 2;
    }
  };
  std::sort(labels.begin(), labels.end(), [&](VertexId a, VertexId b) {
    const std::size_t da = t.graph().degree(a);
    const std::size_t db = t.graph().degree(b);
    if (da != db) return da < db;
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return a < b;
  });
  return labels;
}

}  // namespace spantree
