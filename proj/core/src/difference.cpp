#include "spantree/difference.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

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

BipartiteCreationSequence BipartiteCreationSequence::parse(std::string_view text) {
  const std::string_view body = trimmed(text);
  if (body.empty()) throw std::invalid_argument("bipartite creation sequence is empty");
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw std::invalid_argument("bipartite creation sequence character " + std::to_string(i) +
                                  " must be '0' or '1'");
    }
  }
  return BipartiteCreationSequence(std::string(body));
}

DifferenceGraph::DifferenceGraph(BipartiteCreationSequence sequence)
    : sequence_(std::move(sequence)), graph_(sequence_.size()) {
  for (VertexId v = 0; v < sequence_.size(); ++v) {
    if (sequence_.at(v) == '1') {
      side_x_.push_back(v);
      for (VertexId u = 0; u < v; ++u) {
        if (sequence_.at(u) == '0') graph_.add_edge(u, v);
      }
    } else {
      side_y_.push_back(v);
    }
  }
}

std::optional<DifferenceRecognition> recognize_difference(const Graph& g,
                                                          const std::vector<VertexId>& x,
                                                          const std::vector<VertexId>& y) {
  const std::size_t n = g.vertex_count();
  if (x.size() + y.size() != n) {
    throw std::invalid_argument("recognize_difference: x and y must cover every vertex");
  }
  std::vector<int> side(n, -1);
  for (VertexId v : x) {
    if (v >= n || side[v] != -1) throw std::invalid_argument("recognize_difference: bad x side");
    side[v] = 1;
  }
  for (VertexId v : y) {
    if (v >= n || side[v] != -1) throw std::invalid_argument("recognize_difference: bad y side");
    side[v] = 0;
  }
  for (const Edge& e : g.edges()) {
    if (side[e.first] == side[e.second]) {
      throw std::invalid_argument("recognize_difference: edge inside one side");
    }
  }

  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  std::size_t remaining = n;
  std::size_t alive_y = y.size();

  std::string reversed_chars;
  std::vector<VertexId> removal;
  reversed_chars.reserve(n);
  removal.reserve(n);

  while (remaining > 0) {
    VertexId pick = n;
    char recorded = '1';
    // An X vertex adjacent to all remaining Y (vacuously when Y is empty)
    // goes first; otherwise an isolated Y vertex.
    for (VertexId v = n; v-- > 0;) {
      if (alive[v] && side[v] == 1 && degree[v] == alive_y) {
        pick = v;
        break;
      }
    }
    if (pick == n) {
      recorded = '0';
      for (VertexId v = n; v-- > 0;) {
        if (alive[v] && side[v] == 0 && degree[v] == 0) {
          pick = v;
          break;
        }
      }
    }
    if (pick == n) return std::nullopt;

    alive[pick] = 0;
    --remaining;
    if (side[pick] == 0) --alive_y;
    for (VertexId u : g.neighbors(pick)) {
      if (alive[u]) --degree[u];
    }
    reversed_chars.push_back(recorded);
    removal.push_back(pick);
  }

  std::string chars(reversed_chars.rbegin(), reversed_chars.rend());
  std::vector<VertexId> creation_order(removal.rbegin(), removal.rend());
  return DifferenceRecognition{BipartiteCreationSequence::parse(chars), std::move(creation_order)};
}

ThresholdGraph threshold_companion(const DifferenceGraph& h) {
  const std::string& chars = h.sequence().chars();
  if (chars.empty() || chars.front() != '0') {
    throw std::invalid_argument(
        "threshold_companion: defined only for sequences starting with '0'");
  }
  std::string companion = chars;
  companion.front() = '*';
  return build_threshold(CreationSequence::parse(companion));
}

}  // namespace spantree
