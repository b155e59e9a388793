#include "spantree/graph.hpp"

#include <stdexcept>
#include <string>

namespace spantree {

void Graph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " out of range for graph on " +
                            std::to_string(adjacency_.size()) + " vertices");
  }
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].insert(v).second) {
    adjacency_[v].insert(u);
    ++edge_count_;
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].contains(v);
}

const std::set<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) result.emplace_back(u, v);
    }
  }
  return result;
}

bool Graph::is_connected() const {
  const std::size_t n = adjacency_.size();
  if (n == 0) throw std::invalid_argument("is_connected: graph has no vertices");
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::vector<std::size_t> Graph::conjugate_degree_counts() const {
  const std::size_t n = adjacency_.size();
  std::vector<std::size_t> by_degree(n + 1, 0);
  for (const auto& nbrs : adjacency_) ++by_degree[nbrs.size()];
  std::vector<std::size_t> counts(n, 0);
  std::size_t running = 0;
  for (std::size_t i = n; i >= 1; --i) {
    running += by_degree[i];
    counts[i - 1] = running;
  }
  return counts;
}

IntegerMatrix Graph::laplacian() const {
  const std::size_t n = adjacency_.size();
  IntegerMatrix m(n);
  for (VertexId u = 0; u < n; ++u) {
    m.at(u, u) = static_cast<unsigned long>(adjacency_[u].size());
    for (VertexId v : adjacency_[u]) m.at(u, v) = -1;
  }
  return m;
}

}  // namespace spantree
