#include "spantree/counting.hpp"

#include <stdexcept>

namespace spantree {

TreeCount tau_threshold_formula(const ThresholdGraph& t) {
  const std::size_t n = t.vertex_count();
  const std::vector<std::size_t> counts = t.graph().conjugate_degree_counts();
  BigInt product = 1;
  for (std::size_t i = 1; i < n; ++i) product *= static_cast<unsigned long>(counts[i - 1]);
  return exact_div(product, BigInt(static_cast<unsigned long>(n)));
}

TreeCount tau_threshold_uz(const ThresholdGraph& t) {
  const std::size_t n = t.vertex_count();
  BigInt product = 1;
  for (VertexId u : t.dominating_vertices()) {
    product *= static_cast<unsigned long>(t.graph().degree(u) + 1);
  }
  for (VertexId z : t.independent_vertices()) {
    product *= static_cast<unsigned long>(t.graph().degree(z));
  }
  return exact_div(product, BigInt(static_cast<unsigned long>(n)));
}

TreeCount tau_difference(const DifferenceGraph& h) {
  const std::size_t n = h.vertex_count();
  if (n == 1) return 1;
  const std::size_t x_count = h.side_x().size();
  const std::size_t y_count = h.side_y().size();
  if (x_count == 0 || y_count == 0) return 0;

  const Graph& g = h.graph();
  auto side_conjugate_product = [&](const std::vector<VertexId>& side, std::size_t upto) {
    BigInt product = 1;
    for (std::size_t i = 1; i <= upto; ++i) {
      std::size_t count = 0;
      for (VertexId v : side) {
        if (g.degree(v) >= i) ++count;
      }
      product *= static_cast<unsigned long>(count);
    }
    return product;
  };

  const BigInt denominator =
      BigInt(static_cast<unsigned long>(x_count)) * static_cast<unsigned long>(y_count);

  // Conjugate-count form: Y counted up to |X|, X counted up to |Y|.
  const BigInt conjugate_form = exact_div(
      side_conjugate_product(h.side_y(), x_count) * side_conjugate_product(h.side_x(), y_count),
      denominator);

  BigInt degree_product = 1;
  for (VertexId v = 0; v < n; ++v) degree_product *= static_cast<unsigned long>(g.degree(v));
  const BigInt degree_form = exact_div(degree_product, denominator);

  if (conjugate_form != degree_form) {
    throw std::logic_error("tau_difference: conjugate-count and degree-product forms disagree (" +
                           conjugate_form.get_str() + " vs " + degree_form.get_str() + ")");
  }
  return degree_form;
}

TreeCount tau_kirchhoff(const Graph& g, VertexId removed) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("tau_kirchhoff: graph has no vertices");
  if (removed >= n) throw std::out_of_range("tau_kirchhoff: removed index out of range");
  if (n == 1) return 1;
  return abs(determinant(g.laplacian().minor_without(removed)));
}

std::vector<std::size_t> merris_spectrum(const ThresholdGraph& t) {
  return t.graph().conjugate_degree_counts();
}

bool verify_merris(const ThresholdGraph& t) {
  std::vector<BigInt> roots;
  roots.reserve(t.vertex_count());
  for (std::size_t lambda : merris_spectrum(t)) roots.emplace_back(static_cast<unsigned long>(lambda));
  return characteristic_polynomial(t.graph().laplacian()) == polynomial_from_roots(roots);
}

namespace {

/// Union-find with union by rank and an undo stack; no path compression so
/// rollback stays exact.
class RewindableUnionFind {
 public:
  explicit RewindableUnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::size_t find(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool unite(std::size_t a, std::size_t b) {
    std::size_t ra = find(a);
    std::size_t rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    const bool bumped = rank_[ra] == rank_[rb];
    parent_[rb] = ra;
    if (bumped) ++rank_[ra];
    journal_.push_back({rb, ra, bumped});
    return true;
  }

  void undo() {
    const Step step = journal_.back();
    journal_.pop_back();
    parent_[step.child] = step.child;
    if (step.bumped) --rank_[step.parent];
  }

 private:
  struct Step {
    std::size_t child;
    std::size_t parent;
    bool bumped;
  };
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::vector<Step> journal_;
};

struct TreeSearch {
  const std::vector<Edge>& edges;
  std::size_t target_edges;
  std::size_t limit;
  SpanningTreeList& out;
  RewindableUnionFind components;
  std::vector<Edge> selected;
  bool stopped = false;

  void run(std::size_t index, std::size_t chosen) {
    if (stopped) return;
    if (chosen == target_edges) {
      if (out.trees.size() == limit) {
        out.complete = false;
        stopped = true;
        return;
      }
      out.trees.push_back(selected);
      return;
    }
    if (index == edges.size() || edges.size() - index < target_edges - chosen) return;
    const auto [u, v] = edges[index];
    if (components.unite(u, v)) {
      selected.push_back(edges[index]);
      run(index + 1, chosen + 1);
      selected.pop_back();
      components.undo();
      if (stopped) return;
    }
    run(index + 1, chosen);
  }
};

}  // namespace

SpanningTreeList enumerate_spanning_trees(const Graph& g, std::size_t limit) {
  SpanningTreeList out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  if (n == 1) {
    // The single-vertex graph has one spanning tree, the empty edge set.
    if (limit == 0) {
      out.complete = false;
    } else {
      out.trees.push_back({});
    }
    return out;
  }
  const std::vector<Edge> edges = g.edges();
  TreeSearch search{edges, n - 1, limit, out, RewindableUnionFind(n), {}, false};
  search.selected.reserve(n - 1);
  search.run(0, 0);
  return out;
}

}  // namespace spantree
