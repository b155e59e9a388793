#pragma once

#include <cstddef>
#include <vector>

#include "spantree/bigint.hpp"
#include "spantree/difference.hpp"
#include "spantree/graph.hpp"
#include "spantree/threshold.hpp"

namespace spantree {

/// Exact number of spanning trees; 0 iff the graph is disconnected, 1 for
/// a single vertex.
using TreeCount = BigInt;

/// tau = (1/n) * prod_{i=1..n-1} |{v : deg(v) >= i}|.  The division is
/// asserted exact.  n == 1 yields 1 (empty product).
TreeCount tau_threshold_formula(const ThresholdGraph& t);

/// tau = (1/n) * prod_{u in U} (deg(u)+1) * prod_{z in Z} deg(z); agrees
/// with tau_threshold_formula on every threshold graph.
TreeCount tau_threshold_uz(const ThresholdGraph& t);

/// Both difference-graph product forms, cross-checked: the conjugate-count
/// form over each side and the plain degree-product form
/// (1/(|X||Y|)) * prod_v deg(v).  Disagreement throws std::logic_error.
TreeCount tau_difference(const DifferenceGraph& h);

/// Kirchhoff oracle for any graph: |det| of the Laplacian with the row and
/// column of `removed` deleted (default vertex 0), computed fraction-free.
TreeCount tau_kirchhoff(const Graph& g, VertexId removed = 0);

/// Laplacian spectrum of a threshold graph, nonincreasing: the i-th
/// eigenvalue equals |{v : deg(v) >= i}|.
std::vector<std::size_t> merris_spectrum(const ThresholdGraph& t);

/// True iff the exact characteristic polynomial of the Laplacian equals
/// prod_i (x - lambda_i) over the merris_spectrum multiset.
bool verify_merris(const ThresholdGraph& t);

/// Exhaustive spanning-tree listing, lexicographic by sorted edge list.
/// `complete` is false when `limit` stopped the search early; `trees` then
/// holds the first `limit` trees found.
struct SpanningTreeList {
  std::vector<std::vector<Edge>> trees;
  bool complete = true;
};

SpanningTreeList enumerate_spanning_trees(const Graph& g, std::size_t limit);

}  // namespace spantree
