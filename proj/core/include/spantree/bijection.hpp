#pragma once

#include <cstdint>
#include <vector>

#include "spantree/bigint.hpp"
#include "spantree/difference.hpp"
#include "spantree/graph.hpp"
#include "spantree/rng.hpp"
#include "spantree/threshold.hpp"

namespace spantree {

/// A function f : V -> V stored as image[v] = f(v); equivalently the
/// functional digraph with one out-edge per vertex.  Membership in the
/// function family of a threshold graph requires f(v) in N(v) for the
/// initial and independent vertices and f(v) in N(v) or f(v) = v for
/// dominating vertices.
struct FunctionMap {
  std::vector<VertexId> image;

  friend auto operator<=>(const FunctionMap&, const FunctionMap&) = default;
};

/// A spanning tree with one vertex marked black and one marked white.  The
/// black mark always lies in the dominating set (side X for difference
/// graphs); black and white may coincide only in the threshold case.
struct MarkedSpanningTree {
  std::vector<Edge> edges;  // sorted, each (min, max)
  VertexId black = 0;
  VertexId white = 0;

  friend auto operator<=>(const MarkedSpanningTree&, const MarkedSpanningTree&) = default;
};

bool is_valid_function_map(const ThresholdGraph& t, const FunctionMap& f);

/// Forward correspondence from function maps to marked spanning trees.
///
/// Each weak component of the functional digraph carries exactly one
/// directed cycle.  Per cycle, take the latest-created vertex l and its
/// in-cycle predecessor b; order components so l_1 < ... < l_k.  Mark l_1
/// black and b_k white, delete the k cycle edges (b_j, l_j), add the k-1
/// re-linking edges (b_j, l_{j+1}), and drop directions.  Requires a
/// connected graph on at least two vertices and a valid function map.
MarkedSpanningTree psi(const ThresholdGraph& t, const FunctionMap& f);

/// Inverse correspondence.  Directs the tree toward the white vertex,
/// walks the black-to-white path, splits it at the running-maximum
/// (record) vertices, and closes each segment into a directed cycle.
/// Requires `m` to be a spanning tree of t with a dominating black mark.
FunctionMap psi_inverse(const ThresholdGraph& t, const MarkedSpanningTree& m);

/// |F| = |U| * prod_{u in U} (deg(u)+1) * prod_{z in Z} deg(z); also equals
/// |U| * |V| * tau.
BigInt function_space_size(const ThresholdGraph& t);

/// All function maps of t in lexicographic candidate order.  Throws
/// std::length_error (message carries the exact size) when the family is
/// larger than `cap`.
std::vector<FunctionMap> enumerate_function_maps(const ThresholdGraph& t, std::size_t cap);

/// One spanning tree drawn uniformly at random, marks discarded: each
/// vertex independently picks a uniform candidate image, and psi maps the
/// resulting function to a tree.  Every unmarked tree has exactly
/// |U| * |V| preimages, so the tree law is uniform.  Requires a connected
/// graph on at least two vertices.
std::vector<Edge> sample_spanning_tree(const ThresholdGraph& t, Rng& rng);
std::vector<Edge> sample_spanning_tree(const ThresholdGraph& t, std::uint64_t seed);

/// f(v) must lie in the difference-graph neighborhood of v for every
/// vertex; this forbids the companion's inside-X edges.
bool is_valid_difference_function_map(const DifferenceGraph& h, const FunctionMap& f);

/// psi applied through the threshold companion.  For a valid f the result
/// is a spanning tree of the difference graph itself with black in X and
/// white in Y.
MarkedSpanningTree psi_difference(const DifferenceGraph& h, const FunctionMap& f);

/// psi_inverse through the threshold companion; the result satisfies the
/// difference-graph membership rule.  Requires a spanning tree of h with
/// black in X and white in Y.
FunctionMap psi_inverse_difference(const DifferenceGraph& h, const MarkedSpanningTree& m);

/// prod_v deg(v) = |X| * |Y| * tau.
BigInt difference_function_space_size(const DifferenceGraph& h);

std::vector<FunctionMap> enumerate_difference_function_maps(const DifferenceGraph& h,
                                                            std::size_t cap);

std::vector<Edge> sample_spanning_tree(const DifferenceGraph& h, Rng& rng);
std::vector<Edge> sample_spanning_tree(const DifferenceGraph& h, std::uint64_t seed);

}  // namespace spantree
