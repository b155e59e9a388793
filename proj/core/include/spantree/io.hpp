#pragma once

#include <span>
#include <string>
#include <string_view>

#include "spantree/bijection.hpp"
#include "spantree/difference.hpp"
#include "spantree/graph.hpp"

namespace spantree {

/// Edge-list text: first line `n`, then one `u v` line per edge with
/// 0-based ids and u < v.  Blank lines are skipped and `#` starts a
/// comment.  Malformed input throws std::invalid_argument.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// Bipartite edge-list text: first line `|X| |Y|`, then `x y` lines with
/// 0-based within-side indices.  Vertices are numbered X first: x_i maps
/// to id i, y_j to id |X|+j.
struct BipartiteEdgeList {
  Graph graph;
  std::size_t x_count = 0;
  std::size_t y_count = 0;
};

BipartiteEdgeList parse_bipartite_edge_list(std::string_view text);
std::string format_bipartite_edge_list(const DifferenceGraph& h);

std::string format_dot(const Graph& g);
std::string format_tree_dot(std::span<const Edge> edges, std::size_t vertex_count);

/// One `u v` line per edge.
std::string format_edges(std::span<const Edge> edges);

/// Function maps serialize as n whitespace-separated images in creation
/// order.
std::string format_function_map(const FunctionMap& f);
FunctionMap parse_function_map(std::string_view text, std::size_t vertex_count);

/// Marked trees serialize as their edge lines plus a `black=<i> white=<j>`
/// trailer.
std::string format_marked_tree(const MarkedSpanningTree& m);
MarkedSpanningTree parse_marked_tree(std::string_view text);

}  // namespace spantree
