#include "spantree/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spantree {

namespace {

/// Comment-stripped, whitespace-tokenized lines; blank lines dropped.
std::vector<std::vector<std::string>> tokenized_lines(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream stream{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string token; stream >> token;) tokens.push_back(std::move(token));
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(const std::string& token, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("expected ") + what + ", got \"" + token + "\"");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw std::invalid_argument("edge list: missing vertex-count line");
  if (lines[0].size() != 1) {
    throw std::invalid_argument("edge list: first line must hold the vertex count alone");
  }
  const std::size_t n = parse_count(lines[0][0], "vertex count");
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) throw std::invalid_argument("edge list: edge lines must be \"u v\"");
    const std::size_t u = parse_count(lines[i][0], "vertex id");
    const std::size_t v = parse_count(lines[i][1], "vertex id");
    if (u >= v) throw std::invalid_argument("edge list: edges must satisfy u < v");
    if (v >= n) throw std::invalid_argument("edge list: vertex id past vertex count");
    if (g.has_edge(u, v)) throw std::invalid_argument("edge list: duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  }
  return out;
}

BipartiteEdgeList parse_bipartite_edge_list(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw std::invalid_argument("bipartite edge list: missing size line");
  if (lines[0].size() != 2) {
    throw std::invalid_argument("bipartite edge list: first line must be \"|X| |Y|\"");
  }
  const std::size_t x_count = parse_count(lines[0][0], "X size");
  const std::size_t y_count = parse_count(lines[0][1], "Y size");
  BipartiteEdgeList result{Graph(x_count + y_count), x_count, y_count};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) {
      throw std::invalid_argument("bipartite edge list: edge lines must be \"x y\"");
    }
    const std::size_t x = parse_count(lines[i][0], "x index");
    const std::size_t y = parse_count(lines[i][1], "y index");
    if (x >= x_count) throw std::invalid_argument("bipartite edge list: x index past |X|");
    if (y >= y_count) throw std::invalid_argument("bipartite edge list: y index past |Y|");
    if (result.graph.has_edge(x, x_count + y)) {
      throw std::invalid_argument("bipartite edge list: duplicate edge");
    }
    result.graph.add_edge(x, x_count + y);
  }
  return result;
}

std::string format_bipartite_edge_list(const DifferenceGraph& h) {
  std::vector<std::size_t> within_side(h.vertex_count());
  for (std::size_t i = 0; i < h.side_x().size(); ++i) within_side[h.side_x()[i]] = i;
  for (std::size_t i = 0; i < h.side_y().size(); ++i) within_side[h.side_y()[i]] = i;
  std::string out =
      std::to_string(h.side_x().size()) + " " + std::to_string(h.side_y().size()) + "\n";
  for (const Edge& e : h.graph().edges()) {
    const VertexId x = h.in_x(e.first) ? e.first : e.second;
    const VertexId y = h.in_x(e.first) ? e.second : e.first;
    out += std::to_string(within_side[x]) + " " + std::to_string(within_side[y]) + "\n";
  }
  return out;
}

std::string format_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out += "  " + std::to_string(v) + ";\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string format_tree_dot(std::span<const Edge> edges, std::size_t vertex_count) {
  std::vector<char> touched(vertex_count, 0);
  for (const Edge& e : edges) touched[e.first] = touched[e.second] = 1;
  std::string out = "graph tree {\n";
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (!touched[v]) out += "  " + std::to_string(v) + ";\n";
  }
  for (const Edge& e : edges) {
    out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string format_edges(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  }
  return out;
}

std::string format_function_map(const FunctionMap& f) {
  std::string out;
  for (std::size_t v = 0; v < f.image.size(); ++v) {
    if (v > 0) out += ' ';
    out += std::to_string(f.image[v]);
  }
  return out;
}

FunctionMap parse_function_map(std::string_view text, std::size_t vertex_count) {
  const auto lines = tokenized_lines(text);
  FunctionMap f;
  for (const auto& tokens : lines) {
    for (const std::string& token : tokens) {
      f.image.push_back(parse_count(token, "vertex id"));
    }
  }
  if (f.image.size() != vertex_count) {
    throw std::invalid_argument("function map: expected " + std::to_string(vertex_count) +
                                " images, got " + std::to_string(f.image.size()));
  }
  for (VertexId target : f.image) {
    if (target >= vertex_count) throw std::invalid_argument("function map: image out of range");
  }
  return f;
}

std::string format_marked_tree(const MarkedSpanningTree& m) {
  std::string out = format_edges(m.edges);
  out += "black=" + std::to_string(m.black) + " white=" + std::to_string(m.white) + "\n";
  return out;
}

MarkedSpanningTree parse_marked_tree(std::string_view text) {
  const auto lines = tokenized_lines(text);
  if (lines.empty()) throw std::invalid_argument("marked tree: empty input");
  MarkedSpanningTree m;
  bool saw_trailer = false;
  for (const auto& tokens : lines) {
    if (tokens.size() == 2 && tokens[0].starts_with("black=")) {
      if (!tokens[1].starts_with("white=")) {
        throw std::invalid_argument("marked tree: malformed trailer");
      }
      m.black = parse_count(tokens[0].substr(6), "black mark");
      m.white = parse_count(tokens[1].substr(6), "white mark");
      saw_trailer = true;
    } else if (tokens.size() == 2) {
      if (saw_trailer) throw std::invalid_argument("marked tree: edge after trailer");
      m.edges.push_back(make_edge(parse_count(tokens[0], "vertex id"),
                                  parse_count(tokens[1], "vertex id")));
    } else {
      throw std::invalid_argument("marked tree: malformed line");
    }
  }
  if (!saw_trailer) throw std::invalid_argument("marked tree: missing black/white trailer");
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace spantree
