#include "spantree/bijection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spantree {

namespace {

/// Sorted image candidates per vertex: the open neighborhood, plus the
/// vertex itself when it is dominating.
std::vector<std::vector<VertexId>> candidate_lists(const ThresholdGraph& t) {
  const std::size_t n = t.vertex_count();
  std::vector<std::vector<VertexId>> candidates(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& nbrs = t.graph().neighbors(v);
    auto& list = candidates[v];
    list.assign(nbrs.begin(), nbrs.end());
    if (t.is_dominating(v)) list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }
  return candidates;
}

std::vector<std::vector<VertexId>> difference_candidate_lists(const DifferenceGraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<VertexId>> candidates(n);
  for (VertexId v = 0; v < n; ++v) {
    const auto& nbrs = h.graph().neighbors(v);
    candidates[v].assign(nbrs.begin(), nbrs.end());
  }
  return candidates;
}

std::vector<FunctionMap> enumerate_odometer(const std::vector<std::vector<VertexId>>& candidates,
                                            const BigInt& total, std::size_t cap) {
  if (total > static_cast<unsigned long>(cap)) {
    throw std::length_error("function family has " + total.get_str() +
                            " members, above the cap of " + std::to_string(cap));
  }
  std::vector<FunctionMap> out;
  if (total == 0) return out;
  const std::size_t n = candidates.size();
  out.reserve(total.get_ui());
  std::vector<std::size_t> odometer(n, 0);
  while (true) {
    FunctionMap f;
    f.image.resize(n);
    for (std::size_t v = 0; v < n; ++v) f.image[v] = candidates[v][odometer[v]];
    out.push_back(std::move(f));
    std::size_t v = n;
    while (v-- > 0) {
      if (++odometer[v] < candidates[v].size()) break;
      odometer[v] = 0;
      if (v == 0) return out;
    }
  }
}

struct CycleAnchor {
  VertexId latest;       // l_j: created last on its cycle
  VertexId predecessor;  // b_j: cycle vertex with f(b_j) = l_j
};

/// One anchor per weak component of the functional digraph; out-degree one
/// guarantees exactly one cycle per component.
std::vector<CycleAnchor> find_cycle_anchors(const std::vector<VertexId>& image) {
  const std::size_t n = image.size();
  std::vector<std::uint8_t> state(n, 0);  // 0 fresh, 1 on current walk, 2 settled
  std::vector<CycleAnchor> anchors;
  std::vector<VertexId> walk;
  for (VertexId v = 0; v < n; ++v) {
    if (state[v] != 0) continue;
    walk.clear();
    VertexId u = v;
    while (state[u] == 0) {
      state[u] = 1;
      walk.push_back(u);
      u = image[u];
    }
    if (state[u] == 1) {
      VertexId latest = u;
      VertexId cursor = image[u];
      while (cursor != u) {
        latest = std::max(latest, cursor);
        cursor = image[cursor];
      }
      VertexId predecessor = u;
      while (image[predecessor] != latest) predecessor = image[predecessor];
      anchors.push_back({latest, predecessor});
    }
    for (VertexId w : walk) state[w] = 2;
  }
  std::sort(anchors.begin(), anchors.end(),
            [](const CycleAnchor& a, const CycleAnchor& b) { return a.latest < b.latest; });
  return anchors;
}

MarkedSpanningTree psi_impl(const Graph& g, const std::vector<VertexId>& image) {
  const std::size_t n = g.vertex_count();
  const std::vector<CycleAnchor> anchors = find_cycle_anchors(image);

  std::vector<char> drop_out_edge(n, 0);
  for (const CycleAnchor& a : anchors) drop_out_edge[a.predecessor] = 1;

  MarkedSpanningTree tree;
  tree.edges.reserve(n - 1);
  for (VertexId v = 0; v < n; ++v) {
    if (!drop_out_edge[v]) tree.edges.push_back(make_edge(v, image[v]));
  }
  for (std::size_t j = 0; j + 1 < anchors.size(); ++j) {
    tree.edges.push_back(make_edge(anchors[j].predecessor, anchors[j + 1].latest));
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  tree.black = anchors.front().latest;
  tree.white = anchors.back().predecessor;
  return tree;
}

/// Parents toward `root` over the tree edges, or nullopt if the edges do
/// not connect all vertices.  parent[root] == root.
std::optional<std::vector<VertexId>> orient_toward(const std::vector<Edge>& edges,
                                                   std::size_t vertex_count, VertexId root) {
  std::vector<std::vector<VertexId>> adjacency(vertex_count);
  for (const Edge& e : edges) {
    adjacency[e.first].push_back(e.second);
    adjacency[e.second].push_back(e.first);
  }
  std::vector<VertexId> parent(vertex_count, vertex_count);
  std::vector<VertexId> queue{root};
  parent[root] = root;
  std::size_t reached = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId w : adjacency[u]) {
      if (parent[w] == vertex_count) {
        parent[w] = u;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count) return std::nullopt;
  return parent;
}

std::vector<VertexId> psi_inverse_impl(const std::vector<VertexId>& parent, VertexId black,
                                       VertexId white) {
  const std::size_t n = parent.size();
  std::vector<VertexId> image(n);
  for (VertexId v = 0; v < n; ++v) image[v] = parent[v];  // white self-loops for now

  std::vector<VertexId> path{black};
  for (VertexId v = black; v != white; v = parent[v]) path.push_back(parent[v]);

  // Record positions: vertices created later than everything before them
  // on the path; each record starts a segment that closes into a cycle.
  std::vector<std::size_t> record_positions{0};
  VertexId running_max = path[0];
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (path[i] > running_max) {
      running_max = path[i];
      record_positions.push_back(i);
    }
  }
  for (std::size_t j = 0; j < record_positions.size(); ++j) {
    const std::size_t segment_end = j + 1 < record_positions.size()
                                        ? record_positions[j + 1] - 1
                                        : path.size() - 1;
    image[path[segment_end]] = path[record_positions[j]];
  }
  return image;
}

void require_function_map(const ThresholdGraph& t, const FunctionMap& f) {
  if (!is_valid_function_map(t, f)) {
    throw std::invalid_argument("psi: function map is not a member of the graph's family");
  }
}

void require_spanning_tree(const Graph& g, const MarkedSpanningTree& m) {
  const std::size_t n = g.vertex_count();
  if (m.black >= n || m.white >= n) {
    throw std::invalid_argument("marked tree: mark out of range");
  }
  if (m.edges.size() + 1 != n) {
    throw std::invalid_argument("marked tree: expected " + std::to_string(n - 1) + " edges, got " +
                                std::to_string(m.edges.size()));
  }
  for (const Edge& e : m.edges) {
    if (e.first >= n || e.second >= n || e.first == e.second || !g.has_edge(e.first, e.second)) {
      throw std::invalid_argument("marked tree: edge not present in the host graph");
    }
  }
}

void require_connected(const ThresholdGraph& t, const char* who) {
  if (t.vertex_count() < 2 || !t.is_connected()) {
    throw std::invalid_argument(std::string(who) +
                                ": requires a connected graph on at least two vertices");
  }
}

FunctionMap draw_function(const std::vector<std::vector<VertexId>>& candidates, Rng& rng) {
  FunctionMap f;
  f.image.resize(candidates.size());
  for (std::size_t v = 0; v < candidates.size(); ++v) {
    f.image[v] = candidates[v][rng.below(candidates[v].size())];
  }
  return f;
}

}  // namespace

bool is_valid_function_map(const ThresholdGraph& t, const FunctionMap& f) {
  const std::size_t n = t.vertex_count();
  if (f.image.size() != n) return false;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId target = f.image[v];
    if (target >= n) return false;
    if (target == v) {
      if (!t.is_dominating(v)) return false;
    } else if (!t.graph().has_edge(v, target)) {
      return false;
    }
  }
  return true;
}

MarkedSpanningTree psi(const ThresholdGraph& t, const FunctionMap& f) {
  require_connected(t, "psi");
  require_function_map(t, f);
  return psi_impl(t.graph(), f.image);
}

FunctionMap psi_inverse(const ThresholdGraph& t, const MarkedSpanningTree& m) {
  require_connected(t, "psi_inverse");
  require_spanning_tree(t.graph(), m);
  if (!t.is_dominating(m.black)) {
    throw std::invalid_argument("psi_inverse: black mark must be a dominating vertex");
  }
  const auto parent = orient_toward(m.edges, t.vertex_count(), m.white);
  if (!parent) throw std::invalid_argument("psi_inverse: edges do not form a spanning tree");
  FunctionMap f{psi_inverse_impl(*parent, m.black, m.white)};
  if (!is_valid_function_map(t, f)) {
    throw std::logic_error("psi_inverse: produced a function outside the family");
  }
  return f;
}

BigInt function_space_size(const ThresholdGraph& t) {
  BigInt size = static_cast<unsigned long>(t.dominating_vertices().size());
  for (VertexId u : t.dominating_vertices()) {
    size *= static_cast<unsigned long>(t.graph().degree(u) + 1);
  }
  for (VertexId z : t.independent_vertices()) {
    size *= static_cast<unsigned long>(t.graph().degree(z));
  }
  return size;
}

std::vector<FunctionMap> enumerate_function_maps(const ThresholdGraph& t, std::size_t cap) {
  const auto candidates = candidate_lists(t);
  BigInt total = 1;
  for (const auto& list : candidates) total *= static_cast<unsigned long>(list.size());
  if (total != function_space_size(t)) {
    throw std::logic_error("enumerate_function_maps: candidate product disagrees with closed form");
  }
  return enumerate_odometer(candidates, total, cap);
}

std::vector<Edge> sample_spanning_tree(const ThresholdGraph& t, Rng& rng) {
  require_connected(t, "sample_spanning_tree");
  return psi_impl(t.graph(), draw_function(candidate_lists(t), rng).image).edges;
}

std::vector<Edge> sample_spanning_tree(const ThresholdGraph& t, std::uint64_t seed) {
  Rng rng(seed);
  return sample_spanning_tree(t, rng);
}

bool is_valid_difference_function_map(const DifferenceGraph& h, const FunctionMap& f) {
  const std::size_t n = h.vertex_count();
  if (f.image.size() != n) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (f.image[v] >= n || !h.graph().has_edge(v, f.image[v])) return false;
  }
  return true;
}

MarkedSpanningTree psi_difference(const DifferenceGraph& h, const FunctionMap& f) {
  if (h.vertex_count() < 2 || !h.is_connected()) {
    throw std::invalid_argument(
        "psi_difference: requires a connected graph on at least two vertices");
  }
  if (!is_valid_difference_function_map(h, f)) {
    throw std::invalid_argument(
        "psi_difference: function must map every vertex into its own neighborhood");
  }
  const ThresholdGraph companion = threshold_companion(h);
  MarkedSpanningTree tree = psi(companion, f);
  for (const Edge& e : tree.edges) {
    if (!h.graph().has_edge(e.first, e.second)) {
      throw std::logic_error("psi_difference: produced an edge outside the difference graph");
    }
  }
  if (!h.in_x(tree.black) || h.in_x(tree.white)) {
    throw std::logic_error("psi_difference: marks landed on the wrong sides");
  }
  return tree;
}

FunctionMap psi_inverse_difference(const DifferenceGraph& h, const MarkedSpanningTree& m) {
  if (!h.in_x(m.black)) {
    throw std::invalid_argument("psi_inverse_difference: black mark must lie in X");
  }
  if (m.white >= h.vertex_count() || h.in_x(m.white)) {
    throw std::invalid_argument("psi_inverse_difference: white mark must lie in Y");
  }
  require_spanning_tree(h.graph(), m);
  const ThresholdGraph companion = threshold_companion(h);
  FunctionMap f = psi_inverse(companion, m);
  if (!is_valid_difference_function_map(h, f)) {
    throw std::logic_error("psi_inverse_difference: produced a function outside the family");
  }
  return f;
}

BigInt difference_function_space_size(const DifferenceGraph& h) {
  BigInt size = 1;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    size *= static_cast<unsigned long>(h.graph().degree(v));
  }
  return size;
}

std::vector<FunctionMap> enumerate_difference_function_maps(const DifferenceGraph& h,
                                                            std::size_t cap) {
  const auto candidates = difference_candidate_lists(h);
  BigInt total = 1;
  for (const auto& list : candidates) total *= static_cast<unsigned long>(list.size());
  return enumerate_odometer(candidates, total, cap);
}

std::vector<Edge> sample_spanning_tree(const DifferenceGraph& h, Rng& rng) {
  if (h.vertex_count() < 2 || !h.is_connected()) {
    throw std::invalid_argument(
        "sample_spanning_tree: requires a connected graph on at least two vertices");
  }
  return psi_difference(h, draw_function(difference_candidate_lists(h), rng)).edges;
}

std::vector<Edge> sample_spanning_tree(const DifferenceGraph& h, std::uint64_t seed) {
  Rng rng(seed);
  return sample_spanning_tree(h, rng);
}

}  // namespace spantree
