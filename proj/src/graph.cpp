#include "dlucky/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace dlucky {

namespace {

std::string edge_text(const Edge& e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<std::string> tags)
    : edges_(std::move(edges)),
      adjacency_(vertex_count),
      tags_(std::move(tags)) {
  if (!tags_.empty() && tags_.size() != vertex_count) {
    throw std::invalid_argument("graph: tag count " +
                                std::to_string(tags_.size()) +
                                " does not match vertex count " +
                                std::to_string(vertex_count));
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) {
      throw std::invalid_argument("graph: self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (e.v >= vertex_count) {
      throw std::invalid_argument("graph: edge " + edge_text(e) +
                                  " has endpoint outside 0.." +
                                  std::to_string(vertex_count));
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("graph: duplicate edge " + edge_text(e));
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  if (u >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(u) +
                            " out of range (graph has " +
                            std::to_string(adjacency_.size()) + " vertices)");
  }
  return adjacency_[u];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  (void)neighbors(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

const std::string& Graph::tag(Vertex u) const {
  static const std::string kNone;
  (void)neighbors(u);
  return tags_.empty() ? kNone : tags_[u];
}

Graph Graph::with_tags(std::vector<std::string> tags) const {
  return Graph(vertex_count(), edges_, std::move(tags));
}

Graph complete_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t m) {
  if (m == 0) throw std::invalid_argument("path_graph: m must be >= 1");
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < m; ++a) edges.emplace_back(a, a + 1);
  return Graph(m, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return Graph(n, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    auto na = g.neighbors(a);
    auto it = na.begin();
    for (Vertex b = a + 1; b < n; ++b) {
      while (it != na.end() && *it < b) ++it;
      if (it == na.end() || *it != b) edges.emplace_back(a, b);
    }
  }
  return Graph(n, std::move(edges), {g.tags().begin(), g.tags().end()});
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) {
    throw std::invalid_argument("cartesian_product: factors must be nonempty");
  }
  const std::size_t ng = g.vertex_count();
  const auto nh = static_cast<Vertex>(h.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(ng * h.edge_count() + nh * g.edge_count());
  for (Vertex a = 0; a < ng; ++a)
    for (const Edge& e : h.edges()) edges.emplace_back(a * nh + e.u, a * nh + e.v);
  for (const Edge& e : g.edges())
    for (Vertex x = 0; x < nh; ++x) edges.emplace_back(e.u * nh + x, e.v * nh + x);
  return Graph(ng * nh, std::move(edges));
}

Graph corona(const Graph& g, const Graph& h) {
  if (g.empty()) throw std::invalid_argument("corona: base graph must be nonempty");
  const auto ng = static_cast<Vertex>(g.vertex_count());
  const auto nh = static_cast<Vertex>(h.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Vertex i = 0; i < ng; ++i) {
    const Vertex base = ng + i * nh;
    for (const Edge& e : h.edges()) edges.emplace_back(base + e.u, base + e.v);
    for (Vertex x = 0; x < nh; ++x) edges.emplace_back(i, base + x);
  }
  return Graph(static_cast<std::size_t>(ng) * (1 + nh), std::move(edges));
}

Graph complete_multipartite(std::size_t n, std::size_t t) {
  if (n == 0 || t == 0) {
    throw std::invalid_argument("complete_multipartite: n and t must be >= 1");
  }
  const std::size_t total = n * t;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < total; ++a)
    for (Vertex b = a + 1; b < total; ++b)
      if (a / n != b / n) edges.emplace_back(a, b);
  return Graph(total, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const auto shift = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const Edge& e : h.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  std::vector<std::string> tags;
  if (g.has_tags() && h.has_tags()) {
    tags.assign(g.tags().begin(), g.tags().end());
    tags.insert(tags.end(), h.tags().begin(), h.tags().end());
  }
  return Graph(g.vertex_count() + h.vertex_count(), std::move(edges),
               std::move(tags));
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.vertex_count(), std::move(edges),
               {g.tags().begin(), g.tags().end()});
}

Graph subdivide_edges(const Graph& g, std::span<const Edge> edges,
                      const std::string& new_tag) {
  std::vector<Edge> targets(edges.begin(), edges.end());
  std::sort(targets.begin(), targets.end());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i].v >= g.vertex_count() ||
        !g.adjacent(targets[i].u, targets[i].v)) {
      throw std::invalid_argument("subdivide_edges: " + edge_text(targets[i]) +
                                  " is not an edge");
    }
    if (i > 0 && targets[i - 1] == targets[i]) {
      throw std::invalid_argument("subdivide_edges: " + edge_text(targets[i]) +
                                  " listed twice");
    }
  }
  std::vector<Edge> out;
  out.reserve(g.edge_count() + targets.size());
  for (const Edge& e : g.edges()) {
    if (!std::binary_search(targets.begin(), targets.end(), e)) out.push_back(e);
  }
  auto next = static_cast<Vertex>(g.vertex_count());
  for (const Edge& e : targets) {
    out.emplace_back(e.u, next);
    out.emplace_back(next, e.v);
    ++next;
  }
  std::vector<std::string> tags;
  if (g.has_tags()) {
    tags.assign(g.tags().begin(), g.tags().end());
    tags.resize(next, new_tag);
  }
  return Graph(next, std::move(out), std::move(tags));
}

bool is_connected(const Graph& g) {
  if (g.empty()) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push(v);
      }
    }
  }
  return reached == g.vertex_count();
}

}  // namespace dlucky
