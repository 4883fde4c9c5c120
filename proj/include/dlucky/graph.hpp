#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dlucky {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the dense vertex range [0, vertex_count).
///
/// Immutable once built: the constructor canonicalizes the edge list
/// (sorted, deduplicated check) and rejects loops, repeated edges and
/// out-of-range endpoints. Tags are free-form role strings used for export
/// and diagnostics only.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count, std::vector<Edge> edges = {},
                 std::vector<std::string> tags = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return adjacency_.empty(); }

  /// Edges sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  /// Sorted neighbour list; throws std::out_of_range for a bad vertex.
  std::span<const Vertex> neighbors(Vertex u) const;
  std::size_t degree(Vertex u) const { return neighbors(u).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  bool has_tags() const { return !tags_.empty(); }
  std::span<const std::string> tags() const { return tags_; }
  /// Empty string when the graph carries no tags.
  const std::string& tag(Vertex u) const;

  /// Same structure, new tag vector (empty clears the tags).
  Graph with_tags(std::vector<std::string> tags) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> tags_;
};

// Generators. Numbering conventions are part of the contract: every family
// builder relies on them to produce reproducible labelings.

/// K_n on vertices 0..n-1. Rejects n = 0.
Graph complete_graph(std::size_t n);

/// P_m: 0-1-...-(m-1). Rejects m = 0.
Graph path_graph(std::size_t m);

/// C_n: 0-1-...-(n-1)-0. Rejects n < 3.
Graph cycle_graph(std::size_t n);

/// n vertices, no edges.
Graph empty_graph(std::size_t n);

Graph complement(const Graph& g);

/// Vertex (a, x) is a * |V(h)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

/// g's vertices keep their indices; the copy of h attached to vertex i
/// occupies |V(g)| + i * |V(h)| .. |V(g)| + (i + 1) * |V(h)| - 1.
Graph corona(const Graph& g, const Graph& h);

/// Complete t-partite graph with parts of size n, numbered part-major:
/// part p holds p * n .. p * n + n - 1.
Graph complete_multipartite(std::size_t n, std::size_t t);

/// g's vertices first, then h's shifted by |V(g)|. Tags are concatenated
/// when both graphs carry them.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Adds edges to g; rejects loops, out-of-range endpoints and edges
/// already present.
Graph add_edges(const Graph& g, std::span<const Edge> extra);

/// Replaces each edge of `edges` with a path through a fresh vertex. New
/// vertices are appended in sorted edge order. Rejects non-edges and
/// repeats. New vertices are tagged with `new_tag` when g has tags.
Graph subdivide_edges(const Graph& g, std::span<const Edge> edges,
                      const std::string& new_tag = "subdivision");

bool is_connected(const Graph& g);

}  // namespace dlucky
