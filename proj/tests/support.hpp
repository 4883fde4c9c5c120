#pragma once

#include <algorithm>
#include <random>
#include <span>

#include "dlucky/graph.hpp"
#include "dlucky/labeling.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::EdgeList edge_list(const dlucky::Graph& g) {
  oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(int(e.u), int(e.v));
  return out;
}

inline dlucky::Graph graph(int n, const oracle::EdgeList& edges) {
  std::vector<dlucky::Edge> es;
  for (auto [u, v] : edges) es.emplace_back(dlucky::Vertex(u), dlucky::Vertex(v));
  return dlucky::Graph(std::size_t(n), std::move(es));
}

inline dlucky::Graph random_graph(int n, double p, std::mt19937& rng) {
  return graph(n, oracle::random_edges(n, p, rng));
}

inline std::vector<int> to_ints(std::span<const dlucky::Label> labels) {
  return {labels.begin(), labels.end()};
}

}  // namespace support
