#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "dlucky/graph.hpp"
#include "dlucky/labeling.hpp"

namespace dlucky {

inline constexpr std::size_t kDefaultSolverVertexCap = 16;

struct SolveOptions {
  std::size_t vertex_cap = kDefaultSolverVertexCap;
  /// Workers splitting the first vertex's label choices; 1 = sequential.
  /// Results (eta, witness, node count) do not depend on this value being
  /// greater than one, only on whether it is.
  std::size_t threads = 1;
};

struct SolveResult {
  std::optional<Label> eta;         // empty: exceeds the label budget
  std::optional<Labeling> witness;  // present iff eta is
  std::uint64_t nodes_explored = 0;
  Label k_tried = 0;
};

/// Search order: breadth-first from vertex 0 (restarting at the smallest
/// unvisited vertex), neighbours in index order.
std::vector<Vertex> search_order(const Graph& g);

/// Depth-first search for a d-lucky labeling into [k]. Vertices are
/// assigned in search_order, smallest label first; an edge is tested once
/// every neighbour of both endpoints is labeled. Returns the first witness
/// in that order, or nullopt when none exists.
std::optional<Labeling> exists_labeling(const Graph& g, Label k,
                                        const SolveOptions& options = {});

/// Smallest k in 1..max_k admitting a d-lucky labeling. Throws
/// BudgetExceeded above the vertex cap and std::invalid_argument when
/// max_k < 1.
SolveResult exact_eta(const Graph& g, Label max_k,
                      const SolveOptions& options = {});

}  // namespace dlucky
