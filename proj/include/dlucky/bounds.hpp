#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlucky/graph.hpp"

namespace dlucky {

/// Raised when a search guard (vertex cap, label budget) refuses an input.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A clique with the smallest and largest host-graph degree of its members.
struct CliqueRecord {
  std::vector<Vertex> vertices;  // sorted
  std::size_t delta = 0;
  std::size_t max_deg = 0;

  friend bool operator==(const CliqueRecord&, const CliqueRecord&) = default;
};

inline constexpr std::size_t kDefaultCliqueVertexCap = 64;

/// Every clique of size omega(g), each once, sorted lexicographically.
///
/// Branch and bound over Bron-Kerbosch with Tomita pivoting: a branch is cut
/// as soon as |R| + |P| cannot reach the best size found so far, and only
/// cliques of the current best size are retained. Throws BudgetExceeded when
/// g has more than `vertex_cap` vertices.
std::vector<CliqueRecord> enumerate_maximum_cliques(
    const Graph& g, std::size_t vertex_cap = kDefaultCliqueVertexCap);

/// Max-clique degree bound together with the clique that attains it.
struct LowerBoundReport {
  std::uint64_t value = 1;
  std::size_t omega = 0;
  CliqueRecord witness;
};

/// max over maximum cliques Q of
///   ceil((2 delta(Q) - Delta(Q) + 1) / (Delta(Q) - omega + 2)),
/// clamped below at 1. Requires a connected graph with at least one vertex.
LowerBoundReport lower_bound_thm1_report(
    const Graph& g, std::size_t vertex_cap = kDefaultCliqueVertexCap);

std::uint64_t lower_bound_thm1(const Graph& g,
                               std::size_t vertex_cap = kDefaultCliqueVertexCap);

/// ceil((r + 1) / (r - omega + 2)); the regular-clique special case.
/// Requires omega >= 1 and r >= omega - 1.
std::uint64_t lower_bound_cor2(std::uint64_t r, std::uint64_t omega);

}  // namespace dlucky
