#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dlucky/graph.hpp"

namespace dlucky {

using Label = std::uint32_t;
using DSum = std::uint64_t;

/// Total vertex labeling into [1, k_max].
class Labeling {
 public:
  Labeling() = default;
  /// Throws std::invalid_argument on a zero label or a label above k_max.
  /// Without k_max the budget is the largest label used.
  explicit Labeling(std::vector<Label> labels,
                    std::optional<Label> k_max = std::nullopt);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  Label k_max() const { return k_max_; }
  Label operator[](Vertex v) const { return labels_[v]; }
  std::span<const Label> labels() const { return labels_; }

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
  Label k_max_ = 0;
};

struct Conflict {
  Edge edge;
  DSum dsum = 0;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct ConflictReport {
  std::vector<Conflict> conflicts;  // lexicographic by edge
  std::vector<DSum> d_sums;

  bool is_d_lucky() const { return conflicts.empty(); }
};

/// d_G(u) plus the labels of u's neighbours.
DSum d_lucky_sum(const Graph& g, const Labeling& l, Vertex u);

/// All d-lucky sums, indexed by vertex.
std::vector<DSum> d_lucky_sums(const Graph& g, const Labeling& l);

/// Throws std::invalid_argument when the labeling does not cover V(g).
ConflictReport verify(const Graph& g, const Labeling& l);

/// Throws std::invalid_argument on an empty labeling.
Label max_label(const Labeling& l);

}  // namespace dlucky
