#include "dlucky/labeling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dlucky {

Labeling::Labeling(std::vector<Label> labels, std::optional<Label> k_max)
    : labels_(std::move(labels)) {
  const Label largest =
      labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end());
  k_max_ = k_max.value_or(largest);
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == 0) {
      throw std::invalid_argument("labeling: vertex " + std::to_string(v) +
                                  " has label 0 (labels start at 1)");
    }
    if (labels_[v] > k_max_) {
      throw std::invalid_argument(
          "labeling: vertex " + std::to_string(v) + " has label " +
          std::to_string(labels_[v]) + " above the budget k=" +
          std::to_string(k_max_));
    }
  }
}

namespace {

void require_total(const Graph& g, const Labeling& l) {
  if (l.size() != g.vertex_count()) {
    throw std::invalid_argument("labeling has " + std::to_string(l.size()) +
                                " labels but the graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

DSum d_lucky_sum(const Graph& g, const Labeling& l, Vertex u) {
  require_total(g, l);
  auto nu = g.neighbors(u);
  DSum sum = nu.size();
  for (Vertex v : nu) sum += l[v];
  return sum;
}

std::vector<DSum> d_lucky_sums(const Graph& g, const Labeling& l) {
  require_total(g, l);
  std::vector<DSum> sums(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) sums[u] = d_lucky_sum(g, l, u);
  return sums;
}

ConflictReport verify(const Graph& g, const Labeling& l) {
  ConflictReport report;
  report.d_sums = d_lucky_sums(g, l);
  for (const Edge& e : g.edges()) {
    if (report.d_sums[e.u] == report.d_sums[e.v]) {
      report.conflicts.push_back({e, report.d_sums[e.u]});
    }
  }
  return report;
}

Label max_label(const Labeling& l) {
  if (l.empty()) throw std::invalid_argument("max_label: empty labeling");
  auto labels = l.labels();
  return *std::max_element(labels.begin(), labels.end());
}

}  // namespace dlucky
