#include "dlucky/solver.hpp"

#include <algorithm>
#include <future>
#include <queue>
#include <stdexcept>
#include <vector>

#include "dlucky/bounds.hpp"

namespace dlucky {

namespace {

struct SearchOutcome {
  std::optional<std::vector<Label>> labels;
  std::uint64_t nodes = 0;
};

class LabelSearch {
 public:
  LabelSearch(const Graph& g, Label k) : g_(g), k_(k) {
    order_ = search_order(g);
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    ready_.resize(n);
    for (const Edge& e : g.edges()) {
      std::size_t when = 0;
      for (Vertex x : g.neighbors(e.u)) when = std::max(when, pos[x]);
      for (Vertex x : g.neighbors(e.v)) when = std::max(when, pos[x]);
      ready_[when].push_back(e);
    }
  }

  /// Search with the first vertex in the order pinned to `first` (0 = free).
  SearchOutcome run(Label first = 0) const {
    State s;
    s.labels.assign(g_.vertex_count(), 0);
    s.sums.resize(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) s.sums[v] = g_.degree(v);
    SearchOutcome out;
    if (g_.empty()) {
      out.labels = std::vector<Label>{};
      return out;
    }
    if (dfs(s, 0, first)) out.labels = s.labels;
    out.nodes = s.nodes;
    return out;
  }

  std::size_t vertex_count() const { return order_.size(); }

 private:
  struct State {
    std::vector<Label> labels;
    std::vector<DSum> sums;
    std::uint64_t nodes = 0;
  };

  bool dfs(State& s, std::size_t step, Label pinned) const {
    if (step == order_.size()) return true;
    const Vertex u = order_[step];
    const auto nbrs = g_.neighbors(u);
    const Label lo = pinned ? pinned : 1;
    const Label hi = pinned ? pinned : k_;
    for (Label label = lo; label <= hi; ++label) {
      ++s.nodes;
      s.labels[u] = label;
      for (Vertex v : nbrs) s.sums[v] += label;
      bool ok = true;
      for (const Edge& e : ready_[step]) {
        if (s.sums[e.u] == s.sums[e.v]) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(s, step + 1, 0)) return true;
      for (Vertex v : nbrs) s.sums[v] -= label;
    }
    s.labels[u] = 0;
    return false;
  }

  const Graph& g_;
  Label k_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Edge>> ready_;
};

void check_inputs(const Graph& g, const SolveOptions& options) {
  if (g.vertex_count() > options.vertex_cap) {
    throw BudgetExceeded("exact search refused: graph has " +
                         std::to_string(g.vertex_count()) +
                         " vertices, cap is " +
                         std::to_string(options.vertex_cap));
  }
}

SearchOutcome search(const Graph& g, Label k, const SolveOptions& options) {
  const LabelSearch searcher(g, k);
  if (options.threads <= 1 || g.empty()) return searcher.run();

  // One task per label of the first vertex; the lowest successful label
  // yields the same witness as the sequential search.
  std::vector<SearchOutcome> parts(k);
  std::vector<std::future<void>> running;
  Label next = 1;
  while (next <= k || !running.empty()) {
    while (next <= k && running.size() < options.threads) {
      const Label first = next++;
      running.push_back(std::async(std::launch::async, [&, first] {
        parts[first - 1] = searcher.run(first);
      }));
    }
    running.front().get();
    running.erase(running.begin());
  }
  SearchOutcome out;
  for (auto& part : parts) {
    out.nodes += part.nodes;
    if (!out.labels && part.labels) out.labels = std::move(part.labels);
  }
  return out;
}

}  // namespace

std::vector<Vertex> search_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::queue<Vertex> queue;
    queue.push(root);
    seen[root] = 1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      order.push_back(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push(v);
        }
      }
    }
  }
  return order;
}

std::optional<Labeling> exists_labeling(const Graph& g, Label k,
                                        const SolveOptions& options) {
  if (k < 1) throw std::invalid_argument("exists_labeling: k must be >= 1");
  check_inputs(g, options);
  auto outcome = search(g, k, options);
  if (!outcome.labels) return std::nullopt;
  return Labeling(std::move(*outcome.labels), k);
}

SolveResult exact_eta(const Graph& g, Label max_k, const SolveOptions& options) {
  if (max_k < 1) throw std::invalid_argument("exact_eta: max_k must be >= 1");
  check_inputs(g, options);
  SolveResult result;
  for (Label k = 1; k <= max_k; ++k) {
    auto outcome = search(g, k, options);
    result.nodes_explored += outcome.nodes;
    result.k_tried = k;
    if (outcome.labels) {
      result.eta = k;
      result.witness = Labeling(std::move(*outcome.labels), k);
      break;
    }
  }
  return result;
}

}  // namespace dlucky
