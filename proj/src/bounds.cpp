#include "dlucky/bounds.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dlucky {

namespace {

// Fixed-width vertex set over 64-bit words.
class VertexSet {
 public:
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(Vertex v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
  void erase(Vertex v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  std::size_t intersection_count(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

class MaximumCliqueSearch {
 public:
  explicit MaximumCliqueSearch(const Graph& g) : g_(g) {
    const std::size_t n = g.vertex_count();
    adjacency_.reserve(n);
    for (Vertex u = 0; u < n; ++u) {
      VertexSet s(n);
      for (Vertex v : g.neighbors(u)) s.insert(v);
      adjacency_.push_back(std::move(s));
    }
  }

  std::vector<std::vector<Vertex>> run() {
    const std::size_t n = g_.vertex_count();
    VertexSet candidates(n);
    for (Vertex v = 0; v < n; ++v) candidates.insert(v);
    std::vector<Vertex> current;
    expand(current, candidates, VertexSet(n));
    return std::move(found_);
  }

 private:
  void expand(std::vector<Vertex>& current, VertexSet candidates,
              VertexSet excluded) {
    if (current.size() + candidates.count() < best_) return;
    if (candidates.none()) {
      if (!excluded.none()) return;  // not maximal
      if (current.size() > best_) {
        best_ = current.size();
        found_.clear();
      }
      found_.push_back(current);
      return;
    }
    // Pivot maximizing |P ∩ N(pivot)|.
    Vertex pivot = 0;
    std::size_t pivot_score = 0;
    bool have_pivot = false;
    (candidates | excluded).for_each([&](Vertex u) {
      const std::size_t score = candidates.intersection_count(adjacency_[u]);
      if (!have_pivot || score > pivot_score) {
        pivot = u;
        pivot_score = score;
        have_pivot = true;
      }
    });
    std::vector<Vertex> branch;
    candidates.minus(adjacency_[pivot]).for_each(
        [&](Vertex v) { branch.push_back(v); });
    for (Vertex v : branch) {
      current.push_back(v);
      expand(current, candidates & adjacency_[v], excluded & adjacency_[v]);
      current.pop_back();
      candidates.erase(v);
      excluded.insert(v);
      if (current.size() + candidates.count() < best_) return;
    }
  }

  const Graph& g_;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<Vertex>> found_;
  std::size_t best_ = 0;
};

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

}  // namespace

std::vector<CliqueRecord> enumerate_maximum_cliques(const Graph& g,
                                                    std::size_t vertex_cap) {
  if (g.vertex_count() > vertex_cap) {
    throw BudgetExceeded("maximum-clique enumeration refused: graph has " +
                         std::to_string(g.vertex_count()) +
                         " vertices, cap is " + std::to_string(vertex_cap));
  }
  if (g.empty()) return {};

  auto cliques = MaximumCliqueSearch(g).run();
  std::vector<CliqueRecord> records;
  records.reserve(cliques.size());
  for (auto& q : cliques) {
    std::sort(q.begin(), q.end());
    CliqueRecord rec;
    rec.delta = g.degree(q.front());
    rec.max_deg = rec.delta;
    for (Vertex v : q) {
      rec.delta = std::min(rec.delta, g.degree(v));
      rec.max_deg = std::max(rec.max_deg, g.degree(v));
    }
    rec.vertices = std::move(q);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(),
            [](const CliqueRecord& a, const CliqueRecord& b) {
              return a.vertices < b.vertices;
            });
  return records;
}

LowerBoundReport lower_bound_thm1_report(const Graph& g,
                                         std::size_t vertex_cap) {
  if (g.empty()) {
    throw std::invalid_argument("lower bound: graph has no vertices");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "lower bound: graph is disconnected (the bound is stated for connected "
        "graphs)");
  }
  const auto cliques = enumerate_maximum_cliques(g, vertex_cap);
  LowerBoundReport report;
  report.omega = cliques.front().vertices.size();
  bool first = true;
  for (const auto& q : cliques) {
    // Every clique vertex has degree >= omega - 1, so den >= 1.
    const auto den = static_cast<std::int64_t>(q.max_deg) -
                     static_cast<std::int64_t>(report.omega) + 2;
    const auto num = 2 * static_cast<std::int64_t>(q.delta) -
                     static_cast<std::int64_t>(q.max_deg) + 1;
    const std::uint64_t value =
        num <= 0 ? 1
                 : std::max<std::uint64_t>(
                       1, ceil_div(static_cast<std::uint64_t>(num),
                                   static_cast<std::uint64_t>(den)));
    if (first || value > report.value) {
      report.value = value;
      report.witness = q;
      first = false;
    }
  }
  return report;
}

std::uint64_t lower_bound_thm1(const Graph& g, std::size_t vertex_cap) {
  return lower_bound_thm1_report(g, vertex_cap).value;
}

std::uint64_t lower_bound_cor2(std::uint64_t r, std::uint64_t omega) {
  if (omega == 0) {
    throw std::invalid_argument("lower_bound_cor2: omega must be >= 1");
  }
  if (r + 1 < omega) {
    throw std::invalid_argument(
        "lower_bound_cor2: degree r=" + std::to_string(r) +
        " is impossible for a vertex of a clique of size " +
        std::to_string(omega));
  }
  return ceil_div(r + 1, r - omega + 2);
}

}  // namespace dlucky
