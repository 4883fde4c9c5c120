#pragma once

// Brute-force reference implementations for tests. Everything here works
// from raw edge lists and plain vectors and shares no code with the
// library's search, verification or clique routines.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<std::int64_t> dsums(int n, const EdgeList& edges,
                                       const std::vector<int>& labels) {
  std::vector<std::int64_t> s(n, 0);
  for (auto [u, v] : edges) {
    s[u] += 1 + labels[v];
    s[v] += 1 + labels[u];
  }
  return s;
}

inline bool is_d_lucky(int n, const EdgeList& edges, const std::vector<int>& labels) {
  const auto s = dsums(n, edges, labels);
  for (auto [u, v] : edges)
    if (s[u] == s[v]) return false;
  return true;
}

/// Every labeling into [k]^n in lexicographic order of the label vector,
/// visiting positions in `order` (identity when empty). Returns the first
/// d-lucky one.
inline std::optional<std::vector<int>> first_labeling(int n, const EdgeList& edges,
                                                      int k,
                                                      std::vector<int> order = {}) {
  if (order.empty())
    for (int i = 0; i < n; ++i) order.push_back(i);
  std::vector<int> digits(n, 1);
  while (true) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[order[i]] = digits[i];
    if (is_d_lucky(n, edges, labels)) return labels;
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == k) digits[pos--] = 1;
    if (pos < 0) return std::nullopt;
    ++digits[pos];
  }
}

inline std::optional<int> eta(int n, const EdgeList& edges, int max_k) {
  for (int k = 1; k <= max_k; ++k)
    if (first_labeling(n, edges, k)) return k;
  return std::nullopt;
}

/// All cliques of maximum size by scanning every vertex subset.
inline std::vector<std::vector<int>> maximum_cliques(int n, const EdgeList& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::vector<std::vector<int>> best;
  std::size_t best_size = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) members.push_back(i);
    if (members.size() < best_size) continue;
    bool clique = true;
    for (std::size_t a = 0; a < members.size() && clique; ++a)
      for (std::size_t b = a + 1; b < members.size() && clique; ++b)
        clique = adj[members[a]][members[b]];
    if (!clique) continue;
    if (members.size() > best_size) {
      best_size = members.size();
      best.clear();
    }
    best.push_back(members);
  }
  std::sort(best.begin(), best.end());
  return best;
}

/// G(n, p) with a caller-owned engine.
inline EdgeList random_edges(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return edges;
}

inline bool connected(int n, const EdgeList& edges) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components <= 1;
}

}  // namespace oracle
