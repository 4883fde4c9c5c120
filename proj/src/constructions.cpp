#include "dlucky/constructions.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace dlucky {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

std::string padded(std::size_t i, std::size_t width_of) {
  std::string s = std::to_string(i);
  const std::size_t width = std::to_string(width_of).size();
  return std::string(width > s.size() ? width - s.size() : 0, '0') + s;
}

// Clique and pendant labels of the K_n corona r construction with budget k.
// The first min(n, (k-1) r + 1) clique vertices get label 1 and pendant
// tuples of ranks 1, 2, ...; the remaining clique vertices get 2, 3, ...
// and all-ones pendants.
struct CoronaLabels {
  std::vector<Label> core;
  std::vector<std::vector<Label>> pendants;
};

CoronaLabels corona_labels(std::size_t n, std::size_t r, Label k) {
  const std::size_t ones = std::min(n, (k - 1) * r + 1);
  if (n - ones + 1 > k) {
    throw std::logic_error("corona labeling: clique labels 2.." +
                           std::to_string(n - ones + 1) +
                           " exceed the budget k=" + std::to_string(k));
  }
  CoronaLabels out;
  out.core.resize(n);
  out.pendants.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < ones) {
      out.core[i] = 1;
      out.pendants[i] = pendant_tuple(i + 1, k, r);
    } else {
      out.core[i] = static_cast<Label>(i - ones + 2);
      out.pendants[i].assign(r, 1);
    }
  }
  return out;
}

void finish(LabeledFamily& f) {
  auto report = verify(f.graph, f.labeling);
  if (!report.is_d_lucky()) {
    std::ostringstream msg;
    msg << f.family << " construction produced " << report.conflicts.size()
        << " conflict(s):";
    for (const auto& c : report.conflicts) {
      msg << " {" << c.edge.u << "," << c.edge.v << "}=" << c.dsum;
    }
    throw ConstructionError(msg.str(), std::move(report.conflicts));
  }
  if (max_label(f.labeling) != f.claimed_eta) {
    throw ConstructionError(f.family + " construction uses max label " +
                                std::to_string(max_label(f.labeling)) +
                                " but claims eta " +
                                std::to_string(f.claimed_eta),
                            {});
  }
}

}  // namespace

std::uint64_t corona_eta(const CoronaParams& p) {
  validate(p);
  return ceil_div(p.n + p.r, p.r + 1);
}

std::uint64_t web_eta(const WebParams& p) {
  validate(p);
  return ceil_div(p.n + 1, 2);
}

std::uint64_t cocktail_eta(const CocktailParams& p) {
  validate(p);
  return ceil_div(p.t + p.n + p.r - 1, p.n + p.r);
}

std::vector<Label> pendant_tuple(std::size_t rank, Label k, std::size_t r) {
  if (rank == 0 || k == 0) {
    throw std::invalid_argument("pendant_tuple: rank and k must be >= 1");
  }
  std::vector<Label> tuple(r, 1);
  if (k == 1) {
    if (rank != 1) throw std::invalid_argument("pendant_tuple: rank > 1 with k = 1");
    return tuple;
  }
  if (rank - 1 > (k - 1) * r) {
    throw std::invalid_argument("pendant_tuple: rank " + std::to_string(rank) +
                                " exceeds (k-1)r+1 = " +
                                std::to_string((k - 1) * r + 1));
  }
  const std::size_t full = (rank - 1) / (k - 1);
  for (std::size_t c = 0; c < full; ++c) tuple[c] = k;
  if (full < r) tuple[full] = static_cast<Label>(1 + (rank - 1) % (k - 1));
  return tuple;
}

void validate(const CoronaParams& p) {
  if (p.n < 2) throw std::invalid_argument("corona: requires n >= 2");
  if (p.r < 1) throw std::invalid_argument("corona: requires r >= 1");
}

void validate(const WebParams& p) {
  if (p.m < 3) throw std::invalid_argument("web: requires m >= 3");
  if (p.n < 5) throw std::invalid_argument("web: requires n >= 5");
}

void validate(const CocktailParams& p) {
  if (p.n < 1) throw std::invalid_argument("cocktail: requires n >= 1");
  if (p.r < 1) throw std::invalid_argument("cocktail: requires r >= 1");
  if (p.t < 2) throw std::invalid_argument("cocktail: requires t >= 2");
}

Graph corona_family_graph(const CoronaParams& p) {
  validate(p);
  Graph g = corona(complete_graph(p.n), empty_graph(p.r));
  std::vector<std::string> tags(g.vertex_count(), "pendant");
  std::fill_n(tags.begin(), p.n, "clique");
  return g.with_tags(std::move(tags));
}

Graph cylinder_graph(std::size_t m, std::size_t n) {
  Graph g = cartesian_product(path_graph(m), cycle_graph(n));
  std::vector<std::string> tags(g.vertex_count());
  for (std::size_t j = 0; j < m; ++j) {
    const std::string tag =
        j == 0 ? "top" : (j + 1 == m ? "bottom" : "layer:" + std::to_string(j));
    std::fill_n(tags.begin() + static_cast<std::ptrdiff_t>(j * n), n, tag);
  }
  return g.with_tags(std::move(tags));
}

Graph web_graph(const WebParams& p) {
  validate(p);
  const auto m = p.m, n = p.n;
  const Graph cylinder = cylinder_graph(m, n);
  Graph g = disjoint_union(
      cylinder,
      complete_graph(n).with_tags(std::vector<std::string>(n, "clique")));

  std::vector<Edge> matching;
  for (std::size_t c = 0; c < n; ++c)
    matching.emplace_back(static_cast<Vertex>(c), static_cast<Vertex>(m * n + c));
  g = add_edges(g, matching);
  g = subdivide_edges(g, matching, "pendant_subdivision");

  std::vector<Edge> cycle_edges;
  for (const Edge& e : cylinder.edges()) {
    if (e.u / n == e.v / n) cycle_edges.push_back(e);
  }
  return subdivide_edges(g, cycle_edges, "cycle_subdivision");
}

Graph cocktail_graph(const CocktailParams& p) {
  validate(p);
  Graph g = corona(complete_multipartite(p.n, p.t), empty_graph(p.r));
  std::vector<std::string> tags(g.vertex_count(), "pendant");
  for (std::size_t c = 0; c < p.n * p.t; ++c) {
    tags[c] = "part:" + std::to_string(c / p.n + 1);
  }
  return g.with_tags(std::move(tags));
}

LabeledFamily build_corona(const CoronaParams& p) {
  LabeledFamily f;
  f.family = "corona";
  f.graph = corona_family_graph(p);
  f.claimed_eta = corona_eta(p);
  const auto k = static_cast<Label>(f.claimed_eta);

  const CoronaLabels cl = corona_labels(p.n, p.r, k);
  std::vector<Label> labels(f.graph.vertex_count());
  auto& clique = f.role_index["clique"];
  for (std::size_t i = 0; i < p.n; ++i) {
    labels[i] = cl.core[i];
    clique.push_back(static_cast<Vertex>(i));
    auto& pendants = f.role_index["X_" + padded(i + 1, p.n)];
    for (std::size_t s = 0; s < p.r; ++s) {
      const auto v = static_cast<Vertex>(p.n + i * p.r + s);
      labels[v] = cl.pendants[i][s];
      pendants.push_back(v);
    }
  }
  f.labeling = Labeling(std::move(labels), k);
  finish(f);
  return f;
}

LabeledFamily build_web(const WebParams& p) {
  LabeledFamily f;
  f.family = "web";
  f.graph = web_graph(p);
  f.claimed_eta = web_eta(p);
  const auto m = p.m, n = p.n;
  const auto k = static_cast<Label>(f.claimed_eta);
  const std::size_t clique_base = m * n, u_base = m * n + n;

  std::vector<Label> labels(f.graph.vertex_count(), 0);

  // K_n corona K_1 on the clique and the matching-subdivision vertices.
  const CoronaLabels cl = corona_labels(n, 1, k);
  for (std::size_t i = 0; i < n; ++i) {
    labels[clique_base + i] = cl.core[i];
    labels[u_base + i] = cl.pendants[i][0];
    f.role_index["clique"].push_back(static_cast<Vertex>(clique_base + i));
    f.role_index["u"].push_back(static_cast<Vertex>(u_base + i));
    f.role_index["w"].push_back(static_cast<Vertex>(i));
  }
  for (std::size_t j = 1; j < m; ++j) {
    auto& layer = f.role_index["layer_" + padded(j, m - 1)];
    for (std::size_t c = 0; c < n; ++c)
      layer.push_back(static_cast<Vertex>(j * n + c));
  }
  for (std::size_t v = u_base + n; v < f.graph.vertex_count(); ++v) {
    f.role_index["cycle_subdivision"].push_back(static_cast<Vertex>(v));
  }

  // Proper 2-labeling of the cylinder plus its cycle-subdivision vertices,
  // seeded so the bottom layer ends up labeled 1.
  const Label top = (m % 2 == 1) ? 1 : 2;
  std::queue<Vertex> queue;
  for (std::size_t c = 0; c < n; ++c) {
    labels[c] = top;
    queue.push(static_cast<Vertex>(c));
  }
  auto in_remainder = [&](Vertex v) {
    return v < clique_base || v >= u_base + n;
  };
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop();
    for (Vertex v : f.graph.neighbors(u)) {
      if (!in_remainder(v)) continue;
      if (labels[v] == 0) {
        labels[v] = 3 - labels[u];
        queue.push(v);
      } else if (labels[v] == labels[u]) {
        throw std::logic_error("web: remainder is not bipartite");
      }
    }
  }

  // Patches on the top layer; w_i is vertex i - 1.
  if (top == 1) {
    if (k + 7 <= n) labels[k + 7 - 1] = 3;
  } else {
    if (k >= 5) labels[5 - 1] = 3;
    if (k + 3 <= n) labels[k + 3 - 1] = 3;
  }

  f.labeling = Labeling(std::move(labels), k);
  finish(f);
  return f;
}

LabeledFamily build_cocktail(const CocktailParams& p) {
  LabeledFamily f;
  f.family = "cocktail";
  f.graph = cocktail_graph(p);
  f.claimed_eta = cocktail_eta(p);
  const auto n = p.n, t = p.t, r = p.r;
  const auto k = static_cast<Label>(f.claimed_eta);

  // W: the first kr - r + 1 parts (clamped to t), core label 1, pendant
  // tuples walking ranks 1, 2, ....
  const std::size_t w_parts = std::min(t, (k - 1) * r + 1);
  const std::size_t rest = t - w_parts;
  // Groups U_j of n parts follow. Core label j + 1 with pendant ranks
  // 1..n needs n <= (k-1) r + 1; otherwise walk the core labels of each
  // part between j and j + 1 and keep the pendants at 1.
  const bool pendant_walk = std::min(n, rest) <= (k - 1) * r + 1;
  // A residual group shorter than n always walks core labels, so its
  // d-sums sit directly below the previous group's.
  const std::size_t full_parts = rest - rest % n;

  std::vector<std::vector<Label>> core(t), pend(t);
  for (std::size_t part = 0; part < t; ++part) {
    if (part < w_parts) {
      core[part].assign(n, 1);
      pend[part] = pendant_tuple(part + 1, k, r);
      continue;
    }
    const std::size_t j = (part - w_parts) / n + 1;
    const std::size_t pos = (part - w_parts) % n + 1;
    if (pendant_walk && part - w_parts < full_parts) {
      core[part].assign(n, static_cast<Label>(j + 1));
      pend[part] = pendant_tuple(pos, k, r);
    } else {
      core[part].assign(n, static_cast<Label>(j));
      std::fill_n(core[part].begin(), pos, static_cast<Label>(j + 1));
      pend[part].assign(r, 1);
    }
  }

  std::vector<Label> labels(f.graph.vertex_count());
  for (std::size_t part = 0; part < t; ++part) {
    auto& members = f.role_index["V_" + padded(part + 1, t)];
    f.role_index["part_representatives"].push_back(static_cast<Vertex>(part * n));
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t c = part * n + a;
      labels[c] = core[part][a];
      members.push_back(static_cast<Vertex>(c));
      for (std::size_t s = 0; s < r; ++s) {
        const std::size_t x = n * t + c * r + s;
        labels[x] = pend[part][s];
        f.role_index["pendants"].push_back(static_cast<Vertex>(x));
      }
    }
  }
  f.labeling = Labeling(std::move(labels), k);
  finish(f);
  return f;
}

std::vector<DsumRow> family_dsum_table(const LabeledFamily& f) {
  const auto sums = d_lucky_sums(f.graph, f.labeling);
  std::vector<DsumRow> rows;
  for (const auto& [role, vertices] : f.role_index) {
    for (Vertex v : vertices) rows.push_back({role, v, sums[v]});
  }
  return rows;
}

std::vector<DSum> structural_dsums(const LabeledFamily& f) {
  const auto sums = d_lucky_sums(f.graph, f.labeling);
  const char* role = f.family == "cocktail" ? "part_representatives" : "clique";
  std::vector<DSum> out;
  auto it = f.role_index.find(role);
  if (it == f.role_index.end()) return out;
  for (Vertex v : it->second) out.push_back(sums[v]);
  return out;
}

bool distinct_consecutive(std::vector<DSum> values) {
  std::sort(values.begin(), values.end());
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] != values[i - 1] + 1) return false;
  }
  return true;
}

}  // namespace dlucky
