#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlucky/graph.hpp"
#include "dlucky/labeling.hpp"

namespace dlucky {

/// K_n corona r pendants per clique vertex. Requires n >= 2, r >= 1.
struct CoronaParams {
  std::size_t n = 0;
  std::size_t r = 0;
};

/// Web graph over the cylinder P_m x C_n. Requires m >= 3, n >= 5.
struct WebParams {
  std::size_t m = 0;
  std::size_t n = 0;
};

/// Complete t-partite graph with parts of size n, r pendants per vertex.
/// Requires n, r >= 1 and t >= 2.
struct CocktailParams {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t r = 0;
};

/// Thrown when a builder's own verification fails. Carries the conflicts so
/// the caller can dump them.
class ConstructionError : public std::logic_error {
 public:
  ConstructionError(const std::string& what, std::vector<Conflict> conflicts)
      : std::logic_error(what), conflicts_(std::move(conflicts)) {}
  const std::vector<Conflict>& conflicts() const { return conflicts_; }

 private:
  std::vector<Conflict> conflicts_;
};

/// A family graph, its explicit labeling and the closed-form eta it attains.
/// Builders only return verified instances.
struct LabeledFamily {
  std::string family;  // "corona", "web" or "cocktail"
  Graph graph;
  Labeling labeling;
  std::uint64_t claimed_eta = 0;
  std::map<std::string, std::vector<Vertex>> role_index;
};

/// ceil((n + r) / (r + 1))
std::uint64_t corona_eta(const CoronaParams& p);
/// ceil((n + 1) / 2)
std::uint64_t web_eta(const WebParams& p);
/// ceil((t + n + r - 1) / (n + r))
std::uint64_t cocktail_eta(const CocktailParams& p);

/// Pendant label tuple of rank i (1-based) over r coordinates with labels in
/// [k]: the first floor((i-1)/(k-1)) coordinates are k, the next one is
/// 1 + (i-1) mod (k-1), the rest 1. Its sum is r + i - 1, and the tuples of
/// ranks i and i+1 differ in exactly one coordinate. Valid for
/// 1 <= i <= (k-1) r + 1; for k = 1 only rank 1 exists.
std::vector<Label> pendant_tuple(std::size_t rank, Label k, std::size_t r);

// Graph builders (no labeling). Vertex numbering:
//  corona:   clique v_i = i-1; pendants of v_i at n + (i-1) r ...
//  web:      top layer w_i = i-1, cylinder layer j column c = j n + c;
//            clique v_i = m n + i - 1; u_i = m n + n + i - 1; then the
//            cycle-subdivision vertices in sorted cycle-edge order.
//  cocktail: part V_p (1-based) holds (p-1) n .. p n - 1; pendants of core
//            vertex c at n t + c r ...
Graph corona_family_graph(const CoronaParams& p);
Graph cylinder_graph(std::size_t m, std::size_t n);
Graph web_graph(const WebParams& p);
Graph cocktail_graph(const CocktailParams& p);

/// Throws std::invalid_argument naming the violated hypothesis.
void validate(const CoronaParams& p);
void validate(const WebParams& p);
void validate(const CocktailParams& p);

LabeledFamily build_corona(const CoronaParams& p);
LabeledFamily build_web(const WebParams& p);
LabeledFamily build_cocktail(const CocktailParams& p);

struct DsumRow {
  std::string role;
  Vertex vertex = 0;
  DSum dsum = 0;

  friend bool operator==(const DsumRow&, const DsumRow&) = default;
};

/// One row per (role, vertex) of the family's role index, roles in map
/// order and vertices in role order.
std::vector<DsumRow> family_dsum_table(const LabeledFamily& f);

/// d-sums of the clique vertices v_1..v_n (corona, web) or of one
/// representative per part V_1..V_t (cocktail), in role order.
std::vector<DSum> structural_dsums(const LabeledFamily& f);

/// True when the values, as a set, are pairwise distinct and consecutive.
bool distinct_consecutive(std::vector<DSum> values);

}  // namespace dlucky
