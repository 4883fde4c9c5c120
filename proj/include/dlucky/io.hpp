#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dlucky/bounds.hpp"
#include "dlucky/graph.hpp"
#include "dlucky/labeling.hpp"
#include "dlucky/solver.hpp"

namespace dlucky {

/// Malformed interchange text.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using RoleIndex = std::map<std::string, std::vector<Vertex>>;

// Canonical interchange text. Writers emit compact JSON with a fixed key
// order and a trailing newline, so identical inputs give identical bytes:
//   graph:    {"n":3,"edges":[[0,1],[1,2]],"tags":["a","b","c"]}
//   labeling: {"labels":[1,2,1],"k":2,"roles":{"clique":[0,1]}}

std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

struct LabelingFile {
  Labeling labeling;
  RoleIndex roles;
};

std::string labeling_to_json(const Labeling& l, const RoleIndex& roles = {});
LabelingFile labeling_from_json(std::string_view text);

std::string report_to_json(const ConflictReport& report,
                           std::optional<Label> max_label);
std::string bound_to_json(const LowerBoundReport& report);
std::string solve_result_to_json(const SolveResult& result);

/// Undirected DOT with nodes v0..v{n-1}. With a labeling each node carries
/// label (the vertex label) and dsum. role lists the vertex's entries in
/// `roles` when given (comma separated), else the graph tag.
std::string to_dot(const Graph& g, const Labeling* labeling = nullptr,
                   const RoleIndex* roles = nullptr);

}  // namespace dlucky
