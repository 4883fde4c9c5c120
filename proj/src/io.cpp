#include "dlucky/io.hpp"

#include <sstream>

#include <json.hpp>

namespace dlucky {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

std::uint64_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw FormatError(where + ": expected a nonnegative integer");
  }
  return v.get<std::uint64_t>();
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> keys,
                         const char* what) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || key == k;
    if (!known) throw FormatError(std::string(what) + ": unknown field \"" + key + "\"");
  }
}

json roles_json(const RoleIndex& roles) {
  json out = json::object();
  for (const auto& [role, vertices] : roles) out[role] = vertices;
  return out;
}

std::string dump(const json& j) { return j.dump() + "\n"; }

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_tags()) j["tags"] = std::vector<std::string>(g.tags().begin(), g.tags().end());
  return dump(j);
}

Graph graph_from_json(std::string_view text) {
  const json j = parse(text, "graph");
  if (!j.is_object()) throw FormatError("graph: expected a JSON object");
  reject_unknown_keys(j, {"n", "edges", "tags"}, "graph");
  if (!j.contains("n") || !j.contains("edges")) {
    throw FormatError("graph: fields \"n\" and \"edges\" are required");
  }
  const auto n = as_index(j["n"], "graph.n");
  if (!j["edges"].is_array()) throw FormatError("graph.edges: expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < j["edges"].size(); ++i) {
    const json& e = j["edges"][i];
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    if (!e.is_array() || e.size() != 2) throw FormatError(where + ": expected [u, v]");
    const auto u = as_index(e[0], where);
    const auto v = as_index(e[1], where);
    if (u >= n || v >= n) throw FormatError(where + ": endpoint out of range");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::vector<std::string> tags;
  if (j.contains("tags")) {
    if (!j["tags"].is_array()) throw FormatError("graph.tags: expected an array");
    for (const auto& t : j["tags"]) {
      if (!t.is_string()) throw FormatError("graph.tags: expected strings");
      tags.push_back(t.get<std::string>());
    }
  }
  try {
    return Graph(n, std::move(edges), std::move(tags));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

std::string labeling_to_json(const Labeling& l, const RoleIndex& roles) {
  json j;
  j["labels"] = std::vector<Label>(l.labels().begin(), l.labels().end());
  j["k"] = l.k_max();
  if (!roles.empty()) j["roles"] = roles_json(roles);
  return dump(j);
}

LabelingFile labeling_from_json(std::string_view text) {
  const json j = parse(text, "labeling");
  if (!j.is_object()) throw FormatError("labeling: expected a JSON object");
  reject_unknown_keys(j, {"labels", "k", "roles"}, "labeling");
  if (!j.contains("labels") || !j["labels"].is_array()) {
    throw FormatError("labeling: field \"labels\" (array) is required");
  }
  std::vector<Label> labels;
  for (std::size_t i = 0; i < j["labels"].size(); ++i) {
    const auto v = as_index(j["labels"][i], "labeling.labels[" + std::to_string(i) + "]");
    labels.push_back(static_cast<Label>(v));
  }
  std::optional<Label> k;
  if (j.contains("k")) k = static_cast<Label>(as_index(j["k"], "labeling.k"));

  LabelingFile out;
  if (j.contains("roles")) {
    if (!j["roles"].is_object()) throw FormatError("labeling.roles: expected an object");
    for (const auto& [role, vertices] : j["roles"].items()) {
      if (!vertices.is_array()) throw FormatError("labeling.roles: expected arrays");
      auto& dst = out.roles[role];
      for (const auto& v : vertices)
        dst.push_back(static_cast<Vertex>(as_index(v, "labeling.roles." + role)));
    }
  }
  try {
    out.labeling = Labeling(std::move(labels), k);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return out;
}

std::string report_to_json(const ConflictReport& report,
                           std::optional<Label> max_label) {
  json j;
  json conflicts = json::array();
  for (const auto& c : report.conflicts) {
    json entry;
    entry["edge"] = {c.edge.u, c.edge.v};
    entry["dsum"] = c.dsum;
    conflicts.push_back(std::move(entry));
  }
  j["conflicts"] = std::move(conflicts);
  j["d_sums"] = report.d_sums;
  j["max_label"] = max_label ? json(*max_label) : json(nullptr);
  return dump(j);
}

std::string bound_to_json(const LowerBoundReport& report) {
  json j;
  j["bound"] = report.value;
  j["omega"] = report.omega;
  j["clique"] = report.witness.vertices;
  j["delta"] = report.witness.delta;
  j["max_deg"] = report.witness.max_deg;
  return dump(j);
}

std::string solve_result_to_json(const SolveResult& result) {
  json j;
  j["eta"] = result.eta ? json(*result.eta) : json(nullptr);
  if (result.witness) {
    j["witness"] = std::vector<Label>(result.witness->labels().begin(),
                                      result.witness->labels().end());
  } else {
    j["witness"] = nullptr;
  }
  j["nodes_explored"] = result.nodes_explored;
  j["k_tried"] = result.k_tried;
  return dump(j);
}

std::string to_dot(const Graph& g, const Labeling* labeling,
                   const RoleIndex* roles) {
  std::vector<DSum> sums;
  if (labeling) sums = d_lucky_sums(g, *labeling);
  std::vector<std::string> role_of;
  if (roles && !roles->empty()) {
    role_of.resize(g.vertex_count());
    for (const auto& [role, vertices] : *roles) {
      for (Vertex v : vertices) {
        if (v >= g.vertex_count()) {
          throw FormatError("roles: vertex " + std::to_string(v) + " out of range");
        }
        role_of[v] += (role_of[v].empty() ? "" : ",") + role;
      }
    }
  } else if (g.has_tags()) {
    role_of.assign(g.tags().begin(), g.tags().end());
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::string> attrs;
    if (labeling) {
      attrs.push_back("label=\"" + std::to_string((*labeling)[v]) + "\"");
      attrs.push_back("dsum=" + std::to_string(sums[v]));
    }
    if (!role_of.empty()) attrs.push_back("role=\"" + dot_escape(role_of[v]) + "\"");
    os << "  v" << v;
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  v" << e.u << " -- v" << e.v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace dlucky
