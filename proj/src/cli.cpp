#include "dlucky/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dlucky/bounds.hpp"
#include "dlucky/constructions.hpp"
#include "dlucky/io.hpp"
#include "dlucky/solver.hpp"

namespace dlucky::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, Streams& io) {
  if (path == "-") {
    std::ostringstream buf;
    buf << io.in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, Streams& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

// Family parameters shared by gen and label. Every flag a family does not
// use must be absent.
struct FamilyArgs {
  std::string family;
  std::optional<std::size_t> m, n, t, r;

  void register_on(CLI::App* cmd) {
    cmd->add_option("--m", m, "path length (path, cylinder, web)");
    cmd->add_option("--n", n, "size parameter n");
    cmd->add_option("--t", t, "number of parts (multipartite, cocktail)");
    cmd->add_option("--r", r, "pendants per vertex (corona, cocktail)");
  }

  void require(std::initializer_list<char> names) const {
    const std::pair<char, const std::optional<std::size_t>*> all[] = {
        {'m', &m}, {'n', &n}, {'t', &t}, {'r', &r}};
    for (const auto& [name, value] : all) {
      const bool wanted = std::find(names.begin(), names.end(), name) != names.end();
      if (wanted && !value->has_value()) {
        throw UsageError(family + ": missing --" + std::string(1, name));
      }
      if (!wanted && value->has_value()) {
        throw UsageError(family + ": --" + std::string(1, name) + " does not apply");
      }
    }
  }
};

Graph generate(const FamilyArgs& a) {
  const std::string& f = a.family;
  if (f == "complete") {
    a.require({'n'});
    return complete_graph(*a.n);
  }
  if (f == "path") {
    a.require({'m'});
    return path_graph(*a.m);
  }
  if (f == "cycle") {
    a.require({'n'});
    return cycle_graph(*a.n);
  }
  if (f == "multipartite") {
    a.require({'n', 't'});
    return complete_multipartite(*a.n, *a.t);
  }
  if (f == "cylinder") {
    a.require({'m', 'n'});
    return cylinder_graph(*a.m, *a.n);
  }
  if (f == "corona") {
    a.require({'n', 'r'});
    return corona_family_graph({*a.n, *a.r});
  }
  if (f == "web") {
    a.require({'m', 'n'});
    return web_graph({*a.m, *a.n});
  }
  a.require({'n', 't', 'r'});
  return cocktail_graph({*a.n, *a.t, *a.r});
}

LabeledFamily build(const FamilyArgs& a) {
  if (a.family == "corona") {
    a.require({'n', 'r'});
    return build_corona({*a.n, *a.r});
  }
  if (a.family == "web") {
    a.require({'m', 'n'});
    return build_web({*a.m, *a.n});
  }
  a.require({'n', 't', 'r'});
  return build_cocktail({*a.n, *a.t, *a.r});
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
  return s;
}

int cmd_gen(const FamilyArgs& a, const std::string& out_path, Streams& io) {
  write_output(out_path, graph_to_json(generate(a)), io);
  return kOk;
}

int cmd_label(const FamilyArgs& a, const std::string& out_path,
              const std::string& graph_out, bool table, Streams& io) {
  const LabeledFamily f = build(a);
  write_output(out_path, labeling_to_json(f.labeling, f.role_index), io);
  if (!graph_out.empty()) write_output(graph_out, graph_to_json(f.graph), io);

  std::ostream& summary = (out_path == "-" || graph_out == "-") ? io.err : io.out;
  summary << "family: " << f.family << "\n"
          << "vertices: " << f.graph.vertex_count() << "\n"
          << "claimed_eta: " << f.claimed_eta << "\n"
          << "max_label: " << max_label(f.labeling) << "\n"
          << "verified: yes\n";
  if (table) {
    for (const auto& row : family_dsum_table(f)) {
      summary << row.role << "\tv" << row.vertex << "\t" << row.dsum << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& labeling_path,
               bool as_json, Streams& io) {
  const Graph g = graph_from_json(read_input(graph_path, io));
  const LabelingFile lf = labeling_from_json(read_input(labeling_path, io));
  if (lf.labeling.size() != g.vertex_count()) {
    throw UsageError("labeling has " + std::to_string(lf.labeling.size()) +
                     " labels but the graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  const ConflictReport report = verify(g, lf.labeling);
  std::optional<Label> top;
  if (!lf.labeling.empty()) top = max_label(lf.labeling);
  if (as_json) {
    io.out << report_to_json(report, top);
  } else {
    io.out << "vertices: " << g.vertex_count() << "\n"
           << "edges: " << g.edge_count() << "\n"
           << "max_label: " << (top ? std::to_string(*top) : "-") << "\n"
           << "conflicts: " << report.conflicts.size() << "\n";
    for (const auto& c : report.conflicts) {
      io.out << "  {" << c.edge.u << "," << c.edge.v << "} d-sum " << c.dsum << "\n";
    }
    io.out << "d-lucky: " << (report.is_d_lucky() ? "yes" : "no") << "\n";
  }
  return report.is_d_lucky() ? kOk : kNegative;
}

int cmd_bound(const std::string& graph_path, std::size_t cap, bool as_json,
              Streams& io) {
  const Graph g = graph_from_json(read_input(graph_path, io));
  const LowerBoundReport report = lower_bound_thm1_report(g, cap);
  if (as_json) {
    io.out << bound_to_json(report);
  } else {
    io.out << "bound: " << report.value << "\n"
           << "omega: " << report.omega << "\n"
           << "clique: " << join(report.witness.vertices) << "\n"
           << "delta: " << report.witness.delta << "\n"
           << "max_deg: " << report.witness.max_deg << "\n";
  }
  return kOk;
}

int cmd_solve(const std::string& graph_path, Label max_k, SolveOptions options,
              bool as_json, Streams& io) {
  const Graph g = graph_from_json(read_input(graph_path, io));
  const SolveResult result = exact_eta(g, max_k, options);
  if (as_json) {
    io.out << solve_result_to_json(result);
  } else if (result.eta) {
    io.out << "eta: " << *result.eta << "\n"
           << "witness:";
    for (Label l : result.witness->labels()) io.out << " " << l;
    io.out << "\nnodes_explored: " << result.nodes_explored << "\n";
  } else {
    io.out << "eta: exceeds budget (no d-lucky labeling into [" << max_k << "])\n"
           << "nodes_explored: " << result.nodes_explored << "\n";
  }
  return result.eta ? kOk : kNegative;
}

int cmd_export_dot(const std::string& graph_path,
                   const std::string& labeling_path, const std::string& out_path,
                   Streams& io) {
  const Graph g = graph_from_json(read_input(graph_path, io));
  std::optional<LabelingFile> lf;
  if (!labeling_path.empty()) {
    lf = labeling_from_json(read_input(labeling_path, io));
    if (lf->labeling.size() != g.vertex_count()) {
      throw UsageError("labeling does not match the graph's vertex count");
    }
  }
  write_output(out_path,
               to_dot(g, lf ? &lf->labeling : nullptr, lf ? &lf->roles : nullptr),
               io);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"d-lucky labelings: family generators, explicit labelings, "
               "verification, lower bounds and exact search",
               "dlucky"};
  app.require_subcommand(1);
  app.allow_extras(false);

  const std::vector<std::string> gen_families = {
      "complete", "path", "cycle", "corona", "cylinder", "web", "multipartite", "cocktail"};
  const std::vector<std::string> label_families = {"corona", "web", "cocktail"};

  FamilyArgs gen_args;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("gen", "write a family graph as JSON");
  gen->add_option("family", gen_args.family, "graph family")
      ->required()
      ->check(CLI::IsMember(gen_families));
  gen_args.register_on(gen);
  gen->add_option("--out,-o", gen_out, "output file ('-' for stdout)");

  FamilyArgs label_args;
  std::string label_out = "-", label_graph_out;
  bool label_table = false;
  auto* label = app.add_subcommand("label", "write the explicit labeling of a family");
  label->add_option("family", label_args.family, "labeled family")
      ->required()
      ->check(CLI::IsMember(label_families));
  label_args.register_on(label);
  label->add_option("--out,-o", label_out, "labeling output ('-' for stdout)");
  label->add_option("--graph-out", label_graph_out, "also write the graph");
  label->add_flag("--table", label_table, "print the per-role d-sum table");

  std::string verify_graph, verify_labeling;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "check a labeling for d-luckiness");
  verify_cmd->add_option("graph", verify_graph, "graph JSON")->required();
  verify_cmd->add_option("labeling", verify_labeling, "labeling JSON")->required();
  verify_cmd->add_flag("--json", verify_json, "emit the report as JSON");

  std::string bound_graph;
  std::size_t bound_cap = kDefaultCliqueVertexCap;
  bool bound_json = false;
  auto* bound = app.add_subcommand("bound", "clique lower bound on the d-lucky number");
  bound->add_option("graph", bound_graph, "graph JSON")->required();
  bound->add_option("--vertex-cap", bound_cap, "refuse larger graphs")
      ->check(CLI::PositiveNumber);
  bound->add_flag("--json", bound_json, "emit JSON");

  std::string solve_graph;
  Label solve_max_k = 8;
  SolveOptions solve_options;
  bool solve_json = false;
  auto* solve = app.add_subcommand("solve", "exact d-lucky number by exhaustive search");
  solve->add_option("graph", solve_graph, "graph JSON")->required();
  solve->add_option("--max-k", solve_max_k, "largest label budget to try")
      ->check(CLI::PositiveNumber);
  solve->add_option("--vertex-cap", solve_options.vertex_cap, "refuse larger graphs")
      ->check(CLI::PositiveNumber);
  solve->add_option("--threads", solve_options.threads,
                    "split the first vertex's labels across workers")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--json", solve_json, "emit JSON");

  std::string dot_graph, dot_labeling, dot_out = "-";
  auto* dot = app.add_subcommand("export-dot", "render a graph (and labeling) as DOT");
  dot->add_option("graph", dot_graph, "graph JSON")->required();
  dot->add_option("--labeling", dot_labeling, "labeling JSON to annotate with");
  dot->add_option("--out,-o", dot_out, "output file ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args, gen_out, io);
    if (*label) return cmd_label(label_args, label_out, label_graph_out, label_table, io);
    if (*verify_cmd) return cmd_verify(verify_graph, verify_labeling, verify_json, io);
    if (*bound) return cmd_bound(bound_graph, bound_cap, bound_json, io);
    if (*solve) return cmd_solve(solve_graph, solve_max_k, solve_options, solve_json, io);
    return cmd_export_dot(dot_graph, dot_labeling, dot_out, io);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kNegative;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace dlucky::cli
