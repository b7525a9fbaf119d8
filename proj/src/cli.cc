#include "cnfgraph/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "cnfgraph/enumerate.h"
#include "cnfgraph/error.h"
#include "cnfgraph/fixtures.h"
#include "cnfgraph/formula.h"
#include "cnfgraph/graph.h"
#include "cnfgraph/minors.h"
#include "cnfgraph/sat.h"
#include "cnfgraph/simplify.h"
#include "cnfgraph/witness.h"

namespace cnfgraph {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
}

// DIMACS starts with a `c` comment or the `p` header; edge lists use `#`.
bool looks_like_dimacs(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token.starts_with("#")) {
      std::string rest;
      std::getline(is, rest);
      continue;
    }
    return token == "c" || token == "p";
  }
  return false;
}

SimpleGraph load_graph(const std::string& input, const std::string& fixture_name,
                       std::istream& in) {
  if (!fixture_name.empty()) return fixture(fixture_name);
  return parse_edge_list(read_input(input, in));
}

std::uint32_t declared_and_used(const DimacsDocument& doc, const Cnf2& s) {
  std::uint32_t n = doc.num_vars;
  if (auto mv = s.max_variable()) n = std::max(n, mv->index());
  return n;
}

std::uint64_t graph_hash(const SimpleGraph& g) {
  std::ostringstream canon;
  for (VertexId v : g.vertices()) canon << v << ',';
  canon << ';';
  for (const Edge& e : g.edges()) canon << e.u << '-' << e.v << ',';
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> embedding_lines(const Embedding& emb) {
  std::vector<std::string> lines;
  for (const auto& [pv, hv] : emb.branch_map) {
    lines.push_back("branch " + std::to_string(pv) + " -> " + std::to_string(hv));
  }
  for (const auto& [e, path] : emb.path_map) {
    std::string line = "path " + std::to_string(e.u) + "-" + std::to_string(e.v) + ":";
    for (VertexId v : path) line += " " + std::to_string(v);
    lines.push_back(std::move(line));
  }
  return lines;
}

json embedding_json(const Embedding& emb) {
  json branch = json::object();
  for (const auto& [pv, hv] : emb.branch_map) branch[std::to_string(pv)] = hv;
  json paths = json::array();
  for (const auto& [e, path] : emb.path_map) {
    paths.push_back({{"edge", {e.u, e.v}}, {"path", path}});
  }
  return {{"branch_map", branch}, {"paths", paths}};
}

DotStyle embedding_style(const Embedding& emb) {
  DotStyle style;
  for (const auto& [_, hv] : emb.branch_map) style.highlighted_vertices.insert(hv);
  for (const auto& [_, path] : emb.path_map) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      style.highlighted_edges.insert(Edge::of(path[i], path[i + 1]));
    }
  }
  return style;
}

int cmd_reduce(const std::string& input, std::istream& in, std::ostream& out) {
  const DimacsDocument doc = read_dimacs(read_input(input, in));
  const Cnf2 s = reduce(doc.clauses);
  const SimplifyOutcome outcome = to_simple(s);
  std::vector<std::string> comments{"outcome " +
                                    std::string(result_name(outcome.result()))};
  for (const SubstitutionStep& step : outcome.trace()) {
    comments.push_back("step " + to_string(step));
  }
  write_dimacs(out, outcome.cnf(), declared_and_used(doc, s), comments);
  return kExitOk;
}

int cmd_solve(const std::string& input, std::istream& in, std::ostream& out) {
  const DimacsDocument doc = read_dimacs(read_input(input, in));
  const Cnf2 s = reduce(doc.clauses);
  const SolveResult result = solve(s);
  if (!result.is_satisfiable()) {
    out << "UNSAT\n";
    if (auto v = result.conflict_var()) {
      out << "c conflict variable " << v->index() << '\n';
    }
    return kExitUnsat;
  }
  out << "SAT\nv";
  const std::uint32_t n = declared_and_used(doc, s);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const bool value = result.model().value(VariableId(i)).value_or(false);
    out << ' ' << (value ? "" : "-") << i;
  }
  out << " 0\n";
  return kExitOk;
}

struct AnalyzeFlags {
  std::string input = "-";
  std::string fixture;
  bool witness = false;
  std::string witness_file;
  std::string dot;
  bool json = false;
};

int cmd_analyze(const AnalyzeFlags& flags, std::istream& in, std::ostream& out) {
  json report{{"format_version", 1}};
  std::vector<std::string> lines;
  SimpleGraph g;

  const std::string text =
      flags.fixture.empty() ? read_input(flags.input, in) : std::string();
  if (flags.fixture.empty() && looks_like_dimacs(text)) {
    const SimplifyOutcome outcome = to_simple(parse_dimacs(text));
    const std::string_view result = result_name(outcome.result());
    report["input"] = "dimacs";
    report["simplify"] = result;
    lines.push_back("simplify: " + std::string(result));
    if (outcome.result() != SimplifyOutcome::Result::kSimple) {
      report["verdict"] = nullptr;
      if (flags.json) {
        out << report.dump(2) << '\n';
      } else {
        for (const auto& l : lines) out << l << '\n';
      }
      return kExitOk;
    }
    g = associated_graph(outcome.cnf());
  } else {
    g = flags.fixture.empty() ? parse_edge_list(text) : fixture(flags.fixture);
    report["input"] = flags.fixture.empty() ? "graph" : "fixture:" + flags.fixture;
  }

  report["vertices"] = g.num_vertices();
  report["edges"] = g.num_edges();
  lines.push_back("graph: " + std::to_string(g.num_vertices()) + " vertices, " +
                  std::to_string(g.num_edges()) + " edges");

  const Verdict verdict = decide_membership(g);
  std::optional<Cnf2> witness;
  if (verdict.in_u()) {
    const InU& evidence = verdict.evidence();
    const std::string name(pattern_name(evidence.pattern));
    report["verdict"] = "InU";
    report["pattern"] = name;
    report["embedding"] = embedding_json(evidence.embedding);
    lines.push_back("InU, pattern=" + name);
    for (auto& l : embedding_lines(evidence.embedding)) lines.push_back(std::move(l));
    if (flags.witness || !flags.witness_file.empty()) {
      witness = synthesize_witness(g, verdict);
    }
  } else {
    const std::string name(reason_name(verdict.reason()));
    report["verdict"] = "NotInU";
    report["reason"] = name;
    lines.push_back("NotInU, reason=" + name);
  }

  std::vector<std::string> witness_comments{
      "witness: unsatisfiable 2-CNF supported on the analyzed graph",
      "variable i is host vertex i"};
  auto witness_text = [&] {
    std::ostringstream os;
    write_dimacs(os, *witness, 0, witness_comments);
    return os.str();
  };

  report["witness_path"] = nullptr;
  if (witness && !flags.witness_file.empty()) {
    write_file(flags.witness_file, witness_text());
    report["witness_path"] = flags.witness_file;
    lines.push_back("witness written to " + flags.witness_file);
  }
  if (!flags.dot.empty()) {
    const DotStyle style =
        verdict.in_u() ? embedding_style(verdict.evidence().embedding) : DotStyle{};
    write_file(flags.dot, to_dot(g, style));
    lines.push_back("dot written to " + flags.dot);
  }

  if (flags.json) {
    if (flags.witness) report["witness"] = witness ? json(witness_text()) : json(nullptr);
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  if (!flags.witness) {
    for (const auto& l : lines) out << l << '\n';
    return kExitOk;
  }
  for (const auto& l : lines) out << "c " << l << '\n';
  if (witness) {
    out << witness_text();
  } else {
    out << "c no witness: the graph is not in U\n";
  }
  return kExitOk;
}

struct CensusFlags {
  std::string input = "-";
  std::string fixture;
  std::size_t cap = kDefaultEdgeCap;
  unsigned threads = 1;
  bool machine = false;
};

int cmd_census(const CensusFlags& flags, std::istream& in, std::ostream& out) {
  const SimpleGraph g = load_graph(flags.input, flags.fixture, in);
  CensusOptions options;
  options.cap = flags.cap;
  options.threads = flags.threads;
  const CensusReport report = census(g, options);
  if (flags.machine) {
    out << "census hash=" << std::hex << std::setw(16) << std::setfill('0')
        << graph_hash(g) << std::dec << " vertices=" << g.num_vertices()
        << " edges=" << g.num_edges() << " total=" << report.total
        << " sat=" << report.sat_count << " unsat=" << report.unsat_count << '\n';
    return kExitOk;
  }
  out << "graph: " << g.num_vertices() << " vertices, " << g.num_edges()
      << " edges\n"
      << report.total << " total, " << report.sat_count << " sat, "
      << report.unsat_count << " unsat\n";
  if (report.example_unsat) {
    out << "first unsat: " << *report.example_unsat << '\n';
  }
  return kExitOk;
}

int cmd_minor(const std::string& pattern_text, const std::string& input,
              const std::string& fixture_name, std::size_t cap, std::istream& in,
              std::ostream& out) {
  const auto pattern = parse_pattern(pattern_text);
  if (!pattern) throw UsageError("unknown pattern '" + pattern_text + "'");
  const SimpleGraph g = load_graph(input, fixture_name, in);
  const auto emb = find_topological_minor(g, *pattern, cap);
  if (!emb) {
    out << "none\n";
    return kExitOk;
  }
  out << "found " << pattern_name(*pattern) << '\n';
  for (const auto& l : embedding_lines(*emb)) out << l << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kClauseTooLong:
    case ErrorCode::kVariableOutOfRange:
      return kExitParse;
    case ErrorCode::kHostTooLarge:
    case ErrorCode::kTooManyEdges:
      return kExitResourceCap;
    case ErrorCode::kUnknownFixture:
      return kExitUsage;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"2-CNF reduction, satisfiability and U-membership toolkit",
               "cnfgraph"};
  app.require_subcommand(1);

  std::string reduce_input = "-";
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Rewrite a DIMACS 2-CNF into a simple one");
  reduce_cmd->add_option("input", reduce_input, "DIMACS file, - for stdin");

  std::string solve_input = "-";
  auto* solve_cmd = app.add_subcommand("solve", "Decide a DIMACS 2-CNF");
  solve_cmd->add_option("input", solve_input, "DIMACS file, - for stdin");

  AnalyzeFlags analyze;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Decide whether a graph is in U");
  analyze_cmd->add_option("input", analyze.input,
                          "edge list or DIMACS file, - for stdin");
  analyze_cmd->add_option("--fixture", analyze.fixture, "named fixture graph");
  analyze_cmd->add_flag("--witness", analyze.witness,
                        "emit an unsatisfiable DIMACS witness");
  analyze_cmd->add_option("--witness-file", analyze.witness_file,
                          "write the witness to this path");
  analyze_cmd->add_option("--dot", analyze.dot, "write Graphviz DOT to this path");
  analyze_cmd->add_flag("--json", analyze.json, "JSON report");

  CensusFlags census_flags;
  auto* census_cmd = app.add_subcommand(
      "census", "Count unsatisfiable simple 2-CNFs supported on a graph");
  census_cmd->add_option("input", census_flags.input, "edge list, - for stdin");
  census_cmd->add_option("--fixture", census_flags.fixture, "named fixture graph");
  census_cmd->add_option("--cap", census_flags.cap, "maximum number of edges");
  census_cmd->add_option("--threads", census_flags.threads,
                         "worker threads, 0 for all cores");
  census_cmd->add_flag("--machine", census_flags.machine,
                       "single-line key=value record");

  std::string minor_pattern, minor_input = "-", minor_fixture;
  std::size_t minor_cap = kDefaultHostCap;
  auto* minor_cmd = app.add_subcommand(
      "minor", "Search for a pattern as a topological minor");
  minor_cmd->add_option("pattern", minor_pattern, "VConfig, PConfig, K4 or K113")
      ->required();
  minor_cmd->add_option("input", minor_input, "edge list, - for stdin");
  minor_cmd->add_option("--fixture", minor_fixture, "named fixture graph");
  minor_cmd->add_option("--cap", minor_cap, "maximum host vertices");

  std::string fixture_name;
  auto* fixture_cmd =
      app.add_subcommand("fixture", "Print a named graph as an edge list");
  fixture_cmd->add_option("name", fixture_name, "fixture name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*reduce_cmd) return cmd_reduce(reduce_input, in, out);
    if (*solve_cmd) return cmd_solve(solve_input, in, out);
    if (*analyze_cmd) return cmd_analyze(analyze, in, out);
    if (*census_cmd) return cmd_census(census_flags, in, out);
    if (*minor_cmd) {
      return cmd_minor(minor_pattern, minor_input, minor_fixture, minor_cap, in,
                       out);
    }
    out << to_edge_list(fixture(fixture_name), fixture_name);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace cnfgraph
