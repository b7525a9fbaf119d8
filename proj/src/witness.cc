#include "cnfgraph/witness.h"

#include <algorithm>
#include <set>

#include "cnfgraph/error.h"
#include "cnfgraph/sat.h"

namespace cnfgraph {

namespace {

Literal lit(int dimacs) { return Literal::from_dimacs(dimacs); }

Cnf2 from_pairs(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Clause> clauses;
  for (auto [a, b] : pairs) clauses.emplace_back(lit(a), lit(b));
  return Cnf2::from_clauses(std::move(clauses));
}

std::string name(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// The unique clause over {u, v}.
const Clause& pair_clause(const Cnf2& s, Edge e) {
  const VariableId u(e.u), v(e.v);
  const Clause* found = nullptr;
  for (const Clause& c : s.clauses()) {
    if (c.size() != 2 || !c.contains(u) || !c.contains(v)) continue;
    if (found) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "pair " + name(e) + " carries more than one clause");
    }
    found = &c;
  }
  if (!found) {
    throw Error(ErrorCode::kEdgeAbsentInSupport,
                "no clause over " + name(e));
  }
  return *found;
}

void require_fresh(const Cnf2& s, VariableId w) {
  if (s.mentions(w)) {
    throw Error(ErrorCode::kVariableCollision,
                "variable " + std::to_string(w.index()) + " already occurs");
  }
}

std::vector<Clause> clauses_of(const Cnf2& s) {
  return {s.clauses().begin(), s.clauses().end()};
}

}  // namespace

BaseFormula base_formula(PatternId p) {
  switch (p) {
    case PatternId::kVConfig:
      return {p, from_pairs({{1, 2}, {-1, 3}, {-2, 3}, {-3, 4}, {-3, 5},
                             {-4, -5}})};
    case PatternId::kPConfig:
      return {p, from_pairs({{1, 2}, {-1, 3}, {-2, 3}, {-3, 4}, {-4, 5},
                             {-4, 6}, {-5, -6}})};
    case PatternId::kK4:
      return {p, from_pairs({{1, 2}, {1, 3}, {-1, 4}, {-2, -3}, {2, -4},
                             {3, -4}})};
    case PatternId::kK113:
      return {p, from_pairs({{1, 2}, {-1, 4}, {2, 3}, {-2, 4}, {-2, 5},
                             {-3, -4}, {-4, -5}})};
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown pattern");
}

Cnf2 rename_variables(const Cnf2& s,
                      const std::map<VariableId, VariableId>& map) {
  if (!s.is_nontrivial()) return s;
  auto image = [&map](VariableId v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  };
  std::set<VariableId> targets;
  for (VariableId v : s.variables()) {
    if (!targets.insert(image(v)).second) {
      throw Error(ErrorCode::kVariableCollision,
                  "renaming merges variable " +
                      std::to_string(image(v).index()));
    }
  }
  std::vector<Clause> out;
  for (const Clause& c : s.clauses()) {
    auto move = [&](Literal l) { return Literal(image(l.var()), l.sign()); };
    out.push_back(c.size() == 1 ? Clause(move(c[0]))
                                : Clause(move(c[0]), move(c[1])));
  }
  return Cnf2::from_clauses(std::move(out));
}

Cnf2 lift_subdivision(const Cnf2& s, Edge e, VariableId w) {
  const Clause target = pair_clause(s, e);
  require_fresh(s, w);
  const Literal lu = target.literal_of(VariableId(e.u));
  const Literal lv = target.literal_of(VariableId(e.v));
  std::vector<Clause> out;
  for (const Clause& c : s.clauses()) {
    if (c != target) out.push_back(c);
  }
  out.emplace_back(lu, Literal::positive(w));
  out.emplace_back(Literal::negative(w), lv);
  return Cnf2::from_clauses(std::move(out));
}

Cnf2 unsubdivide_witness(const Cnf2& s, VariableId w, VariableId u,
                         VariableId v) {
  std::vector<Clause> on_w, rest;
  for (const Clause& c : s.clauses()) {
    (c.contains(w) ? on_w : rest).push_back(c);
  }
  auto is_neighbor_clause = [&](const Clause& c, VariableId x) {
    return c.size() == 2 && c.contains(x);
  };
  if (u == v || on_w.size() != 2 ||
      !((is_neighbor_clause(on_w[0], u) && is_neighbor_clause(on_w[1], v)) ||
        (is_neighbor_clause(on_w[0], v) && is_neighbor_clause(on_w[1], u)))) {
    throw Error(ErrorCode::kDegreeNotTwo,
                "variable " + std::to_string(w.index()) +
                    " is not a degree-2 vertex between " +
                    std::to_string(u.index()) + " and " +
                    std::to_string(v.index()));
  }
  for (const Clause& c : rest) {
    if (c.size() == 2 && c.contains(u) && c.contains(v)) {
      throw Error(ErrorCode::kSmoothingCreatesMultiEdge,
                  "variables " + std::to_string(u.index()) + " and " +
                      std::to_string(v.index()) + " already share a clause");
    }
  }
  rest.emplace_back(on_w[0].other_literal(w), on_w[1].other_literal(w));
  return Cnf2::from_clauses(std::move(rest));
}

Cnf2 extend_to_supergraph(const Cnf2& s, const SimpleGraph& h) {
  const SimpleGraph g = associated_graph(s);
  if (!is_subgraph(g, h)) {
    throw Error(ErrorCode::kNotASubgraph,
                "support of the formula is not a subgraph of the target");
  }
  std::vector<Clause> out = clauses_of(s);
  for (const Edge& e : h.edges()) {
    if (!g.has_edge(e)) {
      out.emplace_back(Literal::positive(VariableId(e.u)),
                       Literal::positive(VariableId(e.v)));
    }
  }
  return Cnf2::from_clauses(std::move(out));
}

Cnf2 contract_witness(const Cnf2& s, Edge e, VariableId w) {
  const Clause edge_clause = pair_clause(s, e);
  require_fresh(s, w);
  if (in_triangle(associated_graph(s), e)) {
    throw Error(ErrorCode::kEdgeInTriangle,
                "edge " + name(e) + " lies in a triangle");
  }
  const VariableId u(e.u), v(e.v);
  const Literal lu = edge_clause.literal_of(u);
  const Literal lv = edge_clause.literal_of(v);
  // lv := -lu, i.e. v := -lu when lv is positive and v := lu otherwise.
  const Literal image = lv.is_positive() ? lu.negated() : lu;
  const Cnf2 merged = substitute(s, SubstitutionStep::by_literal(v, image));
  return rename_variables(merged, {{u, w}});
}

std::optional<Cnf2> synthesize_witness(const SimpleGraph& g) {
  return synthesize_witness(g, decide_membership(g));
}

std::optional<Cnf2> synthesize_witness(const SimpleGraph& g,
                                       const Verdict& verdict) {
  if (!verdict.in_u()) return std::nullopt;
  const auto& [pattern, emb] = verdict.evidence();

  std::map<VariableId, VariableId> naming;
  for (const auto& [pv, hv] : emb.branch_map) {
    naming.emplace(VariableId(pv), VariableId(hv));
  }
  Cnf2 s = rename_variables(base_formula(pattern).cnf, naming);

  for (const auto& [pe, path] : emb.path_map) {
    std::vector<VertexId> walk = path;
    if (walk.front() > walk.back()) std::ranges::reverse(walk);
    for (std::size_t i = 1; i + 1 < walk.size(); ++i) {
      s = lift_subdivision(s, Edge::of(walk[i - 1], walk.back()),
                           VariableId(walk[i]));
    }
  }
  s = extend_to_supergraph(s, g);

  SimpleGraph support = g;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) support.remove_vertex(v);
  }
  if (solve(s).is_satisfiable()) {
    throw Error(ErrorCode::kInternalVerificationFailed,
                "synthesized witness is satisfiable");
  }
  if (associated_graph(s) != support) {
    throw Error(ErrorCode::kInternalVerificationFailed,
                "synthesized witness is not supported on the input graph");
  }
  return s;
}

}  // namespace cnfgraph
