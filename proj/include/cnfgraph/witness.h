#ifndef CNFGRAPH_WITNESS_H_
#define CNFGRAPH_WITNESS_H_

// Unsatisfiable simple 2-CNFs supported exactly on a given graph, built from
// the four base formulas and carried across subdivision, subgraph extension
// and edge contraction. Variables are named by host vertex ids.

#include <map>
#include <optional>

#include "cnfgraph/formula.h"
#include "cnfgraph/graph.h"
#include "cnfgraph/minors.h"

namespace cnfgraph {

struct BaseFormula {
  PatternId pattern;
  Cnf2 cnf;
};

// The unsatisfiable formula whose associated graph is pattern_graph(p), with
// variables a, b, c, ... named 1, 2, 3, ...
//   VConfig  (a|b)(-a|c)(-b|c)(-c|d)(-c|e)(-d|-e)
//   PConfig  (a|b)(-a|c)(-b|c)(-c|d)(-d|e)(-d|f)(-e|-f)
//   K4       (a|b)(a|c)(-a|d)(-b|-c)(b|-d)(c|-d)
//   K113     (a|b)(-a|d)(b|c)(-b|d)(-b|e)(-c|-d)(-d|-e)
BaseFormula base_formula(PatternId p);

// Simultaneous renaming. Variables absent from `map` keep their names.
// Throws kVariableCollision if two variables end up with the same name.
Cnf2 rename_variables(const Cnf2& s,
                      const std::map<VariableId, VariableId>& map);

// Replaces the (u,v)-clause (lu | lv) with (lu | w) & (-w | lv).
// Throws kEdgeAbsentInSupport, kVariableCollision if w occurs in s, and
// kPreconditionViolated if the pair carries more than one clause.
Cnf2 lift_subdivision(const Cnf2& s, Edge e, VariableId w);

// Drops the two clauses on w and adds the resolvent-shaped clause joining
// their other literals. Throws kDegreeNotTwo unless the neighbors of w are
// exactly u and v, and kSmoothingCreatesMultiEdge if u and v already share a
// clause.
Cnf2 unsubdivide_witness(const Cnf2& s, VariableId w, VariableId u,
                         VariableId v);

// Conjoins (x | y) for every edge of h missing from G(s). Throws
// kNotASubgraph unless G(s) is a labeled subgraph of h.
Cnf2 extend_to_supergraph(const Cnf2& s, const SimpleGraph& h);

// For the (u,v)-clause (lu | lv), substitutes lv := -lu and renames u to w.
// Throws kEdgeAbsentInSupport, kEdgeInTriangle or kVariableCollision.
Cnf2 contract_witness(const Cnf2& s, Edge e, VariableId w);

// None when g is not in U. Otherwise an unsatisfiable simple 2-CNF with
// associated graph equal to g minus its isolated vertices. Throws
// kInternalVerificationFailed if the construction does not check out.
std::optional<Cnf2> synthesize_witness(const SimpleGraph& g);

// Same, starting from an existing verdict for g.
std::optional<Cnf2> synthesize_witness(const SimpleGraph& g,
                                       const Verdict& verdict);

}  // namespace cnfgraph

#endif  // CNFGRAPH_WITNESS_H_
