#ifndef CNFGRAPH_SAT_H_
#define CNFGRAPH_SAT_H_

#include <optional>

#include "cnfgraph/formula.h"

namespace cnfgraph {

// Outcome of a 2-SAT decision. A satisfiable result carries a model that is
// total over the formula's variables. An unsatisfiable result names a
// variable whose two literals share a strongly connected component of the
// implication graph; the constant false has no such variable.
class SolveResult {
 public:
  static SolveResult satisfiable(Assignment model);
  static SolveResult unsatisfiable(std::optional<VariableId> conflict_var);

  bool is_satisfiable() const { return satisfiable_; }
  const Assignment& model() const { return model_; }
  std::optional<VariableId> conflict_var() const { return conflict_var_; }

 private:
  SolveResult(bool sat, Assignment model, std::optional<VariableId> conflict)
      : satisfiable_(sat), model_(std::move(model)), conflict_var_(conflict) {}

  bool satisfiable_;
  Assignment model_;
  std::optional<VariableId> conflict_var_;
};

// Implication graph + Tarjan SCC. Unit clauses (a) contribute -a -> a.
SolveResult solve(const Cnf2& s);

bool check_model(const Cnf2& s, const Assignment& m);

}  // namespace cnfgraph

#endif  // CNFGRAPH_SAT_H_
