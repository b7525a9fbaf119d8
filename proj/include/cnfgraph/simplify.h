#ifndef CNFGRAPH_SIMPLIFY_H_
#define CNFGRAPH_SIMPLIFY_H_

// Rewrites a reduced CNF with clauses of length <= 2 into an equisatisfiable
// simple 2-CNF (at most one clause per variable pair, no unit clauses), the
// constant true, or an unsatisfiability verdict. Every rewrite is a recorded
// SubstitutionStep, so the trace replays on the input and models of the
// output lift back to models of the input.

#include <vector>

#include "cnfgraph/formula.h"

namespace cnfgraph {

using Trace = std::vector<SubstitutionStep>;

struct Rewrite {
  Cnf2 cnf;
  Trace trace;
};

class SimplifyOutcome {
 public:
  enum class Result { kUnsatisfiable, kTriviallyTrue, kSimple };

  SimplifyOutcome(Result result, Cnf2 cnf, Trace trace)
      : result_(result), cnf_(std::move(cnf)), trace_(std::move(trace)) {}

  Result result() const { return result_; }
  // False, True or the simple CNF, matching `result()`.
  const Cnf2& cnf() const { return cnf_; }
  const Trace& trace() const { return trace_; }

 private:
  Result result_;
  Cnf2 cnf_;
  Trace trace_;
};

std::string_view result_name(SimplifyOutcome::Result r);

// Number of clauses over exactly the variables {a, b}; a != b.
int count_pair_clauses(const Cnf2& s, VariableId a, VariableId b);

// Unit propagation. The output has no unit clauses or is False; a
// complementary unit pair is recorded as a binding that yields False.
Rewrite eliminate_units(const Cnf2& s);

// Removes every (a,b)-clause of a pair with multiplicity >= 2. Requires no
// unit clauses; throws kPreconditionViolated for multiplicity < 2.
Rewrite collapse_pair(const Cnf2& s, VariableId a, VariableId b);

SimplifyOutcome to_simple(const Cnf2& s);

// Extends a model of the simplified CNF to one of the original by replaying
// the trace backwards. A replacement variable that is still unbound when its
// step is replayed is bound to false first. Throws kModelInvalid if `model`
// does not satisfy the simplified CNF or the outcome is Unsatisfiable.
Assignment lift_model(const SimplifyOutcome& outcome, const Assignment& model);

// Folds `substitute` over the trace.
Cnf2 replay(const Cnf2& s, const Trace& trace);

}  // namespace cnfgraph

#endif  // CNFGRAPH_SIMPLIFY_H_
