#include "cnfgraph/simplify.h"

#include <algorithm>
#include <map>

#include "cnfgraph/error.h"

namespace cnfgraph {

std::string_view result_name(SimplifyOutcome::Result r) {
  switch (r) {
    case SimplifyOutcome::Result::kUnsatisfiable: return "UNSAT";
    case SimplifyOutcome::Result::kTriviallyTrue: return "TRIVIALLY-TRUE";
    case SimplifyOutcome::Result::kSimple: return "SIMPLE";
  }
  return "?";
}

namespace {

bool is_pair_clause(const Clause& c, VariableId a, VariableId b) {
  return c.size() == 2 && c.contains(a) && c.contains(b);
}

bool has_units(const Cnf2& s) {
  return std::ranges::any_of(s.clauses(),
                             [](const Clause& c) { return c.size() == 1; });
}

void apply_step(Rewrite& rw, const SubstitutionStep& step) {
  rw.cnf = substitute(rw.cnf, step);
  rw.trace.push_back(step);
}

}  // namespace

int count_pair_clauses(const Cnf2& s, VariableId a, VariableId b) {
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument, "pair needs distinct variables");
  }
  return static_cast<int>(std::ranges::count_if(
      s.clauses(), [&](const Clause& c) { return is_pair_clause(c, a, b); }));
}

Rewrite eliminate_units(const Cnf2& s) {
  Rewrite rw{s, {}};
  while (rw.cnf.is_nontrivial()) {
    auto unit = std::ranges::find_if(
        rw.cnf.clauses(), [](const Clause& c) { return c.size() == 1; });
    if (unit == rw.cnf.clauses().end()) break;
    // Binding the first unit's literal true also falsifies a complementary
    // unit, so a contradictory pair lands on False here.
    const Literal lit = (*unit)[0];
    apply_step(rw, SubstitutionStep::set_constant(lit.var(), lit.is_positive()));
  }
  return rw;
}

Rewrite collapse_pair(const Cnf2& s, VariableId a, VariableId b) {
  if (has_units(s)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "collapse_pair requires a CNF without unit clauses");
  }
  std::vector<Clause> pair;
  for (const Clause& c : s.clauses()) {
    if (is_pair_clause(c, a, b)) pair.push_back(c);
  }
  if (pair.size() < 2) {
    throw Error(ErrorCode::kPreconditionViolated,
                "pair multiplicity " + std::to_string(pair.size()) + " < 2");
  }

  Rewrite rw{s, {}};
  switch (pair.size()) {
    case 4:
      // a:=T leaves the units (b) and (-b); b:=T then empties (-b).
      apply_step(rw, SubstitutionStep::set_true(a));
      apply_step(rw, SubstitutionStep::set_true(b));
      break;
    case 3: {
      // The three clauses force both literals of the missing clause false.
      Literal missing_a = Literal::positive(a), missing_b = Literal::positive(b);
      for (Literal la : {Literal::positive(a), Literal::negative(a)}) {
        for (Literal lb : {Literal::positive(b), Literal::negative(b)}) {
          if (std::ranges::find(pair, Clause(la, lb)) == pair.end()) {
            missing_a = la;
            missing_b = lb;
          }
        }
      }
      apply_step(rw, SubstitutionStep::set_constant(a, !missing_a.is_positive()));
      apply_step(rw, SubstitutionStep::set_constant(b, !missing_b.is_positive()));
      break;
    }
    case 2: {
      const Literal la1 = pair[0].literal_of(a), lb1 = pair[0].literal_of(b);
      const Literal la2 = pair[1].literal_of(a), lb2 = pair[1].literal_of(b);
      if (la1 == la2) {
        apply_step(rw, SubstitutionStep::set_constant(a, la1.is_positive()));
      } else if (lb1 == lb2) {
        apply_step(rw, SubstitutionStep::set_constant(b, lb1.is_positive()));
      } else {
        // (la | lb) & (-la | -lb) forces lb == -la.
        const Literal image = lb1.is_positive() ? la1.negated() : la1;
        apply_step(rw, SubstitutionStep::by_literal(b, image));
      }
      break;
    }
  }
  return rw;
}

SimplifyOutcome to_simple(const Cnf2& s) {
  Cnf2 current = s;
  Trace trace;
  auto append = [&](Rewrite rw) {
    current = std::move(rw.cnf);
    trace.insert(trace.end(), rw.trace.begin(), rw.trace.end());
  };

  while (true) {
    append(eliminate_units(current));
    if (current.is_false()) {
      return {SimplifyOutcome::Result::kUnsatisfiable, current, trace};
    }
    if (current.is_true()) {
      return {SimplifyOutcome::Result::kTriviallyTrue, current, trace};
    }
    std::map<std::pair<VariableId, VariableId>, int> multiplicity;
    for (const Clause& c : current.clauses()) {
      if (c.size() == 2) ++multiplicity[{c[0].var(), c[1].var()}];
    }
    auto it = std::ranges::find_if(multiplicity,
                                   [](const auto& kv) { return kv.second >= 2; });
    if (it == multiplicity.end()) {
      return {SimplifyOutcome::Result::kSimple, current, trace};
    }
    append(collapse_pair(current, it->first.first, it->first.second));
  }
}

Assignment lift_model(const SimplifyOutcome& outcome, const Assignment& model) {
  if (outcome.result() == SimplifyOutcome::Result::kUnsatisfiable) {
    throw Error(ErrorCode::kModelInvalid,
                "an unsatisfiable outcome has no models");
  }
  if (!apply_assignment(outcome.cnf(), model).is_true()) {
    throw Error(ErrorCode::kModelInvalid,
                "model does not satisfy the simplified CNF");
  }
  std::map<VariableId, bool> values = model.bindings();
  const Trace& trace = outcome.trace();
  for (auto step = trace.rbegin(); step != trace.rend(); ++step) {
    bool value = false;
    switch (step->kind()) {
      case SubstitutionStep::Kind::kConstTrue: value = true; break;
      case SubstitutionStep::Kind::kConstFalse: value = false; break;
      case SubstitutionStep::Kind::kByLiteral: {
        const Literal r = step->replacement();
        const bool base = values.try_emplace(r.var(), false).first->second;
        value = r.is_positive() ? base : !base;
        break;
      }
    }
    values[step->target()] = value;
  }
  Assignment lifted;
  for (const auto& [v, b] : values) lifted.bind(v, b);
  return lifted;
}

Cnf2 replay(const Cnf2& s, const Trace& trace) {
  Cnf2 current = s;
  for (const SubstitutionStep& step : trace) current = substitute(current, step);
  return current;
}

}  // namespace cnfgraph
