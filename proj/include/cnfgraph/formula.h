#ifndef CNFGRAPH_FORMULA_H_
#define CNFGRAPH_FORMULA_H_

// Variables, literals, clauses and reduced CNFs with at most two literals per
// clause. The eight reduction identities (constant absorption, idempotence of
// conjunction and disjunction, double negation, excluded middle) are applied
// eagerly, so every Cnf2 value is reduced by construction. The constants
// true/false only exist in the raw layer consumed by `reduce`.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cnfgraph {

// 1-based variable index, compatible with DIMACS numbering.
class VariableId {
 public:
  explicit VariableId(std::uint32_t index);

  std::uint32_t index() const { return index_; }

  friend auto operator<=>(VariableId, VariableId) = default;

 private:
  std::uint32_t index_;
};

enum class Sign : std::uint8_t { kPositive = 0, kNegative = 1 };

class Literal {
 public:
  Literal(VariableId var, Sign sign) : var_(var), sign_(sign) {}

  static Literal positive(VariableId v) { return {v, Sign::kPositive}; }
  static Literal negative(VariableId v) { return {v, Sign::kNegative}; }
  // Nonzero signed DIMACS integer.
  static Literal from_dimacs(std::int64_t value);

  VariableId var() const { return var_; }
  Sign sign() const { return sign_; }
  bool is_positive() const { return sign_ == Sign::kPositive; }
  Literal negated() const {
    return {var_, is_positive() ? Sign::kNegative : Sign::kPositive};
  }
  std::int64_t to_dimacs() const;

  // Ordered by (variable, sign) with positive before negative.
  friend auto operator<=>(const Literal&, const Literal&) = default;

 private:
  VariableId var_;
  Sign sign_;
};

// A reduced clause of one or two literals over distinct variables, stored in
// canonical (sorted) order.
class Clause {
 public:
  explicit Clause(Literal a);
  // Throws kInvalidArgument when both literals share a variable; x|x and
  // x|-x are reduced away before a Clause is formed.
  Clause(Literal a, Literal b);

  std::size_t size() const { return size_; }
  std::span<const Literal> literals() const {
    return {literals_.data(), size_};
  }
  const Literal& operator[](std::size_t i) const { return literals_[i]; }

  bool contains(VariableId v) const;
  // The literal over `v`; `v` must occur in the clause.
  Literal literal_of(VariableId v) const;
  // For a binary clause, the literal not over `v`.
  Literal other_literal(VariableId v) const;

  friend bool operator==(const Clause& a, const Clause& b);
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b);

 private:
  std::array<Literal, 2> literals_;
  std::size_t size_;
};

// Tri-state reduced CNF: true, false, or a nonempty set of distinct clauses.
class Cnf2 {
 public:
  enum class State { kTrue, kFalse, kNontrivial };

  static Cnf2 top();
  static Cnf2 bottom();
  // Deduplicates; an empty clause list is the constant true.
  static Cnf2 from_clauses(std::vector<Clause> clauses);

  State state() const { return state_; }
  bool is_true() const { return state_ == State::kTrue; }
  bool is_false() const { return state_ == State::kFalse; }
  bool is_nontrivial() const { return state_ == State::kNontrivial; }

  std::span<const Clause> clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  // Sorted, distinct variables occurring in some clause.
  std::vector<VariableId> variables() const;
  std::optional<VariableId> max_variable() const;
  bool mentions(VariableId v) const;

  friend bool operator==(const Cnf2&, const Cnf2&) = default;

 private:
  Cnf2(State state, std::vector<Clause> clauses)
      : state_(state), clauses_(std::move(clauses)) {}

  State state_;
  std::vector<Clause> clauses_;
};

class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const VariableId, bool>> init)
      : bindings_(init) {}

  // Throws kInvalidArgument if `v` is already bound.
  void bind(VariableId v, bool value);
  std::optional<bool> value(VariableId v) const;
  bool contains(VariableId v) const { return bindings_.count(v) != 0; }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }
  const std::map<VariableId, bool>& bindings() const { return bindings_; }
  // Truth value of a literal, if its variable is bound.
  std::optional<bool> value(Literal lit) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<VariableId, bool> bindings_;
};

// Replaces every occurrence of `target` by a constant or by another literal.
class SubstitutionStep {
 public:
  enum class Kind { kConstTrue, kConstFalse, kByLiteral };

  static SubstitutionStep set_true(VariableId target);
  static SubstitutionStep set_false(VariableId target);
  static SubstitutionStep set_constant(VariableId target, bool value);
  // Throws kInvalidArgument when `replacement` is over `target` itself.
  static SubstitutionStep by_literal(VariableId target, Literal replacement);

  VariableId target() const { return target_; }
  Kind kind() const { return kind_; }
  // Only meaningful for kByLiteral.
  Literal replacement() const { return replacement_; }
  // Image of a literal over `target` under this step.
  std::variant<Literal, bool> image(Literal lit) const;

  friend bool operator==(const SubstitutionStep&,
                         const SubstitutionStep&) = default;

 private:
  SubstitutionStep(VariableId target, Kind kind, Literal replacement)
      : target_(target), kind_(kind), replacement_(replacement) {}

  VariableId target_;
  Kind kind_;
  Literal replacement_;
};

enum class Constant { kTrue, kFalse };
using RawLiteral = std::variant<Literal, Constant>;
// An unreduced disjunction. An empty RawClause is the empty disjunction
// (false).
using RawClause = std::vector<RawLiteral>;

// Applies the reduction identities to a fixpoint. Throws kClauseTooLong if a
// clause keeps more than two literals after reduction.
Cnf2 reduce(std::span<const RawClause> raw);

// True iff `reduce` would leave the raw clause list unchanged: no constants,
// no repeated or complementary literals inside a clause, no repeated clauses.
bool is_reduced(std::span<const RawClause> raw);
// Cnf2 values are reduced by construction.
bool is_reduced(const Cnf2& s);

Cnf2 substitute(const Cnf2& s, const SubstitutionStep& step);
Cnf2 apply_assignment(const Cnf2& s, const Assignment& asg);

std::vector<VariableId> clause_support(const Clause& c);

std::vector<RawClause> to_raw(const Cnf2& s);

struct DimacsDocument {
  std::uint32_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::vector<RawClause> clauses;
};

// Throws kParseError, kClauseTooLong or kVariableOutOfRange.
DimacsDocument read_dimacs(std::string_view text);
Cnf2 parse_dimacs(std::string_view text);

// Writes a `p cnf` header and one clause per line in canonical order. The
// variable count is max(num_vars, largest variable). False is written as a
// single empty clause.
void write_dimacs(std::ostream& out, const Cnf2& s, std::uint32_t num_vars = 0,
                  std::span<const std::string> comments = {});
std::string to_dimacs(const Cnf2& s, std::uint32_t num_vars = 0);

std::string to_string(Literal lit);
std::string to_string(const Clause& c);
std::string to_string(const Cnf2& s);
std::string to_string(const SubstitutionStep& step);

std::ostream& operator<<(std::ostream& os, VariableId v);
std::ostream& operator<<(std::ostream& os, Literal lit);
std::ostream& operator<<(std::ostream& os, const Clause& c);
std::ostream& operator<<(std::ostream& os, const Cnf2& s);
std::ostream& operator<<(std::ostream& os, const SubstitutionStep& step);

}  // namespace cnfgraph

#endif  // CNFGRAPH_FORMULA_H_
