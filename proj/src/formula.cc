#include "cnfgraph/formula.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

#include "cnfgraph/error.h"

namespace cnfgraph {

VariableId::VariableId(std::uint32_t index) : index_(index) {
  if (index == 0) {
    throw Error(ErrorCode::kInvalidArgument, "variable index must be >= 1");
  }
}

Literal Literal::from_dimacs(std::int64_t value) {
  if (value == 0 || value == std::numeric_limits<std::int64_t>::min() ||
      (value > 0 ? value : -value) > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument,
                "not a DIMACS literal: " + std::to_string(value));
  }
  auto index = static_cast<std::uint32_t>(value > 0 ? value : -value);
  return {VariableId(index), value > 0 ? Sign::kPositive : Sign::kNegative};
}

std::int64_t Literal::to_dimacs() const {
  auto v = static_cast<std::int64_t>(var_.index());
  return is_positive() ? v : -v;
}

Clause::Clause(Literal a) : literals_{a, a}, size_(1) {}

Clause::Clause(Literal a, Literal b) : literals_{a, b}, size_(2) {
  if (a.var() == b.var()) {
    throw Error(ErrorCode::kInvalidArgument,
                "clause literals must be over distinct variables");
  }
  if (b < a) std::swap(literals_[0], literals_[1]);
}

bool Clause::contains(VariableId v) const {
  for (const Literal& l : literals()) {
    if (l.var() == v) return true;
  }
  return false;
}

Literal Clause::literal_of(VariableId v) const {
  for (const Literal& l : literals()) {
    if (l.var() == v) return l;
  }
  throw Error(ErrorCode::kInvalidArgument, "variable not in clause");
}

Literal Clause::other_literal(VariableId v) const {
  if (size_ != 2 || !contains(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "other_literal needs a binary clause over the variable");
  }
  return literals_[0].var() == v ? literals_[1] : literals_[0];
}

bool operator==(const Clause& a, const Clause& b) {
  return std::ranges::equal(a.literals(), b.literals());
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
  return std::lexicographical_compare_three_way(
      a.literals().begin(), a.literals().end(), b.literals().begin(),
      b.literals().end());
}

Cnf2 Cnf2::top() { return Cnf2(State::kTrue, {}); }
Cnf2 Cnf2::bottom() { return Cnf2(State::kFalse, {}); }

Cnf2 Cnf2::from_clauses(std::vector<Clause> clauses) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  if (clauses.empty()) return top();
  return Cnf2(State::kNontrivial, std::move(clauses));
}

std::vector<VariableId> Cnf2::variables() const {
  std::vector<VariableId> vars;
  for (const Clause& c : clauses_) {
    for (const Literal& l : c.literals()) vars.push_back(l.var());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::optional<VariableId> Cnf2::max_variable() const {
  std::optional<VariableId> best;
  for (const Clause& c : clauses_) {
    for (const Literal& l : c.literals()) {
      if (!best || *best < l.var()) best = l.var();
    }
  }
  return best;
}

bool Cnf2::mentions(VariableId v) const {
  return std::ranges::any_of(clauses_,
                             [v](const Clause& c) { return c.contains(v); });
}

void Assignment::bind(VariableId v, bool value) {
  auto [it, inserted] = bindings_.emplace(v, value);
  if (!inserted) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable " + std::to_string(v.index()) + " already bound");
  }
}

std::optional<bool> Assignment::value(VariableId v) const {
  auto it = bindings_.find(v);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

std::optional<bool> Assignment::value(Literal lit) const {
  auto v = value(lit.var());
  if (!v) return std::nullopt;
  return lit.is_positive() ? *v : !*v;
}

SubstitutionStep SubstitutionStep::set_true(VariableId target) {
  return {target, Kind::kConstTrue, Literal::positive(target)};
}

SubstitutionStep SubstitutionStep::set_false(VariableId target) {
  return {target, Kind::kConstFalse, Literal::positive(target)};
}

SubstitutionStep SubstitutionStep::set_constant(VariableId target, bool value) {
  return value ? set_true(target) : set_false(target);
}

SubstitutionStep SubstitutionStep::by_literal(VariableId target,
                                              Literal replacement) {
  if (replacement.var() == target) {
    throw Error(ErrorCode::kInvalidArgument,
                "a variable cannot be replaced by its own literal");
  }
  return {target, Kind::kByLiteral, replacement};
}

std::variant<Literal, bool> SubstitutionStep::image(Literal lit) const {
  switch (kind_) {
    case Kind::kConstTrue: return lit.is_positive();
    case Kind::kConstFalse: return !lit.is_positive();
    case Kind::kByLiteral:
      return lit.is_positive() ? replacement_ : replacement_.negated();
  }
  return lit;
}

namespace {

enum class ClauseFate { kTautology, kEmpty, kKept };

// Reduces one disjunction. On kKept, `out` holds the surviving literals.
ClauseFate reduce_clause(const RawClause& raw, std::vector<Literal>& out) {
  out.clear();
  for (const RawLiteral& item : raw) {
    if (const auto* c = std::get_if<Constant>(&item)) {
      if (*c == Constant::kTrue) return ClauseFate::kTautology;
      continue;
    }
    const Literal lit = std::get<Literal>(item);
    if (std::ranges::find(out, lit.negated()) != out.end()) {
      return ClauseFate::kTautology;
    }
    if (std::ranges::find(out, lit) == out.end()) out.push_back(lit);
  }
  return out.empty() ? ClauseFate::kEmpty : ClauseFate::kKept;
}

}  // namespace

Cnf2 reduce(std::span<const RawClause> raw) {
  std::vector<Clause> kept;
  std::vector<Literal> lits;
  bool falsified = false;
  for (const RawClause& rc : raw) {
    switch (reduce_clause(rc, lits)) {
      case ClauseFate::kTautology: break;
      case ClauseFate::kEmpty: falsified = true; break;
      case ClauseFate::kKept:
        if (lits.size() > 2) {
          throw Error(ErrorCode::kClauseTooLong,
                      "clause has " + std::to_string(lits.size()) +
                          " literals after reduction");
        }
        kept.push_back(lits.size() == 1 ? Clause(lits[0])
                                        : Clause(lits[0], lits[1]));
        break;
    }
  }
  if (falsified) return Cnf2::bottom();
  return Cnf2::from_clauses(std::move(kept));
}

bool is_reduced(std::span<const RawClause> raw) {
  std::set<std::vector<Literal>> seen;
  for (const RawClause& rc : raw) {
    std::vector<Literal> lits;
    for (const RawLiteral& item : rc) {
      if (std::holds_alternative<Constant>(item)) return false;
      lits.push_back(std::get<Literal>(item));
    }
    if (lits.empty()) return false;
    std::sort(lits.begin(), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
      if (lits[i].var() == lits[i - 1].var()) return false;
    }
    if (!seen.insert(lits).second) return false;
  }
  return true;
}

bool is_reduced(const Cnf2&) { return true; }

std::vector<RawClause> to_raw(const Cnf2& s) {
  std::vector<RawClause> raw;
  if (s.is_false()) {
    raw.emplace_back();
    return raw;
  }
  for (const Clause& c : s.clauses()) {
    RawClause rc;
    for (const Literal& l : c.literals()) rc.emplace_back(l);
    raw.push_back(std::move(rc));
  }
  return raw;
}

Cnf2 substitute(const Cnf2& s, const SubstitutionStep& step) {
  if (!s.is_nontrivial()) return s;
  std::vector<RawClause> raw;
  raw.reserve(s.size());
  for (const Clause& c : s.clauses()) {
    RawClause rc;
    for (const Literal& l : c.literals()) {
      if (l.var() != step.target()) {
        rc.emplace_back(l);
        continue;
      }
      auto image = step.image(l);
      if (const bool* b = std::get_if<bool>(&image)) {
        rc.emplace_back(*b ? Constant::kTrue : Constant::kFalse);
      } else {
        rc.emplace_back(std::get<Literal>(image));
      }
    }
    raw.push_back(std::move(rc));
  }
  return reduce(raw);
}

Cnf2 apply_assignment(const Cnf2& s, const Assignment& asg) {
  if (!s.is_nontrivial()) return s;
  std::vector<RawClause> raw;
  raw.reserve(s.size());
  for (const Clause& c : s.clauses()) {
    RawClause rc;
    for (const Literal& l : c.literals()) {
      if (auto v = asg.value(l)) {
        rc.emplace_back(*v ? Constant::kTrue : Constant::kFalse);
      } else {
        rc.emplace_back(l);
      }
    }
    raw.push_back(std::move(rc));
  }
  return reduce(raw);
}

std::vector<VariableId> clause_support(const Clause& c) {
  std::vector<VariableId> vars;
  for (const Literal& l : c.literals()) vars.push_back(l.var());
  return vars;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename Int>
bool parse_int(std::string_view token, Int& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

DimacsDocument read_dimacs(std::string_view text) {
  DimacsDocument doc;
  bool have_header = false;
  RawClause pending;
  std::set<std::int64_t> distinct;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;

    if (line.empty() || line.front() == 'c') continue;
    if (line.front() == '%') break;
    if (line.front() == 'p') {
      if (have_header) {
        throw Error(ErrorCode::kParseError, "duplicate problem line", line_no);
      }
      auto tokens = split_ws(line);
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf" ||
          !parse_int(tokens[2], doc.num_vars) ||
          !parse_int(tokens[3], doc.num_clauses)) {
        throw Error(ErrorCode::kParseError,
                    "expected 'p cnf <nvars> <nclauses>'", line_no);
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw Error(ErrorCode::kParseError, "clause before problem line",
                  line_no);
    }
    for (std::string_view token : split_ws(line)) {
      std::int64_t value = 0;
      if (!parse_int(token, value)) {
        throw Error(ErrorCode::kParseError,
                    "bad token '" + std::string(token) + "'", line_no);
      }
      if (value == 0) {
        if (distinct.size() > 2) {
          throw Error(ErrorCode::kClauseTooLong,
                      "clause has " + std::to_string(distinct.size()) +
                          " distinct literals",
                      line_no);
        }
        doc.clauses.push_back(std::move(pending));
        pending.clear();
        distinct.clear();
        continue;
      }
      const std::int64_t magnitude = value > 0 ? value : -value;
      if (magnitude > static_cast<std::int64_t>(doc.num_vars)) {
        throw Error(ErrorCode::kVariableOutOfRange,
                    "literal " + std::to_string(value) + " exceeds " +
                        std::to_string(doc.num_vars) + " declared variables",
                    line_no);
      }
      distinct.insert(value);
      pending.emplace_back(Literal::from_dimacs(value));
    }
  }
  if (!have_header) {
    throw Error(ErrorCode::kParseError, "missing problem line", line_no);
  }
  if (!pending.empty()) {
    throw Error(ErrorCode::kParseError, "last clause is not terminated by 0",
                line_no);
  }
  if (doc.clauses.size() != doc.num_clauses) {
    throw Error(ErrorCode::kParseError,
                "header declares " + std::to_string(doc.num_clauses) +
                    " clauses, found " + std::to_string(doc.clauses.size()),
                line_no);
  }
  return doc;
}

Cnf2 parse_dimacs(std::string_view text) {
  return reduce(read_dimacs(text).clauses);
}

void write_dimacs(std::ostream& out, const Cnf2& s, std::uint32_t num_vars,
                  std::span<const std::string> comments) {
  for (const std::string& c : comments) out << "c " << c << '\n';
  std::uint32_t n = num_vars;
  if (auto mv = s.max_variable()) n = std::max(n, mv->index());
  const std::size_t count = s.is_false() ? 1 : s.size();
  out << "p cnf " << n << ' ' << count << '\n';
  if (s.is_false()) {
    out << "0\n";
    return;
  }
  for (const Clause& c : s.clauses()) {
    for (const Literal& l : c.literals()) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string to_dimacs(const Cnf2& s, std::uint32_t num_vars) {
  std::ostringstream os;
  write_dimacs(os, s, num_vars);
  return os.str();
}

std::string to_string(Literal lit) {
  return (lit.is_positive() ? "x" : "-x") + std::to_string(lit.var().index());
}

std::string to_string(const Clause& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c[i]);
  }
  return out + ")";
}

std::string to_string(const Cnf2& s) {
  if (s.is_true()) return "TRUE";
  if (s.is_false()) return "FALSE";
  std::string out;
  for (const Clause& c : s.clauses()) {
    if (!out.empty()) out += " & ";
    out += to_string(c);
  }
  return out;
}

std::string to_string(const SubstitutionStep& step) {
  std::string out = "x" + std::to_string(step.target().index()) + " := ";
  switch (step.kind()) {
    case SubstitutionStep::Kind::kConstTrue: return out + "T";
    case SubstitutionStep::Kind::kConstFalse: return out + "F";
    case SubstitutionStep::Kind::kByLiteral:
      return out + to_string(step.replacement());
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, VariableId v) {
  return os << 'x' << v.index();
}
std::ostream& operator<<(std::ostream& os, Literal lit) {
  return os << to_string(lit);
}
std::ostream& operator<<(std::ostream& os, const Clause& c) {
  return os << to_string(c);
}
std::ostream& operator<<(std::ostream& os, const Cnf2& s) {
  return os << to_string(s);
}
std::ostream& operator<<(std::ostream& os, const SubstitutionStep& step) {
  return os << to_string(step);
}

}  // namespace cnfgraph
