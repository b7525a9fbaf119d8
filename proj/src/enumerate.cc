#include "cnfgraph/enumerate.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>

#include "cnfgraph/error.h"
#include "cnfgraph/sat.h"

namespace cnfgraph {

std::string_view polarity_name(EdgePolarity p) {
  switch (p) {
    case EdgePolarity::kPP: return "PP";
    case EdgePolarity::kPN: return "PN";
    case EdgePolarity::kNP: return "NP";
    case EdgePolarity::kNN: return "NN";
  }
  return "?";
}

Clause clause_for(Edge e, EdgePolarity p) {
  const VariableId u(e.u), v(e.v);
  const bool u_pos = p == EdgePolarity::kPP || p == EdgePolarity::kPN;
  const bool v_pos = p == EdgePolarity::kPP || p == EdgePolarity::kNP;
  return Clause(u_pos ? Literal::positive(u) : Literal::negative(u),
                v_pos ? Literal::positive(v) : Literal::negative(v));
}

Cnf2 formula_for(const SimpleGraph& g,
                 std::span<const EdgePolarity> polarities) {
  const std::vector<Edge> edges = g.edges();
  if (edges.size() != polarities.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need one polarity per edge: " + std::to_string(edges.size()) +
                    " edges, " + std::to_string(polarities.size()) +
                    " polarities");
  }
  std::vector<Clause> clauses;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    clauses.push_back(clause_for(edges[i], polarities[i]));
  }
  return Cnf2::from_clauses(std::move(clauses));
}

namespace {

constexpr std::size_t kHardEdgeLimit = 20;

using Vector = std::vector<EdgePolarity>;

std::uint64_t pow4(std::size_t k) { return std::uint64_t{1} << (2 * k); }

// The index-th vector in lexicographic order, first edge most significant.
Vector to_vector(std::uint64_t index, std::size_t length) {
  Vector v(length);
  for (std::size_t d = 0; d < length; ++d) {
    v[d] = static_cast<EdgePolarity>((index >> (2 * (length - 1 - d))) & 3);
  }
  return v;
}

void check_cap(const SimpleGraph& g, std::size_t cap) {
  const std::size_t m = g.num_edges();
  if (m > cap) {
    throw Error(ErrorCode::kTooManyEdges,
                std::to_string(m) + " edges exceed the cap of " +
                    std::to_string(cap));
  }
  if (m > kHardEdgeLimit) {
    throw Error(ErrorCode::kTooManyEdges,
                std::to_string(m) + " edges exceed the hard limit of " +
                    std::to_string(kHardEdgeLimit));
  }
}

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `task(i)` for i in [0, n) on up to `threads` workers.
template <typename Task>
void parallel_for(std::size_t n, unsigned threads, Task task) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Satisfying assignments of one connected component as a bitset over its
// 2^n total assignments.
class ComponentTable {
 public:
  explicit ComponentTable(const SimpleGraph& comp) : edges_(comp.edges()) {
    std::map<VertexId, std::size_t> index;
    for (VertexId v : comp.vertices()) index.emplace(v, index.size());
    const std::size_t n = index.size();
    const std::uint64_t assignments = std::uint64_t{1} << n;
    words_ = std::max<std::size_t>(1, assignments / 64);
    full_.assign(words_, ~std::uint64_t{0});
    if (assignments < 64) full_[0] = (std::uint64_t{1} << assignments) - 1;

    for (const Edge& e : edges_) {
      const std::size_t i = index.at(e.u), j = index.at(e.v);
      std::array<Bits, 4> per_polarity;
      for (int p = 0; p < 4; ++p) {
        const bool u_pos = p == 0 || p == 1, v_pos = p == 0 || p == 2;
        Bits bits(words_, 0);
        for (std::uint64_t a = 0; a < assignments; ++a) {
          const bool xu = (a >> i) & 1, xv = (a >> j) & 1;
          if (xu == u_pos || xv == v_pos) bits[a / 64] |= std::uint64_t{1} << (a % 64);
        }
        per_polarity[p] = std::move(bits);
      }
      masks_.push_back(std::move(per_polarity));
    }
  }

  std::size_t num_edges() const { return edges_.size(); }

  struct Result {
    std::uint64_t sat = 0;
    std::uint64_t unsat = 0;
    std::optional<Vector> first_unsat;
  };

  // Counts the subtree below a fixed prefix. With `stop_at_unsat`, returns
  // as soon as one unsatisfiable vector is known.
  Result run(const Vector& prefix, bool stop_at_unsat) const {
    Result result;
    Vector current = prefix;
    Bits mask = full_;
    for (std::size_t d = 0; d < prefix.size(); ++d) {
      intersect(mask, masks_[d][static_cast<int>(prefix[d])]);
      if (is_empty(mask)) {
        result.unsat = pow4(edges_.size() - prefix.size());
        current.resize(edges_.size(), EdgePolarity::kPP);
        result.first_unsat = current;
        return result;
      }
    }
    std::vector<Bits> stack(edges_.size() + 1);
    stack[prefix.size()] = mask;
    current.resize(edges_.size(), EdgePolarity::kPP);
    descend(prefix.size(), stack, current, result, stop_at_unsat);
    return result;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  static void intersect(Bits& a, const Bits& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] &= b[w];
  }
  static bool is_empty(const Bits& a) {
    return std::ranges::all_of(a, [](std::uint64_t w) { return w == 0; });
  }

  bool descend(std::size_t depth, std::vector<Bits>& stack, Vector& current,
               Result& result, bool stop_at_unsat) const {
    if (depth == edges_.size()) {
      ++result.sat;
      return false;
    }
    for (int p = 0; p < 4; ++p) {
      current[depth] = static_cast<EdgePolarity>(p);
      Bits& next = stack[depth + 1];
      next = stack[depth];
      intersect(next, masks_[depth][p]);
      if (is_empty(next)) {
        result.unsat += pow4(edges_.size() - depth - 1);
        if (!result.first_unsat) {
          Vector v = current;
          std::fill(v.begin() + static_cast<long>(depth) + 1, v.end(),
                    EdgePolarity::kPP);
          result.first_unsat = std::move(v);
        }
        if (stop_at_unsat) return true;
        continue;
      }
      if (descend(depth + 1, stack, current, result, stop_at_unsat)) return true;
    }
    current[depth] = EdgePolarity::kPP;
    return false;
  }

  std::vector<Edge> edges_;
  std::size_t words_ = 1;
  Bits full_;
  std::vector<std::array<Bits, 4>> masks_;
};

std::vector<Vector> prefixes(std::size_t length) {
  std::vector<Vector> out;
  for (std::uint64_t i = 0; i < pow4(length); ++i) out.push_back(to_vector(i, length));
  return out;
}

ComponentTable::Result count_component(const ComponentTable& table,
                                       unsigned threads) {
  const unsigned workers = worker_count(threads);
  std::size_t depth = 0;
  while (workers > 1 && depth < table.num_edges() && pow4(depth) < 8 * workers) {
    ++depth;
  }
  const std::vector<Vector> tasks = prefixes(depth);
  std::vector<ComponentTable::Result> results(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    results[i] = table.run(tasks[i], false);
  });
  ComponentTable::Result total;
  for (auto& r : results) {
    total.sat += r.sat;
    total.unsat += r.unsat;
    if (!total.first_unsat && r.first_unsat) total.first_unsat = r.first_unsat;
  }
  return total;
}

CensusReport solver_census(const SimpleGraph& g, unsigned threads) {
  const std::size_t m = g.num_edges();
  const std::uint64_t total = pow4(m);
  const unsigned workers = worker_count(threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 64ull * workers);
  std::vector<std::uint64_t> unsat(chunks, 0);
  std::vector<std::uint64_t> first(chunks, total);
  parallel_for(chunks, threads, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    for (std::uint64_t i = begin; i < end; ++i) {
      if (solve(formula_for(g, to_vector(i, m))).is_satisfiable()) continue;
      ++unsat[c];
      first[c] = std::min(first[c], i);
    }
  });
  CensusReport report{g, total, 0, 0, std::nullopt};
  std::uint64_t first_unsat = total;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    report.unsat_count += unsat[c];
    first_unsat = std::min(first_unsat, first[c]);
  }
  report.sat_count = total - report.unsat_count;
  if (first_unsat < total) {
    report.example_unsat = formula_for(g, to_vector(first_unsat, m));
  }
  return report;
}

}  // namespace

CensusReport census(const SimpleGraph& g, const CensusOptions& options) {
  check_cap(g, options.cap);
  if (options.engine == CensusOptions::Engine::kSolver) {
    return solver_census(g, options.threads);
  }

  const std::vector<Edge> edges = g.edges();
  std::map<Edge, std::size_t> position;
  for (const Edge& e : edges) position.emplace(e, position.size());

  CensusReport report{g, pow4(edges.size()), 1, 0, std::nullopt};
  std::optional<Vector> best;
  for (const SimpleGraph& comp : connected_components(g)) {
    if (comp.num_edges() == 0) continue;
    const ComponentTable table(comp);
    const auto result = count_component(table, options.threads);
    report.sat_count *= result.sat;
    if (!result.first_unsat) continue;
    Vector candidate(edges.size(), EdgePolarity::kPP);
    const std::vector<Edge> local = comp.edges();
    for (std::size_t i = 0; i < local.size(); ++i) {
      candidate[position.at(local[i])] = (*result.first_unsat)[i];
    }
    if (!best || candidate < *best) best = std::move(candidate);
  }
  report.unsat_count = report.total - report.sat_count;
  if (best) {
    report.example_unsat = formula_for(g, *best);
    if (solve(*report.example_unsat).is_satisfiable()) {
      throw Error(ErrorCode::kInternalVerificationFailed,
                  "census example is satisfiable");
    }
  }
  return report;
}

bool is_in_U_bruteforce(const SimpleGraph& g, std::size_t cap) {
  check_cap(g, cap);
  for (const SimpleGraph& comp : connected_components(g)) {
    if (comp.num_edges() == 0) continue;
    if (ComponentTable(comp).run({}, true).first_unsat) return true;
  }
  return false;
}

bool minimality_check(const SimpleGraph& g, std::size_t cap) {
  if (!is_in_U_bruteforce(g, cap)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "minimality is only defined for graphs in U");
  }
  for (const Edge& e : g.edges()) {
    if (is_in_U_bruteforce(without_edge(g, e), cap)) return false;
  }
  for (VertexId v : g.vertices()) {
    if (is_in_U_bruteforce(without_vertex(g, v), cap)) return false;
    if (g.degree(v) != 2) continue;
    const auto& nbrs = g.neighbors(v);
    if (g.has_edge(*nbrs.begin(), *nbrs.rbegin())) continue;
    if (is_in_U_bruteforce(smooth_vertex(g, v), cap)) return false;
  }
  return true;
}

}  // namespace cnfgraph
