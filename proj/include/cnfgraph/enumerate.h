#ifndef CNFGRAPH_ENUMERATE_H_
#define CNFGRAPH_ENUMERATE_H_

// Exhaustive ground truth: every simple 2-CNF supported on a graph is one
// choice of clause polarity per edge. Counting the unsatisfiable ones decides
// membership in U without any graph theory.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cnfgraph/formula.h"
#include "cnfgraph/graph.h"

namespace cnfgraph {

// Clause on the canonical edge (u,v), u < v.
enum class EdgePolarity : std::uint8_t {
  kPP,  // (u | v)
  kPN,  // (u | -v)
  kNP,  // (-u | v)
  kNN,  // (-u | -v)
};

std::string_view polarity_name(EdgePolarity p);
Clause clause_for(Edge e, EdgePolarity p);
// One polarity per edge of g.edges(), in that order.
Cnf2 formula_for(const SimpleGraph& g, std::span<const EdgePolarity> polarities);

inline constexpr std::size_t kDefaultEdgeCap = 10;

struct CensusOptions {
  std::size_t cap = kDefaultEdgeCap;
  // 0 picks the hardware concurrency.
  unsigned threads = 1;
  enum class Engine {
    // Satisfying-assignment bitsets per connected component.
    kTruthTable,
    // One call to the 2-SAT solver per polarity vector.
    kSolver,
  } engine = Engine::kTruthTable;
};

struct CensusReport {
  SimpleGraph graph;
  std::uint64_t total = 0;
  std::uint64_t sat_count = 0;
  std::uint64_t unsat_count = 0;
  // The lexicographically first unsatisfiable polarity vector, with edges in
  // canonical order and polarities ordered PP < PN < NP < NN.
  std::optional<Cnf2> example_unsat;
};

// Throws kTooManyEdges when g has more than options.cap edges.
CensusReport census(const SimpleGraph& g, const CensusOptions& options = {});

// Stops at the first unsatisfiable formula. Throws kTooManyEdges.
bool is_in_U_bruteforce(const SimpleGraph& g, std::size_t cap = kDefaultEdgeCap);

// True iff no single-edge deletion, single-vertex deletion or smoothing of a
// degree-2 vertex (when it stays simple) is in U. Throws
// kPreconditionViolated if g itself is not in U, kTooManyEdges.
bool minimality_check(const SimpleGraph& g, std::size_t cap = kDefaultEdgeCap);

}  // namespace cnfgraph

#endif  // CNFGRAPH_ENUMERATE_H_
