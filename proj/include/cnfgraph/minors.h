#ifndef CNFGRAPH_MINORS_H_
#define CNFGRAPH_MINORS_H_

// Membership in U, the family of simple graphs that support an
// unsatisfiable simple 2-CNF. A graph is in U iff it contains one of four
// patterns as a topological minor. `decide_membership` answers from cycle
// ranks and cut vertices; `find_topological_minor` is the generic search
// that produces the evidence.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "cnfgraph/graph.h"

namespace cnfgraph {

enum class PatternId { kVConfig, kPConfig, kK4, kK113 };

// Order in which patterns are tried when several embed.
inline constexpr std::array<PatternId, 4> kPatternSearchOrder = {
    PatternId::kK4, PatternId::kK113, PatternId::kVConfig, PatternId::kPConfig};

std::string_view pattern_name(PatternId p);
// Accepts the canonical names (case-insensitive) and the aliases butterfly,
// bowtie and book.
std::optional<PatternId> parse_pattern(std::string_view name);

// Canonical labeled copy on vertices 1..n:
//   VConfig  triangles {1,2,3}, {3,4,5}
//   PConfig  triangles {1,2,3}, {4,5,6} and the edge (3,4)
//   K4       complete graph on {1,2,3,4}
//   K113     hubs 2 and 4 adjacent to each other and to 1, 3, 5
SimpleGraph pattern_graph(PatternId p);

// A subdivision of a pattern inside a host. Paths run from
// branch_map[e.u] to branch_map[e.v] for the pattern edge e.
struct Embedding {
  std::map<VertexId, VertexId> branch_map;
  std::map<Edge, std::vector<VertexId>> path_map;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

enum class NotInUReason { kForest, kUnicyclicComponents, kThetaCore };

std::string_view reason_name(NotInUReason r);

struct InU {
  PatternId pattern;
  Embedding embedding;
};

struct NotInU {
  NotInUReason reason;
};

struct Verdict {
  std::variant<InU, NotInU> answer;

  bool in_u() const { return std::holds_alternative<InU>(answer); }
  const InU& evidence() const { return std::get<InU>(answer); }
  NotInUReason reason() const { return std::get<NotInU>(answer).reason; }
};

inline constexpr std::size_t kDefaultHostCap = 64;

// Per component r = |E| - |V| + 1. Any r >= 3, or r = 2 with a cut vertex
// in the 2-core, is in U; otherwise the reason is Forest (all r = 0),
// UnicyclicComponents (all r <= 1) or ThetaCore. Evidence comes from the
// first component in U.
Verdict decide_membership(const SimpleGraph& g);

// Some subdivision of the pattern as a labeled subgraph of host, or none.
// Throws kHostTooLarge when host has more than `cap` vertices.
std::optional<Embedding> find_topological_minor(
    const SimpleGraph& host, PatternId pattern,
    std::size_t cap = kDefaultHostCap);

bool verify_embedding(const SimpleGraph& host, PatternId pattern,
                      const Embedding& emb);

}  // namespace cnfgraph

#endif  // CNFGRAPH_MINORS_H_
