#ifndef CNFGRAPH_GRAPH_H_
#define CNFGRAPH_GRAPH_H_

// Labeled simple graphs and multigraphs over positive vertex ids, the
// (multi)graph associated with a 2-CNF, and the structural operations used
// by the membership decider: subdivision, contraction at edges outside every
// triangle, cycle rank, 2-core, cut vertices and components.
//
// Everything here is labeled. Up-to-isomorphism reasoning lives in minors.h.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnfgraph/formula.h"

namespace cnfgraph {

using VertexId = std::uint32_t;

// Undirected edge in canonical orientation u < v.
struct Edge {
  VertexId u;
  VertexId v;

  // Throws kInvalidArgument on a self-loop or a zero id.
  static Edge of(VertexId a, VertexId b);

  bool touches(VertexId x) const { return x == u || x == v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::initializer_list<std::pair<VertexId, VertexId>> edges);

  void add_vertex(VertexId v);
  // Adds missing endpoints. Returns false if the edge was already present.
  bool add_edge(VertexId a, VertexId b);
  bool add_edge(Edge e) { return add_edge(e.u, e.v); }
  void remove_edge(Edge e);
  // Removes `v` and its incident edges.
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(Edge e) const;
  bool has_edge(VertexId a, VertexId b) const;
  // Throws kInvalidArgument for an absent vertex.
  const std::set<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return adj_.empty(); }
  // 0 for the empty graph.
  VertexId max_vertex() const;

  const std::map<VertexId, std::set<VertexId>>& adjacency() const { return adj_; }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::map<VertexId, std::set<VertexId>> adj_;
  std::size_t num_edges_ = 0;
};

class Multigraph {
 public:
  void add_vertex(VertexId v);
  void add_edge(Edge e, int count = 1);

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::map<Edge, int>& multiplicities() const { return mult_; }
  int multiplicity(Edge e) const;
  // Counted with multiplicity.
  std::size_t num_edges() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::set<VertexId> vertices_;
  std::map<Edge, int> mult_;
};

// One vertex per variable, one edge per clause. Throws kNotNontrivial for
// the constants and kUnitClausePresent if a unit clause occurs.
Multigraph associated_multigraph(const Cnf2& s);
// Throws kMultiEdgePresent for an edge of multiplicity > 1.
SimpleGraph as_simple(const Multigraph& g);
// as_simple(associated_multigraph(s)).
SimpleGraph associated_graph(const Cnf2& s);

std::vector<SimpleGraph> connected_components(const SimpleGraph& g);
// |E| - |V| + number of components.
long cycle_rank(const SimpleGraph& g);
// |E| - |V| + 1 per component, in connected_components order.
std::vector<long> component_cycle_ranks(const SimpleGraph& g);

// Maximal subgraph of minimum degree >= 2; empty if there is none.
SimpleGraph two_core(const SimpleGraph& g);
std::set<VertexId> cut_vertices(const SimpleGraph& g);

// True iff the edge's endpoints have a common neighbor.
bool in_triangle(const SimpleGraph& g, Edge e);

// Fresh vertex ids are max existing id + 1 unless given explicitly.
SimpleGraph subdivide_edge(const SimpleGraph& g, Edge e);
SimpleGraph subdivide_edge(const SimpleGraph& g, Edge e, VertexId fresh);
// Throws kEdgeAbsent, or kEdgeInTriangle when the merge would create a
// parallel edge.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);
SimpleGraph contract_edge(const SimpleGraph& g, Edge e, VertexId fresh);
// Inverse of a subdivision at a degree-2 vertex. Throws kDegreeNotTwo, or
// kSmoothingCreatesMultiEdge when the two neighbors are already adjacent.
SimpleGraph smooth_vertex(const SimpleGraph& g, VertexId w);

SimpleGraph without_edge(const SimpleGraph& g, Edge e);
SimpleGraph without_vertex(const SimpleGraph& g, VertexId v);

// Labeled containment: V(g) in V(h) and E(g) in E(h).
bool is_subgraph(const SimpleGraph& g, const SimpleGraph& h);

// Backtracking isomorphism test for small graphs.
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// Edge-list text: `#` comments, optional `n <count>` (declares 1..count),
// `v <id>` for isolated vertices, one `u v` pair per line.
SimpleGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const SimpleGraph& g,
                         std::string_view comment = {});

struct DotStyle {
  std::string name = "G";
  std::set<Edge> highlighted_edges;
  std::set<VertexId> highlighted_vertices;
};
std::string to_dot(const SimpleGraph& g, const DotStyle& style = {});

std::ostream& operator<<(std::ostream& os, const Edge& e);
std::ostream& operator<<(std::ostream& os, const SimpleGraph& g);

}  // namespace cnfgraph

#endif  // CNFGRAPH_GRAPH_H_
