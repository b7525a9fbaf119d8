#include "cnfgraph/graph.h"

#include <gtest/gtest.h>

#include <random>

#include "cnfgraph/error.h"
#include "cnfgraph/fixtures.h"
#include "cnfgraph/witness.h"
#include "support/oracles.h"

namespace cnfgraph {
namespace {

Literal L(int v) { return Literal::from_dimacs(v); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

SimpleGraph path3() { return {{1, 2}, {2, 3}}; }

TEST(EdgeTest, Canonical) {
  EXPECT_EQ(Edge::of(5, 2), (Edge{2, 5}));
  EXPECT_EQ(code_of([] { Edge::of(3, 3); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Edge::of(0, 3); }), ErrorCode::kInvalidArgument);
}

TEST(SimpleGraphTest, Mutation) {
  SimpleGraph g;
  EXPECT_TRUE(g.add_edge(2, 1));
  EXPECT_FALSE(g.add_edge(1, 2));
  g.add_vertex(7);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.max_vertex(), 7u);
  g.remove_vertex(1);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(code_of([&] { g.remove_edge(Edge::of(2, 7)); }), ErrorCode::kEdgeAbsent);
  EXPECT_EQ(code_of([&] { g.neighbors(1); }), ErrorCode::kInvalidArgument);
}

TEST(AssociatedGraphTest, BowtieSentence) {
  const Cnf2 s = base_formula(PatternId::kPConfig).cnf;
  EXPECT_EQ(associated_graph(s), fixture("bowtie"));
  EXPECT_EQ(associated_multigraph(s).num_edges(), s.size());
}

TEST(AssociatedGraphTest, K4Sentence) {
  EXPECT_EQ(associated_graph(base_formula(PatternId::kK4).cnf), fixture("k4"));
}

TEST(AssociatedGraphTest, Multiplicity) {
  const Cnf2 s = Cnf2::from_clauses({Clause(L(1), L(2)), Clause(L(-1), L(-2))});
  const Multigraph mg = associated_multigraph(s);
  EXPECT_EQ(mg.multiplicity(Edge::of(1, 2)), 2);
  EXPECT_EQ(mg.num_edges(), 2u);
  EXPECT_EQ(code_of([&] { as_simple(mg); }), ErrorCode::kMultiEdgePresent);
}

TEST(AssociatedGraphTest, Errors) {
  EXPECT_EQ(code_of([] { associated_multigraph(Cnf2::top()); }),
            ErrorCode::kNotNontrivial);
  EXPECT_EQ(code_of([] { associated_multigraph(Cnf2::bottom()); }),
            ErrorCode::kNotNontrivial);
  EXPECT_EQ(code_of([] {
              associated_multigraph(Cnf2::from_clauses({Clause(L(1))}));
            }),
            ErrorCode::kUnitClausePresent);
}

TEST(AsSimpleTest, EdgelessMultigraph) {
  Multigraph mg;
  for (VertexId v : {1, 2, 3}) mg.add_vertex(v);
  const SimpleGraph g = as_simple(mg);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(CycleRankTest, Examples) {
  EXPECT_EQ(cycle_rank(fixture("c3")), 1);
  EXPECT_EQ(cycle_rank(fixture("k4")), 3);
  EXPECT_EQ(cycle_rank(fixture("butterfly")), 2);
  SimpleGraph two = fixture("c3");
  two.add_edge(4, 5);
  EXPECT_EQ(cycle_rank(two), 1);
  EXPECT_EQ(component_cycle_ranks(two), (std::vector<long>{1, 0}));
}

TEST(TwoCoreTest, Examples) {
  EXPECT_TRUE(two_core(path3()).empty());
  SimpleGraph pendant = fixture("butterfly");
  pendant.add_edge(5, 6);
  pendant.add_edge(6, 7);
  EXPECT_EQ(two_core(pendant), fixture("butterfly"));
  EXPECT_EQ(two_core(fixture("c3")), fixture("c3"));
  EXPECT_EQ(two_core(two_core(pendant)), two_core(pendant));
}

TEST(CutVerticesTest, Examples) {
  EXPECT_EQ(cut_vertices(fixture("butterfly")), (std::set<VertexId>{3}));
  EXPECT_TRUE(cut_vertices(fixture("k4")).empty());
  EXPECT_EQ(cut_vertices(path3()), (std::set<VertexId>{2}));
  EXPECT_EQ(cut_vertices(fixture("bowtie")), (std::set<VertexId>{3, 4}));
}

TEST(CutVerticesTest, AgreesWithDeletion) {
  for (const SimpleGraph& g : testing::connected_corpus(6, 15)) {
    const auto cuts = cut_vertices(g);
    const auto expected = testing::cut_vertices_by_deletion(g);
    ASSERT_EQ(std::vector<VertexId>(cuts.begin(), cuts.end()), expected) << g;
  }
}

TEST(InTriangleTest, Examples) {
  EXPECT_TRUE(in_triangle(fixture("c3"), Edge::of(1, 2)));
  EXPECT_FALSE(in_triangle(fixture("bowtie"), Edge::of(3, 4)));
}

TEST(SubdivideTest, Examples) {
  EXPECT_TRUE(are_isomorphic(subdivide_edge(fixture("c3"), Edge::of(1, 3)),
                             fixture("cn:4")));
  const SimpleGraph single{{1, 2}};
  EXPECT_EQ(subdivide_edge(single, Edge::of(1, 2)), (SimpleGraph{{1, 3}, {2, 3}}));
  EXPECT_EQ(subdivide_edge(single, Edge::of(1, 2), 9), (SimpleGraph{{1, 9}, {2, 9}}));
  EXPECT_EQ(code_of([&] { subdivide_edge(single, Edge::of(1, 3)); }),
            ErrorCode::kEdgeAbsent);
  EXPECT_EQ(code_of([&] { subdivide_edge(single, Edge::of(1, 2), 2); }),
            ErrorCode::kInvalidArgument);
}

TEST(ContractTest, Examples) {
  EXPECT_EQ(contract_edge(path3(), Edge::of(1, 2)), (SimpleGraph{{3, 4}}));
  EXPECT_TRUE(are_isomorphic(contract_edge(fixture("bowtie"), Edge::of(3, 4)),
                             fixture("butterfly")));
  EXPECT_EQ(code_of([] { contract_edge(fixture("c3"), Edge::of(1, 2)); }),
            ErrorCode::kEdgeInTriangle);
  EXPECT_EQ(code_of([] { contract_edge(path3(), Edge::of(1, 3)); }),
            ErrorCode::kEdgeAbsent);
}

TEST(ContractTest, SquareButterflyToButterfly) {
  EXPECT_TRUE(are_isomorphic(contract_edge(fixture("square-butterfly"), Edge::of(3, 4)),
                             fixture("butterfly")));
}

TEST(GraphInvariantsTest, RankAndInverses) {
  for (const SimpleGraph& g : testing::connected_corpus(5, 10)) {
    for (const Edge& e : g.edges()) {
      const SimpleGraph sub = subdivide_edge(g, e);
      ASSERT_EQ(cycle_rank(sub), cycle_rank(g));
      const VertexId w = sub.max_vertex();
      EXPECT_TRUE(are_isomorphic(contract_edge(sub, Edge::of(e.u, w)), g));
      EXPECT_TRUE(are_isomorphic(contract_edge(sub, Edge::of(w, e.v)), g));
      EXPECT_EQ(smooth_vertex(sub, w), g);
      if (!in_triangle(g, e)) {
        const SimpleGraph c = contract_edge(g, e);
        EXPECT_EQ(cycle_rank(c), cycle_rank(g));
        EXPECT_EQ(c.num_edges() + 1, g.num_edges());
      }
    }
  }
}

TEST(SmoothTest, Errors) {
  EXPECT_EQ(code_of([] { smooth_vertex(fixture("k4"), 1); }), ErrorCode::kDegreeNotTwo);
  EXPECT_EQ(code_of([] { smooth_vertex(fixture("c3"), 1); }),
            ErrorCode::kSmoothingCreatesMultiEdge);
}

TEST(ComponentsTest, Examples) {
  SimpleGraph two = fixture("c3");
  two.add_edge(4, 5);
  two.add_edge(5, 6);
  two.add_edge(4, 6);
  const auto comps = connected_components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_TRUE(are_isomorphic(comps[0], fixture("c3")));
  EXPECT_TRUE(are_isomorphic(comps[1], fixture("c3")));
  EXPECT_EQ(connected_components(fixture("k4")).size(), 1u);
  SimpleGraph isolated;
  for (VertexId v : {1, 2, 3}) isolated.add_vertex(v);
  EXPECT_EQ(connected_components(isolated).size(), 3u);
}

TEST(IsSubgraphTest, Examples) {
  EXPECT_TRUE(is_subgraph(fixture("c3"), fixture("k4")));
  EXPECT_FALSE(is_subgraph(fixture("k4"), fixture("c3")));
  EXPECT_TRUE(is_subgraph(fixture("bowtie"), fixture("bowtie")));
}

TEST(IsomorphismTest, Examples) {
  const SimpleGraph relabeled{{10, 20}, {20, 30}, {10, 30}};
  EXPECT_TRUE(are_isomorphic(relabeled, fixture("c3")));
  EXPECT_FALSE(are_isomorphic(fixture("cn:6"), fixture("hills:2")));
  EXPECT_FALSE(are_isomorphic(fixture("config:ppp1"), fixture("config:ppp2")));
}

TEST(EdgeListTest, ParseAndWrite) {
  const SimpleGraph g = parse_edge_list("# comment\nn 4\n1 2 # inline\n\n2 3\nv 9\n");
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_TRUE(g.has_vertex(4));
  EXPECT_TRUE(g.has_vertex(9));
  EXPECT_EQ(g.num_edges(), 2u);
  for (const std::string& name : fixture_names()) {
    const SimpleGraph f = fixture(name);
    EXPECT_EQ(parse_edge_list(to_edge_list(f, name)), f) << name;
  }
  SimpleGraph sparse{{3, 8}};
  sparse.add_vertex(5);
  EXPECT_EQ(parse_edge_list(to_edge_list(sparse)), sparse);
}

TEST(EdgeListTest, Errors) {
  for (const char* text : {"1\n", "1 2 3\n", "1 1\n", "n 2\n1 3\n", "a b\n",
                           "1 2\n2 1\n", "0 1\n", "n\n"}) {
    EXPECT_EQ(code_of([&] { parse_edge_list(text); }), ErrorCode::kParseError) << text;
  }
  try {
    parse_edge_list("1 2\n\n2 2\n");
  } catch (const Error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(DotTest, Highlights) {
  DotStyle style;
  style.highlighted_edges.insert(Edge::of(1, 2));
  style.highlighted_vertices.insert(3);
  const std::string dot = to_dot(fixture("c3"), style);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2 [color=red"), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3;"), std::string::npos);
  EXPECT_NE(dot.find("3 [shape=doublecircle]"), std::string::npos);
}

}  // namespace
}  // namespace cnfgraph
