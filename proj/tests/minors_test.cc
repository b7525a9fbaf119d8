#include "cnfgraph/minors.h"

#include <gtest/gtest.h>

#include <random>

#include "cnfgraph/enumerate.h"
#include "cnfgraph/error.h"
#include "cnfgraph/fixtures.h"
#include "support/oracles.h"

namespace cnfgraph {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

// A cycle 1..n with extra chords.
SimpleGraph cycle_with_chords(VertexId n, std::vector<Edge> chords) {
  SimpleGraph g;
  for (VertexId v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  for (const Edge& e : chords) g.add_edge(e.u, e.v);
  return g;
}

TEST(PatternTest, NamesRoundTrip) {
  for (PatternId p : kPatternSearchOrder) {
    EXPECT_EQ(parse_pattern(pattern_name(p)), p);
  }
  EXPECT_EQ(parse_pattern("butterfly"), PatternId::kVConfig);
  EXPECT_EQ(parse_pattern("BOWTIE"), PatternId::kPConfig);
  EXPECT_EQ(parse_pattern("book"), PatternId::kK113);
  EXPECT_EQ(parse_pattern("k4"), PatternId::kK4);
  EXPECT_FALSE(parse_pattern("k5").has_value());
}

TEST(PatternTest, GraphsMatchFixtures) {
  EXPECT_EQ(pattern_graph(PatternId::kVConfig), fixture("butterfly"));
  EXPECT_EQ(pattern_graph(PatternId::kPConfig), fixture("bowtie"));
  EXPECT_EQ(pattern_graph(PatternId::kK4), fixture("k4"));
  EXPECT_EQ(pattern_graph(PatternId::kK113), fixture("book"));
  const SimpleGraph book = pattern_graph(PatternId::kK113);
  EXPECT_EQ(book.num_edges(), 7u);
  EXPECT_EQ(book.degree(2), 4u);
  EXPECT_EQ(book.degree(4), 4u);
}

TEST(DecideTest, Reasons) {
  EXPECT_EQ(decide_membership(SimpleGraph{{1, 2}, {2, 3}}).reason(),
            NotInUReason::kForest);
  EXPECT_EQ(decide_membership(SimpleGraph{}).reason(), NotInUReason::kForest);
  SimpleGraph two_triangles = fixture("c3");
  for (VertexId v : {4, 5, 6}) two_triangles.add_vertex(v);
  two_triangles.add_edge(4, 5);
  two_triangles.add_edge(5, 6);
  two_triangles.add_edge(4, 6);
  EXPECT_EQ(decide_membership(two_triangles).reason(),
            NotInUReason::kUnicyclicComponents);
  EXPECT_EQ(decide_membership(fixture("k4-e")).reason(), NotInUReason::kThetaCore);
  EXPECT_EQ(decide_membership(fixture("square-butterfly")).reason(),
            NotInUReason::kThetaCore);
}

TEST(DecideTest, PatternsAreInU) {
  for (PatternId p : kPatternSearchOrder) {
    const Verdict v = decide_membership(pattern_graph(p));
    ASSERT_TRUE(v.in_u()) << pattern_name(p);
    EXPECT_EQ(v.evidence().pattern, p);
    EXPECT_TRUE(verify_embedding(pattern_graph(p), p, v.evidence().embedding));
  }
}

TEST(DecideTest, ThetaWithTailIsNotInU) {
  SimpleGraph g = fixture("k4-e");
  g.add_edge(4, 5);
  g.add_edge(5, 6);
  EXPECT_EQ(decide_membership(g).reason(), NotInUReason::kThetaCore);
}

TEST(DecideTest, DumbbellIsInU) {
  const Verdict v = decide_membership(fixture("bowtie"));
  ASSERT_TRUE(v.in_u());
  EXPECT_EQ(v.evidence().pattern, PatternId::kPConfig);
}

TEST(DecideTest, EvidenceFromSecondComponent) {
  SimpleGraph g{{1, 2}};
  for (const Edge& e : fixture("k4").edges()) g.add_edge(e.u + 10, e.v + 10);
  const Verdict v = decide_membership(g);
  ASSERT_TRUE(v.in_u());
  EXPECT_EQ(v.evidence().pattern, PatternId::kK4);
  EXPECT_TRUE(verify_embedding(g, PatternId::kK4, v.evidence().embedding));
}

TEST(DecideTest, AgreesWithBruteForce) {
  for (const SimpleGraph& g : testing::connected_corpus(5, 10)) {
    ASSERT_EQ(decide_membership(g).in_u(), is_in_U_bruteforce(g)) << g;
  }
}

TEST(DecideTest, LargeCoreUsesCertificate) {
  // Rank 3 on 80 vertices: a subdivided K4.
  const SimpleGraph g = cycle_with_chords(80, {Edge::of(1, 40), Edge::of(20, 60)});
  const Verdict v = decide_membership(g);
  ASSERT_TRUE(v.in_u());
  EXPECT_TRUE(verify_embedding(g, v.evidence().pattern, v.evidence().embedding));
}

TEST(DecideTest, LargeThetaIsNotInU) {
  const SimpleGraph g = cycle_with_chords(100, {Edge::of(1, 50)});
  EXPECT_EQ(decide_membership(g).reason(), NotInUReason::kThetaCore);
}

TEST(DecideTest, LargeFigureEightIsInU) {
  SimpleGraph g = cycle_with_chords(50, {});
  for (VertexId v = 51; v < 100; ++v) g.add_edge(v, v + 1);
  g.add_edge(1, 51);
  g.add_edge(1, 100);
  const Verdict v = decide_membership(g);
  ASSERT_TRUE(v.in_u());
  EXPECT_EQ(v.evidence().pattern, PatternId::kVConfig);
  EXPECT_TRUE(verify_embedding(g, PatternId::kVConfig, v.evidence().embedding));
}

TEST(SearchTest, SelfEmbedding) {
  for (PatternId p : kPatternSearchOrder) {
    const auto emb = find_topological_minor(pattern_graph(p), p);
    ASSERT_TRUE(emb.has_value()) << pattern_name(p);
    EXPECT_TRUE(verify_embedding(pattern_graph(p), p, *emb));
    EXPECT_EQ(emb->branch_map.size(), pattern_graph(p).num_vertices());
    EXPECT_EQ(emb->path_map.size(), pattern_graph(p).num_edges());
  }
}

TEST(SearchTest, PatternsAreIncomparable) {
  for (PatternId host : kPatternSearchOrder) {
    for (PatternId p : kPatternSearchOrder) {
      if (host == p) continue;
      EXPECT_FALSE(find_topological_minor(pattern_graph(host), p).has_value())
          << pattern_name(p) << " in " << pattern_name(host);
    }
  }
}

TEST(SearchTest, SubdividedHost) {
  SimpleGraph host = fixture("k4");
  host = subdivide_edge(host, Edge::of(1, 2));
  host = subdivide_edge(host, Edge::of(3, 4));
  host = subdivide_edge(host, Edge::of(1, 5));
  host.add_edge(2, 20);
  const auto emb = find_topological_minor(host, PatternId::kK4);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(verify_embedding(host, PatternId::kK4, *emb));
  EXPECT_FALSE(find_topological_minor(host, PatternId::kK113).has_value());
}

TEST(SearchTest, K4ContainsNoButterfly) {
  EXPECT_FALSE(find_topological_minor(fixture("k4"), PatternId::kVConfig).has_value());
  EXPECT_FALSE(find_topological_minor(fixture("k4-e"), PatternId::kVConfig).has_value());
}

TEST(SearchTest, HillsContainButterfly) {
  const auto emb = find_topological_minor(fixture("hills:3"), PatternId::kVConfig);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(verify_embedding(fixture("hills:3"), PatternId::kVConfig, *emb));
}

TEST(SearchTest, HostCap) {
  const SimpleGraph big = fixture("cn:70");
  EXPECT_EQ(code_of([&] { find_topological_minor(big, PatternId::kK4); }),
            ErrorCode::kHostTooLarge);
  EXPECT_FALSE(find_topological_minor(big, PatternId::kK4, 100).has_value());
}

TEST(VerifyTest, RejectsBrokenEmbeddings) {
  const SimpleGraph host = fixture("butterfly");
  const Embedding good = *find_topological_minor(host, PatternId::kVConfig);
  ASSERT_TRUE(verify_embedding(host, PatternId::kVConfig, good));

  Embedding missing_path = good;
  missing_path.path_map.erase(missing_path.path_map.begin());
  EXPECT_FALSE(verify_embedding(host, PatternId::kVConfig, missing_path));

  Embedding collapsed = good;
  collapsed.branch_map[1] = collapsed.branch_map[2];
  EXPECT_FALSE(verify_embedding(host, PatternId::kVConfig, collapsed));

  Embedding bad_path = good;
  auto& path = bad_path.path_map.begin()->second;
  path.insert(path.begin() + 1, 99);
  EXPECT_FALSE(verify_embedding(host, PatternId::kVConfig, bad_path));

  EXPECT_FALSE(verify_embedding(fixture("c3"), PatternId::kVConfig, good));
  EXPECT_FALSE(verify_embedding(host, PatternId::kK4, good));
}

TEST(VerifyTest, SharedInteriorRejected) {
  // Two triangles through vertex 3, with both outer edges routed via 6.
  SimpleGraph host = fixture("butterfly");
  host.add_edge(1, 6);
  host.add_edge(2, 6);
  host.add_edge(4, 6);
  host.add_edge(5, 6);
  Embedding emb;
  for (VertexId v = 1; v <= 5; ++v) emb.branch_map[v] = v;
  for (const Edge& e : pattern_graph(PatternId::kVConfig).edges()) {
    emb.path_map[e] = {e.u, e.v};
  }
  emb.path_map[Edge::of(1, 2)] = {1, 6, 2};
  ASSERT_TRUE(verify_embedding(host, PatternId::kVConfig, emb));
  emb.path_map[Edge::of(4, 5)] = {4, 6, 5};
  EXPECT_FALSE(verify_embedding(host, PatternId::kVConfig, emb));
}

TEST(SearchTest, RandomHostsAgreeWithDecider) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g;
    const VertexId n = 5 + rng() % 6;
    for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
    const int m = static_cast<int>(n) + static_cast<int>(rng() % 4) - 1;
    for (int i = 0; i < m; ++i) {
      const VertexId a = 1 + rng() % n, b = 1 + rng() % n;
      if (a != b) g.add_edge(a, b);
    }
    bool found = false;
    for (PatternId p : kPatternSearchOrder) {
      const auto emb = find_topological_minor(g, p);
      if (!emb) continue;
      found = true;
      ASSERT_TRUE(verify_embedding(g, p, *emb)) << g;
    }
    ASSERT_EQ(found, decide_membership(g).in_u()) << g;
  }
}

}  // namespace
}  // namespace cnfgraph
