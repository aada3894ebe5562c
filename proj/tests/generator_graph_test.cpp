#include "gengraph/generator_graph.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gengraph {
namespace {

// Triangle u, v, x with a pendant w on x: u=0, v=1, x=2, w=3.
SimpleGraph triangle_with_pendant() {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

TEST(BuildGeneratorGraphTest, OrderFour) {
  const GeneratorGraph gg(4);
  EXPECT_EQ(gg.graph().edge_count(), 5u);
  EXPECT_EQ(gg.graph().degree(gg.vertex_of(1)), 3u);
  EXPECT_EQ(gg.graph().degree(gg.vertex_of(3)), 3u);
  EXPECT_EQ(gg.graph().degree(gg.vertex_of(0)), 2u);
  EXPECT_EQ(gg.graph().degree(gg.vertex_of(2)), 2u);
  // generators first, each block ascending
  EXPECT_EQ(gg.element_of(0), 1u);
  EXPECT_EQ(gg.element_of(1), 3u);
  EXPECT_EQ(gg.element_of(2), 0u);
  EXPECT_EQ(gg.element_of(3), 2u);
}

TEST(BuildGeneratorGraphTest, PrimeOrdersAreComplete) {
  EXPECT_EQ(GeneratorGraph(5).graph(), complete_graph(5));
  EXPECT_EQ(GeneratorGraph(2).graph(), complete_graph(2));
}

TEST(BuildGeneratorGraphTest, RejectsTrivialGroup) {
  EXPECT_THROW(build_generator_graph(1), TrivialGroupError);
}

TEST(DegreeByFormulaTest, Examples) {
  const GeneratorGraph z6(6);
  EXPECT_EQ(degree_by_formula(z6, 5), 5u);
  EXPECT_EQ(degree_by_formula(z6, 4), 2u);
  EXPECT_EQ(degree_by_formula(GeneratorGraph(3), 0), 2u);
  EXPECT_THROW(degree_by_formula(z6, 6), std::out_of_range);
  EXPECT_THROW(z6.vertex_of(6), std::out_of_range);
}

TEST(FaithfulEdgeTest, Examples) {
  const auto c5 = cycle_graph(5);
  EXPECT_FALSE(is_faithful_edge(c5, 0, 1));
  const auto k4 = complete_graph(4);
  for (auto [u, v] : k4.edges()) EXPECT_TRUE(is_faithful_edge(k4, u, v));
  EXPECT_FALSE(is_faithful_edge(triangle_with_pendant(), 0, 1));
  EXPECT_THROW(is_faithful_edge(c5, 0, 2), std::invalid_argument);
}

TEST(FaithfulGraphTest, CycleOfFiveHasNoFaithfulEdge) {
  const auto c5 = cycle_graph(5);
  for (auto [u, v] : c5.edges()) EXPECT_FALSE(is_faithful_edge(c5, u, v));
  const auto report = is_faithful_graph(c5);
  EXPECT_FALSE(report.is_faithful);
  EXPECT_FALSE(report.no_edges);
  ASSERT_TRUE(report.witness_edge && report.witness_missing_vertex);
  const auto [x, y] = *report.witness_edge;
  const Vertex w = *report.witness_missing_vertex;
  EXPECT_TRUE(c5.adjacent(x, y));
  EXPECT_NE(w, x);
  EXPECT_NE(w, y);
  EXPECT_FALSE(c5.adjacent(w, x));
  EXPECT_FALSE(c5.adjacent(w, y));
  // edge (0,1) misses the opposite vertex 3
  EXPECT_EQ(*report.witness_edge, (Edge{0, 1}));
  EXPECT_EQ(w, 3u);
}

TEST(FaithfulGraphTest, EdgelessIsVacuouslyFaithful) {
  const auto report = is_faithful_graph(null_graph(3));
  EXPECT_TRUE(report.is_faithful);
  EXPECT_TRUE(report.no_edges);
  EXPECT_NE(report.describe().find("no edges"), std::string::npos);
}

TEST(FaithfulGraphTest, TrianglePlusPendantPassesDegreeBoundButIsNotFaithful) {
  const auto g = triangle_with_pendant();
  EXPECT_TRUE(check_max_degree_bound(g));
  const auto report = is_faithful_graph(g);
  EXPECT_FALSE(report.is_faithful);
  EXPECT_EQ(*report.witness_edge, (Edge{0, 1}));
  EXPECT_EQ(*report.witness_missing_vertex, 3u);
}

TEST(DiameterByFormulaTest, Examples) {
  EXPECT_EQ(diameter_by_formula(7), 1u);
  EXPECT_EQ(diameter_by_formula(4), 2u);
  EXPECT_EQ(diameter_by_formula(2), 1u);
  EXPECT_EQ(diameter(GeneratorGraph(4).graph()), Diameter{std::size_t{2}});
  EXPECT_THROW(diameter_by_formula(1), TrivialGroupError);
}

TEST(MaxDegreeBoundTest, Examples) {
  EXPECT_TRUE(check_max_degree_bound(GeneratorGraph(6).graph()));
  EXPECT_FALSE(check_max_degree_bound(cycle_graph(5)));
  // 2*Delta >= n with odd n: Delta = 2 on 5 vertices fails, no truncation.
  SimpleGraph star(5);
  for (Vertex v = 1; v < 3; ++v) star.add_edge(0, v);
  EXPECT_FALSE(check_max_degree_bound(star));
  star.add_edge(0, 3);
  EXPECT_TRUE(check_max_degree_bound(star));
}

TEST(DegreeBoundsTest, Examples) {
  EXPECT_TRUE(check_degree_bounds(3));
  const auto deg3 = GeneratorGraph(3).graph().degrees();
  EXPECT_TRUE(std::all_of(deg3.begin(), deg3.end(), [](auto d) { return d == 2; }));
  EXPECT_TRUE(check_degree_bounds(12));
  EXPECT_TRUE(check_degree_bounds(4));
  EXPECT_THROW(check_degree_bounds(2), std::invalid_argument);
}

TEST(GeneratorGraphProperty, StructureTheorems) {
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const GeneratorGraph gg(n);
    const auto& g = gg.graph();
    const std::uint64_t s = gg.generator_count();

    ASSERT_EQ(g, generator_graph_join_form(n, s)) << "n=" << n;
    auto degrees = g.degrees();
    std::sort(degrees.begin(), degrees.end());
    ASSERT_EQ(degrees, degree_multiset_by_formula(n, s)) << "n=" << n;
    for (Vertex v = 0; v < n; ++v)
      ASSERT_EQ(g.degree(v), degree_by_formula(gg, gg.element_of(v)));
    ASSERT_EQ(g.edge_count(), edge_count_by_formula(n, s)) << "n=" << n;
    ASSERT_EQ(g == complete_graph(n), is_prime(n)) << "n=" << n;
    const auto faithful = is_faithful_graph(g);
    ASSERT_TRUE(faithful.is_faithful && !faithful.no_edges) << "n=" << n;
    ASSERT_EQ(diameter(g), Diameter{diameter_by_formula(n)}) << "n=" << n;
    ASSERT_TRUE(check_max_degree_bound(g)) << "n=" << n;
    if (n >= 3) ASSERT_TRUE(check_degree_bounds(n)) << "n=" << n;
  }
}

// Element-indexed oracle graph relabelled through the fixed labeling must
// equal the library's construction.
TEST(GeneratorGraphProperty, MatchesDefinitionalOracle) {
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const GeneratorGraph gg(n);
    const auto m = oracle::generator_graph(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v)
        ASSERT_EQ(gg.graph().adjacent(u, v), m.adj[gg.element_of(u)][gg.element_of(v)]);
  }
}

// Seed 20240601: Erdos-Renyi graphs on 4..12 vertices, connected and with at
// least one edge.
TEST(FaithfulFamilyProperty, RandomCorpus) {
  std::mt19937_64 rng(20240601);
  int faithful_count = 0;
  int unfaithful_count = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 4 + rng() % 9;
    const unsigned permille = 300 + static_cast<unsigned>(rng() % 700);
    const auto m = oracle::random_graph(rng, n, permille);
    if (!oracle::connected(m) || m.edges() == 0) continue;
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (m.adj[u][v]) g.add_edge(u, v);

    const auto report = is_faithful_graph(g);
    if (report.is_faithful) {
      ++faithful_count;
      const auto diam = diameter(g);
      ASSERT_TRUE(std::holds_alternative<std::size_t>(diam));
      ASSERT_LE(std::get<std::size_t>(diam), 2u);
      ASSERT_TRUE(check_max_degree_bound(g));
    } else {
      ++unfaithful_count;
      const auto [x, y] = *report.witness_edge;
      const Vertex w = *report.witness_missing_vertex;
      ASSERT_TRUE(g.adjacent(x, y));
      ASSERT_FALSE(w == x || w == y || g.adjacent(w, x) || g.adjacent(w, y));
    }
  }
  EXPECT_GT(faithful_count, 100);
  EXPECT_GT(unfaithful_count, 100);
}

TEST(GeneratorGraphExportTest, DotCarriesElementsAndGeneratorFlag) {
  const auto dot = GeneratorGraph(3).to_dot();
  EXPECT_EQ(dot,
            "graph Z3 {\n"
            "  0 [label=\"1\", element=1, generator=true];\n"
            "  1 [label=\"2\", element=2, generator=true];\n"
            "  2 [label=\"0\", element=0, generator=false];\n"
            "  0 -- 1;\n"
            "  0 -- 2;\n"
            "  1 -- 2;\n"
            "}\n");
}

}  // namespace
}  // namespace gengraph
