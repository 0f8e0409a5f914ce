#include <gtest/gtest.h>

#include "error_code.hpp"
#include "kend/corpus.hpp"
#include "kend/spanning.hpp"
#include "kend/theorems.hpp"
#include "oracles.hpp"

namespace kend {
namespace {

using testing::code_of;

constexpr Vertex X = 0, Y = 1, Z = 2, W = 3, P = 4, U = 5, V = 6;

Graph fig21() { return named_graph("fig21").graph; }

SpanningTree t_star() { return SpanningTree(fig21(), {{X, Y}, {Y, Z}, {Z, W}, {W, P}, {P, U}, {P, V}}); }

// Centre 0; legs 0-1, 0-2 and 0-3-4.
Graph spider_112() { return Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}}); }

TEST(PreservingEdge, Fig21) {
  const PreservationWitness w = find_preserving_edge(fig21(), t_star());
  EXPECT_EQ(w.non_leaves, (std::vector<Vertex>{Y, Z, W, P}));
  EXPECT_EQ(w.path_from, Y);
  EXPECT_EQ(w.path_to, Z);
  EXPECT_EQ(w.edge, Edge(Y, Z));
  EXPECT_EQ(w.tree_after.leaf_count(), 3u);
  EXPECT_EQ(w.tree_after.host(), w.contraction.contracted);
  EXPECT_EQ(w.contraction.merged_vertex, 7u);
}

TEST(PreservingEdge, CycleHamiltonianPath) {
  const Graph c6 = cycle_graph(6);
  for (const SpanningTree& t : enumerate_spanning_trees(c6)) {
    const PreservationWitness w = find_preserving_edge(c6, t);
    EXPECT_NE(t.degree(w.edge.u()), 1u);
    EXPECT_NE(t.degree(w.edge.v()), 1u);
    EXPECT_EQ(w.tree_after.leaf_count(), 2u);
    EXPECT_EQ(leaf_report(w.contraction.contracted).spectrum, (std::vector<std::size_t>{2}));
  }
}

TEST(PreservingEdge, PathOnFourVertices) {
  const Graph p4 = path_graph(4);
  const PreservationWitness w = find_preserving_edge(p4, SpanningTree(p4, p4.edges()));
  EXPECT_EQ(w.non_leaves, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(w.edge, Edge(1, 2));
  EXPECT_EQ(w.tree_after.host().order(), 3u);
  EXPECT_EQ(w.tree_after.leaf_count(), 2u);
}

TEST(PreservingEdge, HypothesisChecks) {
  const Graph star = star_graph(3);  // k = 3, n = 4 = k + 1
  EXPECT_EQ(code_of([&] { find_preserving_edge(star, SpanningTree(star, star.edges())); }),
            ErrorCode::kHypothesisViolated);
  EXPECT_EQ(code_of([&] { find_preserving_edge(complete_graph(7), t_star()); }),
            ErrorCode::kHypothesisViolated);
}

TEST(ReduceLeafCount, Fig21) {
  const ReductionTrace r = reduce_leaf_count(fig21(), t_star());
  EXPECT_EQ(r.leaf, X);
  EXPECT_EQ(r.branch_vertex, P);
  EXPECT_EQ(r.path, (std::vector<Vertex>{X, Y, Z, W, P}));
  ASSERT_EQ(r.graphs.size(), 4u);
  EXPECT_EQ(r.source_edges, (std::vector<Edge>{{X, Y}, {Y, Z}, {Z, W}, {W, P}}));
  const Vertex last = r.graphs.back().merged_vertex;
  EXPECT_EQ(last, 10u);
  EXPECT_EQ(r.origin.at(last), (std::vector<Vertex>{X, Y, Z, W, P}));
  EXPECT_EQ(r.tree_after.leaf_count(), 2u);
  EXPECT_EQ(r.tree_after.leaves(), (std::vector<Vertex>{U, V}));
  EXPECT_EQ(r.tree_after.host(), r.graphs.back().contracted);
}

TEST(ReduceLeafCount, StarK13) {
  const Graph star = star_graph(3);
  const ReductionTrace r = reduce_leaf_count(star, SpanningTree(star, star.edges()));
  EXPECT_EQ(r.leaf, 1u);
  EXPECT_EQ(r.branch_vertex, 0u);
  EXPECT_EQ(r.graphs.size(), 1u);
  EXPECT_EQ(r.tree_after.host().order(), 3u);
  EXPECT_EQ(r.tree_after.leaf_count(), 2u);
}

TEST(ReduceLeafCount, SpiderWithUnevenLegs) {
  const Graph g = spider_112();
  const ReductionTrace r = reduce_leaf_count(g, SpanningTree(g, g.edges()));
  EXPECT_EQ(r.leaf, 1u);
  EXPECT_EQ(r.branch_vertex, 0u);
  EXPECT_EQ(r.path, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(r.tree_after.leaves(), (std::vector<Vertex>{2, 4}));
}

TEST(ReduceLeafCount, NeedsThreeLeaves) {
  const Graph p4 = path_graph(4);
  EXPECT_EQ(code_of([&] { reduce_leaf_count(p4, SpanningTree(p4, p4.edges())); }),
            ErrorCode::kHypothesisViolated);
}

TEST(LiftTree, CycleSubdivisionCase) {
  const Graph g = cycle_graph(5);
  const Edge e(0, 1);
  const ContractionResult c = contract(g, e);
  const Vertex w = c.merged_vertex;
  const LiftWitness lift = lift_tree(g, e, c, SpanningTree(c.contracted, {{w, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(lift.case_used, LiftCase::kSubdivision);
  EXPECT_EQ(lift.tree.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(lift.tree.leaf_count(), 2u);
}

TEST(LiftTree, CycleReplacementCase) {
  const Graph g = cycle_graph(5);
  const Edge e(0, 1);
  const ContractionResult c = contract(g, e);
  const Vertex w = c.merged_vertex;
  const LiftWitness lift = lift_tree(g, e, c, SpanningTree(c.contracted, {{w, 2}, {w, 4}, {3, 4}}));
  EXPECT_EQ(lift.case_used, LiftCase::kReplacement);
  EXPECT_EQ(lift.x1, std::optional<Vertex>(2));
  EXPECT_EQ(lift.x2, std::optional<Vertex>(4));
  EXPECT_EQ(lift.tree.leaf_count(), 2u);
  EXPECT_EQ(lift.tree.host(), g);
}

TEST(LiftTree, PathOnThreeVertices) {
  const Graph g = path_graph(3);
  const Edge e(0, 1);
  const ContractionResult c = contract(g, e);
  const LiftWitness lift = lift_tree(g, e, c, SpanningTree(c.contracted, c.contracted.edges()));
  EXPECT_EQ(lift.tree.edges(), g.edges());
  EXPECT_EQ(lift.tree.leaf_count(), 2u);
}

TEST(LiftTree, PreconditionErrors) {
  const Graph g = fig21();
  const ContractionResult c = contract(g, Edge(P, Y));
  const SpanningTree t = leaf_report(c.contracted).witness;
  EXPECT_EQ(code_of([&] { lift_tree(g, Edge(P, Y), c, t); }), ErrorCode::kConditionViolated);
  EXPECT_EQ(code_of([&] { lift_tree(g, Edge(P, U), c, t); }), ErrorCode::kHypothesisViolated);
}

TEST(LiftTreeRelaxed, Fig21) {
  const Graph g = fig21();
  const ContractionResult c = contract(g, Edge(P, Y));
  for (const SpanningTree& t : enumerate_spanning_trees(c.contracted)) {
    const LiftWitness lift = lift_tree_relaxed(g, Edge(P, Y), c, t);
    EXPECT_LE(lift.tree.leaf_count(), t.leaf_count() + 1);
    EXPECT_EQ(lift.tree.host(), g);
  }
  const SpanningTree four = leaf_report(c.contracted).witness;
  ASSERT_EQ(four.leaf_count(), 4u);
  EXPECT_LE(lift_tree_relaxed(g, Edge(P, Y), c, four).tree.leaf_count(), 5u);
}

TEST(LiftTreeRelaxed, CyclesStayBelowThreeLeaves) {
  for (std::size_t n = 4; n <= 7; ++n) {
    const Graph g = cycle_graph(n);
    for (const Edge& e : g.edges()) {
      const ContractionResult c = contract(g, e);
      for (const SpanningTree& t : enumerate_spanning_trees(c.contracted)) {
        ASSERT_EQ(t.leaf_count(), 2u);
        EXPECT_LE(lift_tree_relaxed(g, e, c, t).tree.leaf_count(), 3u);
      }
    }
  }
}

TEST(LiftTreeRelaxed, PendantMergedVertexNeverAddsLeaves) {
  for (std::size_t n = 3; n <= 6; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      for (const Edge& e : g.edges()) {
        const ContractionResult c = contract(g, e);
        for_each_spanning_tree(c.contracted, [&](const SpanningTree& t) {
          if (t.degree(c.merged_vertex) != 1) return;
          const LiftWitness lift = lift_tree_relaxed(g, e, c, t);
          ASSERT_LE(lift.tree.leaf_count(), t.leaf_count()) << to_string(g) << " / " << to_string(e);
        });
      }
    }
  }
}

TEST(LiftTree, ExactOnEveryConditionEdgeUpToFiveVertices) {
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      for (const Edge& e : g.edges()) {
        if (!neighborhood_condition(g, e)) continue;
        const ContractionResult c = contract(g, e);
        for_each_spanning_tree(c.contracted, [&](const SpanningTree& t) {
          ASSERT_EQ(lift_tree(g, e, c, t).tree.leaf_count(), t.leaf_count());
        });
      }
    }
  }
}

TEST(MinLeafDrop, Examples) {
  const MinLeafDropCheck f = check_min_leaf_drop(fig21());
  EXPECT_TRUE(f.holds);
  EXPECT_EQ(f.min_leaves, 3u);
  for (std::size_t n = 3; n <= 8; ++n) {
    const MinLeafDropCheck c = check_min_leaf_drop(cycle_graph(n));
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(c.min_leaves, 2u);
  }
  const Graph k14 = named_graph("k14").graph;
  EXPECT_TRUE(check_min_leaf_drop(k14).holds);
  EXPECT_EQ(leaf_report(contract(k14, Edge(0, 1)).contracted).min_leaves, 3u);
  EXPECT_EQ(code_of([] { check_min_leaf_drop(path_graph(2)); }), ErrorCode::kTooSmall);
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  EXPECT_EQ(code_of([&] { check_min_leaf_drop(Graph(4, two)); }), ErrorCode::kNotConnected);
}

TEST(Witnesses, Deterministic) {
  const Graph g = fig21();
  EXPECT_EQ(find_preserving_edge(g, t_star()).edge, find_preserving_edge(g, t_star()).edge);
  EXPECT_EQ(reduce_leaf_count(g, t_star()).tree_after, reduce_leaf_count(g, t_star()).tree_after);
  EXPECT_EQ(leaf_report(g).witness, leaf_report(g).witness);
  const Graph c5 = cycle_graph(5);
  const ContractionResult c = contract(c5, Edge(0, 1));
  const SpanningTree t(c.contracted, {{5, 2}, {5, 4}, {3, 4}});
  const LiftWitness a = lift_tree(c5, Edge(0, 1), c, t);
  const LiftWitness b = lift_tree(c5, Edge(0, 1), c, t);
  EXPECT_EQ(a.tree, b.tree);
  EXPECT_EQ(a.attachments, b.attachments);
}

}  // namespace
}  // namespace kend
