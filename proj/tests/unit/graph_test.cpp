#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <unordered_set>

#include "kend/corpus.hpp"
#include "kend/error.hpp"
#include "kend/graph.hpp"
#include "error_code.hpp"
#include "oracles.hpp"

namespace kend {
namespace {

using testing::code_of;

// fig21 labels: x=0 y=1 z=2 w=3 p=4 u=5 v=6
constexpr Vertex X = 0, Y = 1, Z = 2, W = 3, P = 4, U = 5, V = 6;

Graph fig21() { return named_graph("fig21").graph; }

std::vector<Vertex> to_vec(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

TEST(Edge, UnorderedEqualityAndHash) {
  const Edge a(3, 1);
  const Edge b(1, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.u(), 1u);
  EXPECT_EQ(a.v(), 3u);
  EXPECT_EQ(std::hash<Edge>{}(a), std::hash<Edge>{}(b));
  EXPECT_EQ(a.other(1), 3u);
  EXPECT_TRUE(a.has_endpoint(3));
  EXPECT_FALSE(a.has_endpoint(2));
  std::unordered_set<Edge> set{a, b};
  EXPECT_EQ(set.size(), 1u);
}

TEST(Edge, SelfLoopRejected) {
  EXPECT_EQ(code_of([] { Edge(2, 2); }), ErrorCode::kInvalidArgument);
}

TEST(Graph, ConstructionRejectsBadInput) {
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_EQ(code_of([&] { Graph(2, dup); }), ErrorCode::kInvalidArgument);
  const std::vector<Edge> outside{{0, 5}};
  EXPECT_EQ(code_of([&] { Graph(3, outside); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { Graph(std::vector<Vertex>{1, 1}, {}); }), ErrorCode::kInvalidArgument);
}

TEST(Graph, BasicQueries) {
  const Graph g = fig21();
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 7u);
  EXPECT_TRUE(g.is_dense());
  EXPECT_EQ(g.next_free_id(), 7u);
  EXPECT_EQ(to_vec(g.neighbors(P)), (std::vector<Vertex>{Y, W, U, V}));
  EXPECT_EQ(g.min_degree(), 1u);
  EXPECT_EQ(code_of([&] { (void)g.neighbors(9); }), ErrorCode::kInvalidArgument);
  const std::vector<Edge> edges = g.edges();
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(Contract, CycleBecomesShorterCycle) {
  const ContractionResult c = contract(cycle_graph(5), Edge(0, 1));
  const Graph& h = c.contracted;
  EXPECT_EQ(h.order(), 4u);
  EXPECT_EQ(h.size(), 4u);
  EXPECT_TRUE(is_connected(h));
  for (Vertex x : h.vertices()) EXPECT_EQ(h.degree(x), 2u);
  EXPECT_EQ(c.merged_vertex, 5u);
}

TEST(Contract, K2BecomesK1) {
  const std::vector<Edge> e{{0, 1}};
  const ContractionResult c = contract(Graph(2, e), Edge(0, 1));
  EXPECT_EQ(c.contracted.order(), 1u);
  EXPECT_EQ(c.contracted.size(), 0u);
  EXPECT_EQ(c.origin.at(c.merged_vertex), (std::vector<Vertex>{0, 1}));
}

TEST(Contract, Fig21AtPY) {
  const Graph g = fig21();
  const ContractionResult c = contract(g, Edge(P, Y));
  const Graph& h = c.contracted;
  const Vertex q = c.merged_vertex;
  EXPECT_EQ(q, 7u);
  EXPECT_EQ(h.order(), 6u);
  EXPECT_EQ(to_vec(h.neighbors(q)), (std::vector<Vertex>{X, Z, W, U, V}));
  // The only edge not touching q.
  std::vector<Edge> others;
  for (const Edge& e : h.edges()) {
    if (!e.has_endpoint(q)) others.push_back(e);
  }
  EXPECT_EQ(others, (std::vector<Edge>{Edge(Z, W)}));

  // Brute-force reconstruction: classes adjacent iff some source edge joins them.
  for (const auto& [a, from_a] : c.origin) {
    for (const auto& [b, from_b] : c.origin) {
      if (a >= b) continue;
      bool joined = false;
      for (Vertex s : from_a) {
        for (Vertex t : from_b) joined = joined || g.has_edge(s, t);
      }
      EXPECT_EQ(h.has_edge(a, b), joined) << a << "," << b;
    }
  }
}

TEST(Contract, MissingEdgeAndPurity) {
  const Graph g = fig21();
  const Graph copy = g;
  EXPECT_EQ(code_of([&] { contract(g, Edge(X, V)); }), ErrorCode::kEdgeNotPresent);
  (void)contract(g, Edge(P, Y));
  EXPECT_EQ(g, copy);
}

TEST(Contract, OriginPartitionsAndAdjacencyForSmallGraphs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      for (const Edge& e : g.edges()) {
        const ContractionResult c = contract(g, e);
        std::vector<Vertex> covered;
        for (const auto& [x, from] : c.origin) {
          EXPECT_TRUE(c.contracted.contains(x));
          covered.insert(covered.end(), from.begin(), from.end());
        }
        std::sort(covered.begin(), covered.end());
        ASSERT_EQ(covered, g.vertices());

        const PrivateNeighbors pn = edge_private_neighbors(g, e);
        std::set<Vertex> expected(pn.of_u.begin(), pn.of_u.end());
        expected.insert(pn.of_v.begin(), pn.of_v.end());
        const auto merged = c.contracted.neighbors(c.merged_vertex);
        EXPECT_EQ(std::set<Vertex>(merged.begin(), merged.end()), expected);

        std::vector<Vertex> common;
        std::set_intersection(pn.of_u.begin(), pn.of_u.end(), pn.of_v.begin(), pn.of_v.end(),
                              std::back_inserter(common));
        EXPECT_EQ(c.contracted.order(), g.order() - 1);
        EXPECT_EQ(c.contracted.size(), g.size() - 1 - common.size());
      }
    }
  }
}

TEST(Contract, PreservesConnectivityUpToSixVertices) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      for (const Edge& e : g.edges()) {
        ASSERT_TRUE(is_connected(contract(g, e).contracted)) << to_string(g) << " / " << to_string(e);
      }
    }
  }
}

TEST(Subdivide, K2BecomesP3) {
  const std::vector<Edge> e{{0, 1}};
  const Subdivision s = subdivide(Graph(2, e), Edge(0, 1));
  EXPECT_EQ(s.new_vertex, 2u);
  const std::vector<Edge> expected{{0, 2}, {1, 2}};
  EXPECT_EQ(s.graph, Graph(3, expected));
}

TEST(Subdivide, TriangleBecomesC4) {
  const Subdivision s = subdivide(cycle_graph(3), Edge(1, 2));
  EXPECT_EQ(s.graph.order(), 4u);
  EXPECT_EQ(s.graph.size(), 4u);
  for (Vertex x : s.graph.vertices()) EXPECT_EQ(s.graph.degree(x), 2u);
  EXPECT_TRUE(is_connected(s.graph));
  EXPECT_EQ(code_of([] { subdivide(cycle_graph(3), Edge(0, 4)); }), ErrorCode::kEdgeNotPresent);
}

TEST(Subdivide, ContractingEitherNewEdgeUndoesIt) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      for (const Edge& e : g.edges()) {
        const Subdivision s = subdivide(g, e);
        for (Vertex end : {e.u(), e.v()}) {
          const ContractionResult c = contract(s.graph, Edge(end, s.new_vertex));
          // Map each contracted vertex back to the source vertex it stands for.
          auto back = [&](Vertex x) {
            return x == c.merged_vertex ? end : c.origin.at(x).front();
          };
          std::vector<Edge> mapped;
          for (const Edge& f : c.contracted.edges()) mapped.emplace_back(back(f.u()), back(f.v()));
          std::sort(mapped.begin(), mapped.end());
          ASSERT_EQ(mapped, g.edges());
          ASSERT_EQ(c.contracted.order(), g.order());
        }
      }
    }
  }
}

TEST(PrivateNeighbors, Examples) {
  const PrivateNeighbors f = edge_private_neighbors(fig21(), Edge(P, Y));
  // Edge(P, Y) normalizes to u = y, v = p.
  EXPECT_EQ(f.of_u, (std::vector<Vertex>{X, Z}));
  EXPECT_EQ(f.of_v, (std::vector<Vertex>{W, U, V}));

  const PrivateNeighbors c = edge_private_neighbors(cycle_graph(4), Edge(0, 1));
  EXPECT_EQ(c.of_u, (std::vector<Vertex>{3}));
  EXPECT_EQ(c.of_v, (std::vector<Vertex>{2}));

  const std::vector<Edge> e{{0, 1}};
  const PrivateNeighbors k2 = edge_private_neighbors(Graph(2, e), Edge(0, 1));
  EXPECT_TRUE(k2.of_u.empty());
  EXPECT_TRUE(k2.of_v.empty());
}

TEST(NeighborhoodCondition, Examples) {
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph c = cycle_graph(n);
    for (const Edge& e : c.edges()) EXPECT_TRUE(neighborhood_condition(c, e)) << n;
  }
  EXPECT_FALSE(neighborhood_condition(fig21(), Edge(P, Y)));
  const std::vector<Edge> e{{0, 1}};
  EXPECT_TRUE(neighborhood_condition(Graph(2, e), Edge(0, 1)));
  EXPECT_EQ(code_of([] { neighborhood_condition(cycle_graph(4), Edge(0, 2)); }),
            ErrorCode::kEdgeNotPresent);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle_graph(5)));
  const std::vector<Edge> two{{0, 1}, {2, 3}};
  EXPECT_FALSE(is_connected(Graph(4, two)));
  EXPECT_TRUE(is_connected(fig21()));
  EXPECT_TRUE(is_connected(Graph(1, {})));
}

TEST(Connectivity, AgreesWithOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      ASSERT_EQ(is_connected(g), oracle::connected(g)) << to_string(g);
    }
  }
}

TEST(K1rFree, Examples) {
  EXPECT_FALSE(is_k1r_free(star_graph(4), 4));
  for (std::size_t n = 3; n <= 9; ++n) {
    EXPECT_TRUE(is_k1r_free(cycle_graph(n), 4));
    EXPECT_TRUE(oracle::k1r_free(cycle_graph(n), 4));
  }
  EXPECT_FALSE(is_k1r_free(fig21(), 4));
  EXPECT_EQ(code_of([] { is_k1r_free(fig21(), 0); }), ErrorCode::kInvalidArgument);
}

TEST(K1rFree, AgreesWithOracleAndIsMonotone) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      bool previous = false;
      for (std::size_t r = 1; r <= 5; ++r) {
        const bool free = is_k1r_free(g, r);
        ASSERT_EQ(free, oracle::k1r_free(g, r)) << to_string(g) << " r=" << r;
        if (previous) ASSERT_TRUE(free);
        previous = free;
      }
    }
  }
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_k(cycle_graph(4), 2), std::optional<std::size_t>(4));
  EXPECT_EQ(sigma_k(complete_graph(4), 2), std::nullopt);
  // x, u, v, z: 1 + 1 + 1 + 2.
  EXPECT_EQ(sigma_k(fig21(), 4), std::optional<std::size_t>(5));
  EXPECT_EQ(sigma_k(cycle_graph(6), 4), std::nullopt);
}

TEST(Sigma, AgreesWithOracle) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) {
      EXPECT_EQ(sigma_k(g, 1), std::optional<std::size_t>(g.min_degree()));
      for (std::size_t k = 1; k <= 4; ++k) {
        ASSERT_EQ(sigma_k(g, k), oracle::sigma(g, k)) << to_string(g) << " k=" << k;
      }
    }
  }
}

TEST(Densify, KeepsOrderAndEdges) {
  const ContractionResult c = contract(fig21(), Edge(P, Y));
  const DenseRelabeling d = densify(c.contracted);
  EXPECT_TRUE(d.graph.is_dense());
  EXPECT_EQ(d.original, c.contracted.vertices());
  EXPECT_EQ(d.graph.size(), c.contracted.size());
  for (const Edge& e : d.graph.edges()) {
    EXPECT_TRUE(c.contracted.has_edge(d.original[e.u()], d.original[e.v()]));
  }
}

}  // namespace
}  // namespace kend
