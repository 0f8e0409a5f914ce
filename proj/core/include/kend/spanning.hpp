#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "kend/graph.hpp"

namespace kend {

/// A spanning tree of a host graph, stored as an edge subset. The host is
/// shared, so copies are cheap.
class SpanningTree {
 public:
  /// Validates that `edges` is a spanning tree of `host`; throws
  /// kInvalidArgument otherwise.
  SpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges);
  SpanningTree(const Graph& host, std::vector<Edge> edges);

  const Graph& host() const noexcept { return *host_; }
  const std::shared_ptr<const Graph>& shared_host() const noexcept { return host_; }

  /// Sorted ascending.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(const Edge& e) const noexcept;

  std::size_t degree(Vertex x) const;
  std::span<const Vertex> neighbors(Vertex x) const;

  /// Vertices of tree-degree 1, ascending.
  const std::vector<Vertex>& leaves() const noexcept { return leaves_; }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }

  /// The unique path a..b; {a} when a == b.
  std::vector<Vertex> path(Vertex a, Vertex b) const;

  friend bool operator==(const SpanningTree& a, const SpanningTree& b) noexcept {
    return a.edges_ == b.edges_ && *a.host_ == *b.host_;
  }

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // indexed by vertex id
  std::vector<Vertex> leaves_;
};

inline std::size_t leaf_count(const SpanningTree& t) { return t.leaf_count(); }
inline std::vector<Vertex> tree_path(const SpanningTree& t, Vertex a, Vertex b) {
  return t.path(a, b);
}

/// Visits every spanning tree exactly once (contraction/deletion over edges
/// in lexicographic order; a bridge of the remaining graph is never
/// deleted). Throws kNotConnected.
void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit);
std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g);

/// Kirchhoff count (exact, fraction-free elimination). Throws
/// kInvalidArgument above 40 vertices.
std::uint64_t count_spanning_trees(const Graph& g);

struct LeafReport {
  std::size_t min_leaves = 0;
  SpanningTree witness;
  /// Every k for which some spanning tree has exactly k leaves, ascending.
  std::vector<std::size_t> spectrum;
};

struct MinimumLeafTree {
  std::size_t min_leaves = 0;
  SpanningTree witness;
};

/// Plain enumeration is used when the graph has at most this many spanning
/// trees; branch-and-bound above it.
inline constexpr std::uint64_t kPlainEnumerationLimit = 2000;

/// Exact minimum and leaf spectrum. K1 reports {0}, K2 reports {2}.
/// Throws kNotConnected; graphs above 64 vertices are rejected.
LeafReport leaf_report(const Graph& g);
/// Minimum only; prunes harder than leaf_report.
MinimumLeafTree minimum_leaf_tree(const Graph& g);

/// A spanning tree with exactly k leaves exists.
bool has_k_end_tree(const Graph& g, std::size_t k);
/// A spanning tree with at most k leaves exists.
bool has_k_ended_tree(const Graph& g, std::size_t k);

/// Backtracking search, independent of the leaf solver. True for K1 and
/// the empty graph.
bool has_hamiltonian_path(const Graph& g);

/// deg(a) + deg(b) >= n - 1 for every non-adjacent pair. Throws kTooSmall
/// below three vertices.
bool check_ore_condition(const Graph& g);

struct ConditionReport {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
};

/// Hypothesis: K_{1,4}-free and (sigma_4 absent or sigma_4 >= n - 1).
/// Conclusion: a spanning tree with at most `leaf_bound` leaves exists.
ConditionReport check_sigma4_condition(const Graph& g, std::size_t leaf_bound);

}  // namespace kend
