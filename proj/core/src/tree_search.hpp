#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "kend/graph.hpp"

namespace kend::detail {

inline constexpr std::size_t kMaxDenseOrder = 64;

/// Bitmask view of a graph on dense indices 0..n-1 (index order follows id
/// order, so the edge list is lexicographic in both).
struct DenseGraph {
  std::size_t n = 0;
  std::vector<std::uint64_t> adjacency;
  std::vector<Vertex> ids;
  std::vector<std::pair<int, int>> edges;

  explicit DenseGraph(const Graph& g);

  std::uint64_t all() const noexcept { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }
};

/// True iff `within` is connected in the graph given by `adjacency`
/// (restricted to `within`).
bool mask_connected(const std::vector<std::uint64_t>& adjacency, std::uint64_t within);

/// Search state exposed to prune/visit callbacks.
struct TreeSearchState {
  std::size_t n = 0;
  std::vector<int> tree_degree;
  std::vector<int> pending;  // unprocessed edges incident to each vertex
  std::vector<int> chosen;   // indices into DenseGraph::edges
};

/// Contraction/deletion search over spanning trees. Edges are decided in
/// order: an edge closing a cycle in the partial forest is dropped, any
/// other edge is first included, then deleted if the graph stays connected
/// without it. Every complete leaf of the search is a distinct spanning
/// tree.
class TreeSearch {
 public:
  using Prune = std::function<bool(const TreeSearchState&)>;
  using Visit = std::function<void(const TreeSearchState&)>;

  explicit TreeSearch(const DenseGraph& g);

  /// `prune` may be empty. Requires a connected graph with n >= 1.
  void run(const Prune& prune, const Visit& visit);

 private:
  int find(int x) const;
  void recurse(std::size_t index);

  const DenseGraph& g_;
  TreeSearchState state_;
  std::vector<std::uint64_t> live_;
  std::vector<int> parent_;
  std::vector<int> rank_;
  const Prune* prune_ = nullptr;
  const Visit* visit_ = nullptr;
};

}  // namespace kend::detail
