#include <algorithm>
#include <bit>
#include <optional>

#include "kend/error.hpp"
#include "kend/spanning.hpp"
#include "tree_search.hpp"

namespace kend {

namespace {

using detail::DenseGraph;
using detail::TreeSearch;
using detail::TreeSearchState;

// Final degree of v is at most tree_degree + pending, and at least 1 once
// n >= 2, so vertices with that bound <= 1 are certain leaves. Vertices
// already at tree-degree 2 can never be leaves.
struct LeafBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

LeafBounds bounds(const TreeSearchState& s) {
  std::size_t forced = 0;
  std::size_t internal = 0;
  for (std::size_t v = 0; v < s.n; ++v) {
    if (s.tree_degree[v] + s.pending[v] <= 1) ++forced;
    if (s.tree_degree[v] >= 2) ++internal;
  }
  const std::size_t cap = s.n >= 3 ? s.n - 1 : s.n;
  return {std::max<std::size_t>(forced, 2), std::min(s.n - internal, cap)};
}

std::size_t leaves_of(const TreeSearchState& s) {
  return static_cast<std::size_t>(std::count(s.tree_degree.begin(), s.tree_degree.end(), 1));
}

std::vector<Edge> edges_of(const DenseGraph& dense, const std::vector<int>& chosen) {
  std::vector<Edge> out;
  out.reserve(chosen.size());
  for (int index : chosen) {
    const auto [a, b] = dense.edges[index];
    out.emplace_back(dense.ids[a], dense.ids[b]);
  }
  return out;
}

// Depth-first spanning tree from `root`, neighbours in index order.
std::vector<int> dfs_tree(const DenseGraph& dense, int root, std::size_t& leaves) {
  std::vector<int> edge_index(dense.n * dense.n, -1);
  for (std::size_t i = 0; i < dense.edges.size(); ++i) {
    const auto [a, b] = dense.edges[i];
    edge_index[a * dense.n + b] = edge_index[b * dense.n + a] = static_cast<int>(i);
  }
  std::vector<int> degree(dense.n, 0);
  std::vector<int> chosen;
  std::uint64_t visited = std::uint64_t{1} << root;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int x = stack.back();
    const std::uint64_t next = dense.adjacency[x] & ~visited;
    if (!next) {
      stack.pop_back();
      continue;
    }
    const int y = std::countr_zero(next);
    visited |= std::uint64_t{1} << y;
    chosen.push_back(edge_index[x * dense.n + y]);
    ++degree[x];
    ++degree[y];
    stack.push_back(y);
  }
  leaves = static_cast<std::size_t>(std::count(degree.begin(), degree.end(), 1));
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

void require_searchable(const Graph& g) {
  if (g.empty()) throw Error(ErrorCode::kTooSmall, "the empty graph has no spanning tree");
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
}

}  // namespace

LeafReport leaf_report(const Graph& g) {
  require_searchable(g);
  auto host = std::make_shared<const Graph>(g);
  if (g.order() == 1) return {0, SpanningTree(host, {}), {0}};

  const DenseGraph dense(g);
  std::vector<bool> found(dense.n + 1, false);
  std::size_t best = dense.n + 1;
  std::vector<int> best_tree;

  const TreeSearch::Visit visit = [&](const TreeSearchState& s) {
    const std::size_t k = leaves_of(s);
    found[k] = true;
    if (k < best) {
      best = k;
      best_tree = s.chosen;
    }
  };
  // Only subtrees that could still produce an unseen leaf count are worth
  // exploring.
  const TreeSearch::Prune prune = [&](const TreeSearchState& s) {
    const LeafBounds b = bounds(s);
    for (std::size_t k = b.lower; k <= b.upper; ++k) {
      if (!found[k]) return false;
    }
    return true;
  };

  TreeSearch search(dense);
  if (count_spanning_trees(g) <= kPlainEnumerationLimit) {
    search.run({}, visit);
  } else {
    search.run(prune, visit);
  }

  std::vector<std::size_t> spectrum;
  for (std::size_t k = 0; k < found.size(); ++k) {
    if (found[k]) spectrum.push_back(k);
  }
  return {best, SpanningTree(host, edges_of(dense, best_tree)), std::move(spectrum)};
}

MinimumLeafTree minimum_leaf_tree(const Graph& g) {
  require_searchable(g);
  auto host = std::make_shared<const Graph>(g);
  if (g.order() == 1) return {0, SpanningTree(host, {})};
  if (g.order() == 2) return {2, SpanningTree(host, g.edges())};

  const DenseGraph dense(g);
  // Degree-1 vertices of g are leaves of every spanning tree.
  std::size_t target = 2;
  {
    std::size_t pendant = 0;
    for (std::uint64_t row : dense.adjacency) pendant += std::popcount(row) == 1 ? 1 : 0;
    target = std::max(target, pendant);
  }

  std::size_t best = dense.n;
  std::vector<int> best_tree;
  for (std::size_t root = 0; root < dense.n && best > target; ++root) {
    std::size_t leaves = 0;
    std::vector<int> tree = dfs_tree(dense, static_cast<int>(root), leaves);
    if (leaves < best) {
      best = leaves;
      best_tree = std::move(tree);
    }
  }

  if (best > target) {
    TreeSearch search(dense);
    search.run(
        [&](const TreeSearchState& s) { return best <= target || bounds(s).lower >= best; },
        [&](const TreeSearchState& s) {
          const std::size_t k = leaves_of(s);
          if (k < best) {
            best = k;
            best_tree = s.chosen;
          }
        });
  }
  return {best, SpanningTree(host, edges_of(dense, best_tree))};
}

bool has_k_end_tree(const Graph& g, std::size_t k) {
  const LeafReport report = leaf_report(g);
  return std::binary_search(report.spectrum.begin(), report.spectrum.end(), k);
}

bool has_k_ended_tree(const Graph& g, std::size_t k) { return minimum_leaf_tree(g).min_leaves <= k; }

}  // namespace kend
