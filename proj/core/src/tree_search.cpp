#include "tree_search.hpp"

#include <bit>

#include "kend/error.hpp"

namespace kend::detail {

DenseGraph::DenseGraph(const Graph& g) : n(g.order()), ids(g.vertices()) {
  if (n > kMaxDenseOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "exact search supports at most 64 vertices, got " + std::to_string(n));
  }
  std::vector<int> index(g.next_free_id(), -1);
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = static_cast<int>(i);
  adjacency.assign(n, 0);
  for (const Edge& e : g.edges()) {
    const int a = index[e.u()];
    const int b = index[e.v()];
    adjacency[a] |= std::uint64_t{1} << b;
    adjacency[b] |= std::uint64_t{1} << a;
    edges.emplace_back(a, b);
  }
}

bool mask_connected(const std::vector<std::uint64_t>& adjacency, std::uint64_t within) {
  if (within == 0) return true;
  std::uint64_t reached = within & (~within + 1);
  std::uint64_t frontier = reached;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= adjacency[x];
    }
    next &= within & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == within;
}

TreeSearch::TreeSearch(const DenseGraph& g) : g_(g) {}

int TreeSearch::find(int x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

void TreeSearch::run(const Prune& prune, const Visit& visit) {
  prune_ = prune ? &prune : nullptr;
  visit_ = &visit;
  const std::size_t n = g_.n;
  state_.n = n;
  state_.tree_degree.assign(n, 0);
  state_.pending.assign(n, 0);
  state_.chosen.clear();
  for (const auto& [a, b] : g_.edges) {
    ++state_.pending[a];
    ++state_.pending[b];
  }
  live_ = g_.adjacency;
  parent_.resize(n);
  rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  if (n == 0 || !mask_connected(live_, g_.all())) {
    throw Error(ErrorCode::kNotConnected, "spanning trees need a connected non-empty graph");
  }
  recurse(0);
}

void TreeSearch::recurse(std::size_t index) {
  if (state_.chosen.size() + 1 == g_.n) {
    (*visit_)(state_);
    return;
  }
  if (prune_ && (*prune_)(state_)) return;

  const auto [a, b] = g_.edges[index];
  const std::uint64_t bit_a = std::uint64_t{1} << a;
  const std::uint64_t bit_b = std::uint64_t{1} << b;
  --state_.pending[a];
  --state_.pending[b];

  const int ra = find(a);
  const int rb = find(b);
  if (ra == rb) {
    live_[a] &= ~bit_b;
    live_[b] &= ~bit_a;
    recurse(index + 1);
    live_[a] |= bit_b;
    live_[b] |= bit_a;
  } else {
    // include
    int child = ra;
    int root = rb;
    if (rank_[child] > rank_[root]) std::swap(child, root);
    const bool bumped = rank_[child] == rank_[root];
    parent_[child] = root;
    if (bumped) ++rank_[root];
    ++state_.tree_degree[a];
    ++state_.tree_degree[b];
    state_.chosen.push_back(static_cast<int>(index));
    recurse(index + 1);
    state_.chosen.pop_back();
    --state_.tree_degree[a];
    --state_.tree_degree[b];
    if (bumped) --rank_[root];
    parent_[child] = child;

    // delete, unless the edge is a bridge of what is left
    live_[a] &= ~bit_b;
    live_[b] &= ~bit_a;
    if (mask_connected(live_, g_.all())) recurse(index + 1);
    live_[a] |= bit_b;
    live_[b] |= bit_a;
  }

  ++state_.pending[a];
  ++state_.pending[b];
}

}  // namespace kend::detail
