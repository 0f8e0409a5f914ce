#include <algorithm>
#include <limits>
#include <numeric>

#include "kend/error.hpp"
#include "kend/spanning.hpp"
#include "tree_search.hpp"

namespace kend {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

SpanningTree::SpanningTree(const Graph& host, std::vector<Edge> edges)
    : SpanningTree(std::make_shared<const Graph>(host), std::move(edges)) {}

SpanningTree::SpanningTree(std::shared_ptr<const Graph> host, std::vector<Edge> edges)
    : host_(std::move(host)), edges_(std::move(edges)) {
  if (!host_) throw Error(ErrorCode::kInvalidArgument, "spanning tree without a host graph");
  const Graph& g = *host_;
  std::sort(edges_.begin(), edges_.end());
  if (g.empty() || edges_.size() + 1 != g.order()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a spanning tree of " + std::to_string(g.order()) + " vertices needs " +
                    std::to_string(g.order() == 0 ? 0 : g.order() - 1) + " edges, got " +
                    std::to_string(edges_.size()));
  }

  std::vector<Vertex> parent(g.next_free_id());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  adjacency_.resize(g.next_free_id());
  for (const Edge& e : edges_) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::kInvalidArgument, "tree edge " + to_string(e) + " is not in the host graph");
    }
    const Vertex ra = find(e.u());
    const Vertex rb = find(e.v());
    if (ra == rb) throw Error(ErrorCode::kInvalidArgument, "tree edges contain a cycle");
    parent[ra] = rb;
    adjacency_[e.u()].push_back(e.v());
    adjacency_[e.v()].push_back(e.u());
  }
  // n - 1 acyclic edges on n vertices: connected, hence spanning.
  for (Vertex x : g.vertices()) {
    std::sort(adjacency_[x].begin(), adjacency_[x].end());
    if (adjacency_[x].size() == 1) leaves_.push_back(x);
  }
}

bool SpanningTree::contains(const Edge& e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::span<const Vertex> SpanningTree::neighbors(Vertex x) const {
  if (!host_->contains(x)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown vertex " + std::to_string(x));
  }
  return adjacency_[x];
}

std::size_t SpanningTree::degree(Vertex x) const { return neighbors(x).size(); }

std::vector<Vertex> SpanningTree::path(Vertex a, Vertex b) const {
  if (!host_->contains(a) || !host_->contains(b)) {
    throw Error(ErrorCode::kInvalidArgument, "path endpoint not in the tree");
  }
  constexpr Vertex kUnseen = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> previous(adjacency_.size(), kUnseen);
  std::vector<Vertex> stack{a};
  previous[a] = a;
  while (!stack.empty() && previous[b] == kUnseen) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adjacency_[x]) {
      if (previous[y] == kUnseen) {
        previous[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<Vertex> out{b};
  while (out.back() != a) out.push_back(previous[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

void for_each_spanning_tree(const Graph& g, const std::function<void(const SpanningTree&)>& visit) {
  const detail::DenseGraph dense(g);
  auto host = std::make_shared<const Graph>(g);
  detail::TreeSearch search(dense);
  search.run({}, [&](const detail::TreeSearchState& state) {
    std::vector<Edge> edges;
    edges.reserve(state.chosen.size());
    for (int index : state.chosen) {
      const auto [a, b] = dense.edges[index];
      edges.emplace_back(dense.ids[a], dense.ids[b]);
    }
    visit(SpanningTree(host, std::move(edges)));
  });
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](const SpanningTree& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_spanning_trees(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 40) throw Error(ErrorCode::kInvalidArgument, "spanning tree count limited to 40 vertices");
  if (n == 0) return 0;
  if (!is_connected(g)) return 0;
  if (n == 1) return 1;

  // Reduced Laplacian (drop the last vertex). It is positive definite for a
  // connected graph, so Bareiss elimination needs no pivoting.
  const std::size_t dim = n - 1;
  std::vector<Vertex> index(g.next_free_id(), 0);
  for (std::size_t i = 0; i < n; ++i) index[g.vertices()[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Wide>> m(dim, std::vector<Wide>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) {
    const Vertex x = g.vertices()[i];
    m[i][i] = static_cast<Wide>(g.degree(x));
    for (Vertex y : g.neighbors(x)) {
      if (index[y] < dim) m[i][index[y]] = -1;
    }
  }

  constexpr auto kSaturated = std::numeric_limits<std::uint64_t>::max();
  Wide previous = 1;
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    for (std::size_t i = k + 1; i < dim; ++i) {
      for (std::size_t j = k + 1; j < dim; ++j) {
        Wide lhs = 0;
        Wide rhs = 0;
        Wide diff = 0;
        if (__builtin_mul_overflow(m[i][j], m[k][k], &lhs) ||
            __builtin_mul_overflow(m[i][k], m[k][j], &rhs) ||
            __builtin_sub_overflow(lhs, rhs, &diff)) {
          return kSaturated;
        }
        m[i][j] = diff / previous;
      }
    }
    previous = m[k][k];
  }
  const Wide det = m[dim - 1][dim - 1];
  if (det > static_cast<Wide>(kSaturated)) return kSaturated;
  return static_cast<std::uint64_t>(det);
}

}  // namespace kend
