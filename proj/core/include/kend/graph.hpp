#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kend {

using Vertex = std::uint32_t;

/// Unordered edge. Endpoints are stored normalized (u() < v()), so
/// Edge(a, b) == Edge(b, a).
class Edge {
 public:
  Edge(Vertex a, Vertex b);

  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }

  bool has_endpoint(Vertex x) const noexcept { return x == u_ || x == v_; }
  /// The endpoint that is not `x`. `x` must be an endpoint.
  Vertex other(Vertex x) const noexcept { return x == u_ ? v_ : u_; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Vertex u_;
  Vertex v_;
};

std::string to_string(const Edge& e);

/// Simple undirected graph over small non-negative vertex ids. Ids need not
/// be contiguous: contraction introduces fresh ids and retires old ones.
/// Instances are immutable; every operation in this library returns a new
/// graph.
class Graph {
 public:
  Graph() = default;

  /// Graph on vertices 0..n-1 with the given edges.
  Graph(std::size_t n, std::span<const Edge> edges);
  /// Graph on an explicit vertex set. Throws kInvalidArgument if an edge
  /// names a vertex outside `vertices` or the vertex list has duplicates.
  Graph(std::vector<Vertex> vertices, std::span<const Edge> edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return vertices_.empty(); }

  /// Sorted ascending.
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  bool contains(Vertex x) const noexcept;

  bool has_edge(Vertex a, Vertex b) const noexcept;
  bool has_edge(const Edge& e) const noexcept { return has_edge(e.u(), e.v()); }

  /// Sorted ascending. Throws kInvalidArgument for unknown vertices.
  std::span<const Vertex> neighbors(Vertex x) const;
  std::size_t degree(Vertex x) const { return neighbors(x).size(); }
  std::size_t min_degree() const;

  /// All edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  /// Smallest id strictly greater than every vertex id (0 when empty).
  Vertex next_free_id() const noexcept;

  /// True iff the vertex ids are exactly 0..order()-1.
  bool is_dense() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

 private:
  const std::vector<Vertex>& row(Vertex x) const;

  std::vector<Vertex> vertices_;
  std::vector<std::vector<Vertex>> adjacency_;  // indexed by id
  std::vector<bool> present_;                   // indexed by id
  std::size_t edge_count_ = 0;
};

std::string to_string(const Graph& g);

struct ContractionResult {
  Graph contracted;
  Vertex merged_vertex = 0;
  /// Each vertex of `contracted` to the sorted source vertices it stands
  /// for; singletons except merged_vertex -> {u, v}.
  std::map<Vertex, std::vector<Vertex>> origin;
};

/// G/e: delete e, identify its endpoints into a fresh vertex, collapse
/// parallel edges. Throws kEdgeNotPresent.
ContractionResult contract(const Graph& g, const Edge& e);

struct Subdivision {
  Graph graph;
  Vertex new_vertex = 0;
};

/// Replace uv by the path u - w - v through a fresh vertex w.
Subdivision subdivide(const Graph& g, const Edge& e);

struct PrivateNeighbors {
  std::vector<Vertex> of_u;  // N(u) \ {v}
  std::vector<Vertex> of_v;  // N(v) \ {u}
};

/// For e = uv with u = e.u(), v = e.v().
PrivateNeighbors edge_private_neighbors(const Graph& g, const Edge& e);

/// |N_e(u) - N_e(v)| <= 1 and |N_e(v) - N_e(u)| <= 1.
bool neighborhood_condition(const Graph& g, const Edge& e);

bool is_connected(const Graph& g);

/// No vertex has r pairwise non-adjacent neighbours (no induced K_{1,r}).
bool is_k1r_free(const Graph& g, std::size_t r);

/// Minimum degree sum over independent sets of exactly k vertices, or
/// nullopt when none exists.
std::optional<std::size_t> sigma_k(const Graph& g, std::size_t k);

struct DenseRelabeling {
  Graph graph;                   // ids 0..n-1
  std::vector<Vertex> original;  // dense id -> original id
};

/// Order-preserving relabeling onto 0..n-1.
DenseRelabeling densify(const Graph& g);

}  // namespace kend

template <>
struct std::hash<kend::Edge> {
  std::size_t operator()(const kend::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u()} << 32) | e.v());
  }
};
