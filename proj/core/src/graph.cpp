#include "kend/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "kend/error.hpp"

namespace kend {

Edge::Edge(Vertex a, Vertex b) : u_(std::min(a, b)), v_(std::max(a, b)) {
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(a));
  }
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u()) + "-" + std::to_string(e.v());
}

namespace {

std::vector<Vertex> iota_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

}  // namespace

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(iota_vertices(n), edges) {}

Graph::Graph(std::vector<Vertex> vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vertex id");
  }
  const std::size_t bound = vertices_.empty() ? 0 : std::size_t{vertices_.back()} + 1;
  adjacency_.resize(bound);
  present_.assign(bound, false);
  for (Vertex x : vertices_) present_[x] = true;

  for (const Edge& e : edges) {
    if (!contains(e.u()) || !contains(e.v())) {
      throw Error(ErrorCode::kInvalidArgument, "edge " + to_string(e) + " names an unknown vertex");
    }
    adjacency_[e.u()].push_back(e.v());
    adjacency_[e.v()].push_back(e.u());
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
    }
  }
  edge_count_ = edges.size();
}

bool Graph::contains(Vertex x) const noexcept { return x < present_.size() && present_[x]; }

const std::vector<Vertex>& Graph::row(Vertex x) const {
  if (!contains(x)) {
    throw Error(ErrorCode::kInvalidArgument, "unknown vertex " + std::to_string(x));
  }
  return adjacency_[x];
}

bool Graph::has_edge(Vertex a, Vertex b) const noexcept {
  if (!contains(a) || !contains(b)) return false;
  const auto& r = adjacency_[a];
  return std::binary_search(r.begin(), r.end(), b);
}

std::span<const Vertex> Graph::neighbors(Vertex x) const { return row(x); }

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex x : vertices_) best = std::min(best, adjacency_[x].size());
  return vertices_.empty() ? 0 : best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex x : vertices_) {
    for (Vertex y : adjacency_[x]) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

Vertex Graph::next_free_id() const noexcept {
  return vertices_.empty() ? 0 : vertices_.back() + 1;
}

bool Graph::is_dense() const noexcept {
  return vertices_.empty() || vertices_.back() + 1 == vertices_.size();
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.vertices_ != b.vertices_ || a.edge_count_ != b.edge_count_) return false;
  for (Vertex x : a.vertices_) {
    if (a.adjacency_[x] != b.adjacency_[x]) return false;
  }
  return true;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "V={";
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    os << (i ? "," : "") << g.vertices()[i];
  }
  os << "} E={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ",") << to_string(e);
    first = false;
  }
  os << "}";
  return os.str();
}

namespace {

void require_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kEdgeNotPresent, to_string(e) + " is not an edge");
  }
}

}  // namespace

ContractionResult contract(const Graph& g, const Edge& e) {
  require_edge(g, e);
  ContractionResult result;
  const Vertex w = g.next_free_id();
  result.merged_vertex = w;

  auto image = [&](Vertex x) { return e.has_endpoint(x) ? w : x; };

  std::vector<Vertex> vertices;
  vertices.reserve(g.order());
  for (Vertex x : g.vertices()) {
    if (e.has_endpoint(x)) continue;
    vertices.push_back(x);
    result.origin[x] = {x};
  }
  vertices.push_back(w);
  result.origin[w] = {e.u(), e.v()};

  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    edges.emplace_back(image(f.u()), image(f.v()));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  result.contracted = Graph(std::move(vertices), edges);
  return result;
}

Subdivision subdivide(const Graph& g, const Edge& e) {
  require_edge(g, e);
  const Vertex w = g.next_free_id();
  std::vector<Vertex> vertices = g.vertices();
  vertices.push_back(w);
  std::vector<Edge> edges;
  edges.reserve(g.size() + 1);
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u(), w);
  edges.emplace_back(w, e.v());
  return {Graph(std::move(vertices), edges), w};
}

PrivateNeighbors edge_private_neighbors(const Graph& g, const Edge& e) {
  require_edge(g, e);
  PrivateNeighbors out;
  for (Vertex x : g.neighbors(e.u())) {
    if (x != e.v()) out.of_u.push_back(x);
  }
  for (Vertex x : g.neighbors(e.v())) {
    if (x != e.u()) out.of_v.push_back(x);
  }
  return out;
}

bool neighborhood_condition(const Graph& g, const Edge& e) {
  const auto [nu, nv] = edge_private_neighbors(g, e);
  std::vector<Vertex> diff;
  std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(diff));
  if (diff.size() > 1) return false;
  diff.clear();
  std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(diff));
  return diff.size() <= 1;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(g.next_free_id(), false);
  std::vector<Vertex> stack{g.vertices().front()};
  seen[stack.back()] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == g.order();
}

namespace {

// Is there an independent set of size `need` within candidates[from..)?
bool has_independent_subset(const Graph& g, const std::vector<Vertex>& candidates,
                            std::size_t from, std::size_t need, std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i + need <= candidates.size(); ++i) {
    const Vertex x = candidates[i];
    const bool independent =
        std::none_of(chosen.begin(), chosen.end(), [&](Vertex y) { return g.has_edge(x, y); });
    if (!independent) continue;
    chosen.push_back(x);
    if (has_independent_subset(g, candidates, i + 1, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool is_k1r_free(const Graph& g, std::size_t r) {
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "r must be positive");
  for (Vertex c : g.vertices()) {
    const auto nbrs = g.neighbors(c);
    if (nbrs.size() < r) continue;
    std::vector<Vertex> candidates(nbrs.begin(), nbrs.end());
    std::vector<Vertex> chosen;
    if (has_independent_subset(g, candidates, 0, r, chosen)) return false;
  }
  return true;
}

namespace {

struct SigmaSearch {
  const Graph& g;
  std::vector<Vertex> order;  // ascending degree
  std::size_t k;
  std::vector<Vertex> chosen;
  std::optional<std::size_t> best;

  void run(std::size_t from, std::size_t sum) {
    const std::size_t need = k - chosen.size();
    if (need == 0) {
      if (!best || sum < *best) best = sum;
      return;
    }
    for (std::size_t i = from; i + need <= order.size(); ++i) {
      // Degrees are ascending, so the next `need` entries bound any completion.
      std::size_t bound = sum;
      for (std::size_t j = i; j < i + need; ++j) bound += g.degree(order[j]);
      if (best && bound >= *best) return;
      const Vertex x = order[i];
      const bool independent =
          std::none_of(chosen.begin(), chosen.end(), [&](Vertex y) { return g.has_edge(x, y); });
      if (!independent) continue;
      chosen.push_back(x);
      run(i + 1, sum + g.degree(x));
      chosen.pop_back();
    }
  }
};

}  // namespace

std::optional<std::size_t> sigma_k(const Graph& g, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (g.order() < k) return std::nullopt;
  SigmaSearch search{g, g.vertices(), k, {}, std::nullopt};
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  search.run(0, 0);
  return search.best;
}

DenseRelabeling densify(const Graph& g) {
  DenseRelabeling out;
  out.original = g.vertices();
  std::vector<Vertex> dense(g.next_free_id(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) dense[out.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(dense[e.u()], dense[e.v()]);
  out.graph = Graph(g.order(), edges);
  return out;
}

}  // namespace kend
