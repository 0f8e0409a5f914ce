#include "kend/theorems.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "kend/error.hpp"

namespace kend {

namespace {

void require_spans(const Graph& g, const SpanningTree& t) {
  if (t.host() != g) throw Error(ErrorCode::kHypothesisViolated, "the tree does not span the given graph");
}

void require_contraction(const Graph& g, const Edge& e, const ContractionResult& contraction,
                         const SpanningTree& t_prime) {
  const ContractionResult expected = contract(g, e);
  if (expected.contracted != contraction.contracted ||
      expected.merged_vertex != contraction.merged_vertex) {
    throw Error(ErrorCode::kHypothesisViolated, "contraction does not match G/" + to_string(e));
  }
  if (t_prime.host() != contraction.contracted) {
    throw Error(ErrorCode::kHypothesisViolated, "the tree does not span the contracted graph");
  }
}

std::vector<Edge> edges_away_from(const SpanningTree& t, Vertex w) {
  std::vector<Edge> out;
  for (const Edge& f : t.edges()) {
    if (!f.has_endpoint(w)) out.push_back(f);
  }
  return out;
}

}  // namespace

SpanningTree contract_tree(const SpanningTree& t, const Edge& e, const ContractionResult& contraction) {
  if (!t.contains(e)) throw Error(ErrorCode::kInvalidArgument, to_string(e) + " is not a tree edge");
  const Vertex w = contraction.merged_vertex;
  std::vector<Edge> edges;
  edges.reserve(t.edges().size() - 1);
  for (const Edge& f : t.edges()) {
    if (f == e) continue;
    edges.emplace_back(e.has_endpoint(f.u()) ? w : f.u(), e.has_endpoint(f.v()) ? w : f.v());
  }
  return SpanningTree(contraction.contracted, std::move(edges));
}

PreservationWitness find_preserving_edge(const Graph& g, const SpanningTree& t) {
  require_spans(g, t);
  const std::size_t k = t.leaf_count();
  if (k < 2) throw Error(ErrorCode::kHypothesisViolated, "need a tree with at least 2 leaves");
  if (g.order() <= k + 1) {
    throw Error(ErrorCode::kHypothesisViolated,
                std::to_string(g.order()) + " vertices is not more than k + 1 = " + std::to_string(k + 1));
  }

  std::vector<Vertex> non_leaves;
  for (Vertex x : g.vertices()) {
    if (t.degree(x) != 1) non_leaves.push_back(x);
  }
  if (non_leaves.size() < 2) {
    throw Error(ErrorCode::kInternalContradiction, "fewer than two non-leaf vertices");
  }

  const Vertex from = non_leaves[0];
  const Vertex to = non_leaves[1];
  const std::vector<Vertex> path = t.path(from, to);
  const Edge edge(from, path[1]);
  ContractionResult contraction = contract(g, edge);
  SpanningTree after = contract_tree(t, edge, contraction);
  if (after.leaf_count() != k) {
    throw Error(ErrorCode::kInternalContradiction,
                "contracting " + to_string(edge) + " changed the leaf count");
  }
  return {edge, std::move(non_leaves), from, to, std::move(contraction), std::move(after)};
}

ReductionTrace reduce_leaf_count(const Graph& g, const SpanningTree& t) {
  require_spans(g, t);
  const std::size_t k = t.leaf_count();
  if (k < 3) throw Error(ErrorCode::kHypothesisViolated, "need a tree with at least 3 leaves");

  const Vertex leaf = t.leaves().front();

  // Breadth-first distances from the leaf; the nearest branch vertex wins,
  // smallest id among equals.
  constexpr std::size_t kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.next_free_id(), kFar);
  std::deque<Vertex> queue{leaf};
  dist[leaf] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : t.neighbors(x)) {
      if (dist[y] == kFar) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  std::optional<Vertex> branch;
  for (Vertex x : g.vertices()) {
    if (t.degree(x) > 2 && (!branch || dist[x] < dist[*branch])) branch = x;
  }
  if (!branch) throw Error(ErrorCode::kInternalContradiction, "no vertex of tree-degree above 2");

  const std::vector<Vertex> path = t.path(leaf, *branch);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (t.degree(path[i]) != 2) {
      throw Error(ErrorCode::kInternalContradiction, "interior path vertex with tree-degree != 2");
    }
  }

  std::map<Vertex, std::vector<Vertex>> origin;
  for (Vertex x : g.vertices()) origin[x] = {x};

  std::vector<Edge> source_edges;
  std::vector<Edge> current_edges;
  std::vector<ContractionResult> graphs;
  const Graph* current_graph = &g;
  SpanningTree tree = t;
  Vertex head = leaf;  // current id of the contracted prefix of the path
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    source_edges.emplace_back(path[i], path[i + 1]);
    const Edge step(head, path[i + 1]);
    current_edges.push_back(step);
    ContractionResult result = contract(*current_graph, step);
    tree = contract_tree(tree, step, result);

    std::map<Vertex, std::vector<Vertex>> composed;
    for (const auto& [x, parts] : result.origin) {
      auto& sources = composed[x];
      for (Vertex p : parts) sources.insert(sources.end(), origin[p].begin(), origin[p].end());
      std::sort(sources.begin(), sources.end());
    }
    origin = std::move(composed);
    head = result.merged_vertex;
    graphs.push_back(std::move(result));
    current_graph = &graphs.back().contracted;
  }

  if (tree.leaf_count() + 1 != k) {
    throw Error(ErrorCode::kInternalContradiction, "the contracted tree does not have k - 1 leaves");
  }
  return {leaf,
          *branch,
          path,
          std::move(source_edges),
          std::move(current_edges),
          std::move(graphs),
          std::move(origin),
          std::move(tree)};
}

std::string_view to_string(LiftCase c) noexcept {
  switch (c) {
    case LiftCase::kSubdivision: return "subdivision";
    case LiftCase::kReplacement: return "replacement";
    case LiftCase::kRelaxed: return "relaxed";
  }
  return "unknown";
}

LiftWitness lift_tree(const Graph& g, const Edge& e, const ContractionResult& contraction,
                      const SpanningTree& t_prime) {
  require_contraction(g, e, contraction, t_prime);
  if (!neighborhood_condition(g, e)) {
    throw Error(ErrorCode::kConditionViolated, "the neighbourhood condition fails on " + to_string(e));
  }
  const Vertex u = e.u();
  const Vertex v = e.v();
  const Vertex w = contraction.merged_vertex;
  const auto around = t_prime.neighbors(w);
  std::vector<Edge> edges = edges_away_from(t_prime, w);
  edges.push_back(e);

  std::map<Vertex, Vertex> attachments;
  std::optional<Vertex> x1;
  std::optional<Vertex> x2;
  LiftCase used;

  if (around.size() == 1) {
    // w was a leaf: subdivide its pendant edge, the new inner vertex being
    // whichever endpoint of e sees the neighbour.
    used = LiftCase::kSubdivision;
    const Vertex y = around.front();
    const Vertex inner = g.has_edge(v, y) ? v : u;
    if (!g.has_edge(inner, y)) {
      throw Error(ErrorCode::kNoValidAttachment, std::to_string(y) + " sees neither endpoint");
    }
    edges.emplace_back(inner, y);
    attachments[y] = inner;
  } else {
    used = LiftCase::kReplacement;
    for (Vertex a : around) {
      if (!g.has_edge(a, v)) continue;
      for (Vertex b : around) {
        if (b != a && g.has_edge(b, u)) {
          x1 = a;
          x2 = b;
          break;
        }
      }
      if (x1) break;
    }
    if (!x1) {
      throw Error(ErrorCode::kNoValidAttachment, "no distinct neighbours for both endpoints of " + to_string(e));
    }
    for (Vertex a : around) {
      Vertex end;
      if (a == *x1) {
        end = v;
      } else if (a == *x2) {
        end = u;
      } else {
        end = g.has_edge(a, v) ? v : u;
      }
      edges.emplace_back(a, end);
      attachments[a] = end;
    }
  }

  SpanningTree tree(g, std::move(edges));
  if (tree.leaf_count() != t_prime.leaf_count()) {
    throw Error(ErrorCode::kInternalContradiction, "lifted tree changed the leaf count");
  }
  return {std::move(tree), used, std::move(attachments), x1, x2};
}

LiftWitness lift_tree_relaxed(const Graph& g, const Edge& e, const ContractionResult& contraction,
                              const SpanningTree& t_prime) {
  require_contraction(g, e, contraction, t_prime);
  const Vertex u = e.u();
  const Vertex v = e.v();
  const Vertex w = contraction.merged_vertex;
  std::vector<Edge> edges = edges_away_from(t_prime, w);
  edges.push_back(e);
  std::map<Vertex, Vertex> attachments;
  for (Vertex a : t_prime.neighbors(w)) {
    const Vertex end = g.has_edge(a, u) ? u : v;
    edges.emplace_back(a, end);
    attachments[a] = end;
  }
  SpanningTree tree(g, std::move(edges));
  if (tree.leaf_count() > t_prime.leaf_count() + 1) {
    throw Error(ErrorCode::kInternalContradiction, "relaxed lift added more than one leaf");
  }
  return {std::move(tree), LiftCase::kRelaxed, std::move(attachments), std::nullopt, std::nullopt};
}

MinLeafDropCheck check_min_leaf_drop(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
  if (g.order() < 3) throw Error(ErrorCode::kTooSmall, "need at least 3 vertices");
  MinLeafDropCheck check;
  check.min_leaves = minimum_leaf_tree(g).min_leaves;
  for (const Edge& e : g.edges()) {
    const std::size_t after = minimum_leaf_tree(contract(g, e).contracted).min_leaves;
    if (after + 1 < check.min_leaves) {
      check.holds = false;
      check.violating_edge = e;
      check.violating_min_leaves = after;
      break;
    }
  }
  return check;
}

}  // namespace kend
