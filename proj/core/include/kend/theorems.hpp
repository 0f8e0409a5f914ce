#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "kend/graph.hpp"
#include "kend/spanning.hpp"

namespace kend {

// Constructive procedures relating spanning trees of G and G/e. Each one
// returns a witness and checks that witness itself before returning it, so
// a wrong result surfaces as kInternalContradiction rather than silently.
// Whenever a rule says "choose", the smallest vertex id wins.

/// Image of `t` under contraction of one of its own edges `e`.
SpanningTree contract_tree(const SpanningTree& t, const Edge& e, const ContractionResult& contraction);

struct PreservationWitness {
  Edge edge;                        // u u^- where u^- follows u on the path u..v
  std::vector<Vertex> non_leaves;   // tree vertices of degree != 1
  Vertex path_from = 0;             // u
  Vertex path_to = 0;               // v
  ContractionResult contraction;
  SpanningTree tree_after;          // same leaf count as the input tree
};

/// For a spanning tree with k >= 2 leaves of a graph with more than k + 1
/// vertices, finds a tree edge whose contraction keeps exactly k leaves.
/// Throws kHypothesisViolated when the size condition fails or `t` does not
/// span `g`.
PreservationWitness find_preserving_edge(const Graph& g, const SpanningTree& t);

struct ReductionTrace {
  Vertex leaf = 0;
  Vertex branch_vertex = 0;
  std::vector<Vertex> path;                 // leaf .. branch_vertex in the source tree
  std::vector<Edge> source_edges;           // path edges in source ids
  std::vector<Edge> current_edges;          // the same edges in the ids of the graph being contracted
  std::vector<ContractionResult> graphs;    // G_1 .. G_m
  std::map<Vertex, std::vector<Vertex>> origin;  // vertices of G_m -> source vertices
  SpanningTree tree_after;                  // spans G_m with one leaf fewer
};

/// Contracts the tree path from the smallest leaf to its nearest branch
/// vertex. Needs at least 3 leaves (kHypothesisViolated otherwise).
ReductionTrace reduce_leaf_count(const Graph& g, const SpanningTree& t);

enum class LiftCase { kSubdivision, kReplacement, kRelaxed };

std::string_view to_string(LiftCase c) noexcept;

struct LiftWitness {
  SpanningTree tree;  // spans the source graph
  LiftCase case_used = LiftCase::kRelaxed;
  /// Former tree neighbours of the merged vertex -> endpoint of e they now
  /// hang from.
  std::map<Vertex, Vertex> attachments;
  std::optional<Vertex> x1;  // attached to e.v()
  std::optional<Vertex> x2;  // attached to e.u()
};

/// Turns a spanning tree of G/e into one of G with the same leaf count.
/// Requires the neighbourhood condition on e (kConditionViolated).
/// `contraction` must equal contract(g, e).
LiftWitness lift_tree(const Graph& g, const Edge& e, const ContractionResult& contraction,
                      const SpanningTree& t_prime);

/// Same replacement without the neighbourhood condition; the result has at
/// most one leaf more than `t_prime`.
LiftWitness lift_tree_relaxed(const Graph& g, const Edge& e, const ContractionResult& contraction,
                              const SpanningTree& t_prime);

struct MinLeafDropCheck {
  bool holds = true;
  std::size_t min_leaves = 0;
  std::optional<Edge> violating_edge;
  std::size_t violating_min_leaves = 0;
};

/// No single contraction drops the minimum leaf number by more than one.
/// Throws kNotConnected and kTooSmall (fewer than 3 vertices).
MinLeafDropCheck check_min_leaf_drop(const Graph& g);

}  // namespace kend
