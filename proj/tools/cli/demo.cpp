#include <functional>
#include <sstream>

#include "commands.hpp"
#include "kend/corpus.hpp"
#include "kend/error.hpp"
#include "kend/spanning.hpp"
#include "kend/theorems.hpp"

namespace kend::cli {

namespace {

using Labeler = std::function<std::string(Vertex)>;

std::string fig21_name(Vertex x) {
  const std::string_view label = fig21_label(x);
  return label.empty() ? "q" + std::to_string(x) : std::string(label);
}

std::string plain_name(Vertex x) { return std::to_string(x); }

std::string join_vertices(const std::vector<Vertex>& xs, const Labeler& name, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? std::string(sep) : "") + name(xs[i]);
  return out;
}

std::string join_edges(const std::vector<Edge>& edges, const Labeler& name) {
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i ? " " : "") + name(edges[i].u()) + "-" + name(edges[i].v());
  }
  return out;
}

std::string set_text(const std::vector<std::size_t>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

void describe_trees(std::ostream& os, const Graph& g, const Labeler& name) {
  const std::vector<SpanningTree> trees = enumerate_spanning_trees(g);
  os << "  spanning trees: " << trees.size() << '\n';
  for (std::size_t i = 0; i < trees.size(); ++i) {
    os << "    T" << i + 1 << ": " << join_edges(trees[i].edges(), name) << "  leaves "
       << trees[i].leaf_count() << " (" << join_vertices(trees[i].leaves(), name) << ")\n";
  }
}

std::string demo_fig21() {
  std::ostringstream os;
  const Labeler name = fig21_name;
  const Graph g = named_graph("fig21").graph;
  os << "G = fig21: " << g.order() << " vertices, " << g.size() << " edges\n";
  os << "  labels: x=0 y=1 z=2 w=3 p=4 u=5 v=6\n";
  os << "  edges: " << join_edges(g.edges(), name) << '\n';
  describe_trees(os, g, name);
  const LeafReport before = leaf_report(g);
  os << "  spectrum(G) = " << set_text(before.spectrum) << '\n';

  const Edge py(4, 1);
  const ContractionResult c = contract(g, py);
  const Vertex q = c.merged_vertex;
  os << "contract p-y: merged vertex " << name(q) << " = {"
     << join_vertices(c.origin.at(q), name) << "}\n";
  os << "G/py: " << c.contracted.order() << " vertices, " << c.contracted.size() << " edges\n";
  os << "  edges: " << join_edges(c.contracted.edges(), name) << '\n';
  describe_trees(os, c.contracted, name);
  const LeafReport after = leaf_report(c.contracted);
  os << "  spectrum(G/py) = " << set_text(after.spectrum) << '\n';
  os << "minLeaf(G)=" << before.min_leaves << ", minLeaf(G/py)=" << after.min_leaves << '\n';
  return os.str();
}

std::string demo_reduce() {
  std::ostringstream os;
  const Labeler name = fig21_name;
  const Graph g = named_graph("fig21").graph;
  const SpanningTree t(g, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 6}});
  os << "G = fig21, T = " << join_edges(t.edges(), name) << '\n';
  os << "  leaves of T: " << t.leaf_count() << " (" << join_vertices(t.leaves(), name) << ")\n";
  const ReductionTrace trace = reduce_leaf_count(g, t);
  os << "leaf " << name(trace.leaf) << ", nearest branch vertex " << name(trace.branch_vertex)
     << " (tree-degree " << t.degree(trace.branch_vertex) << ")\n";
  os << "path: " << join_vertices(trace.path, name, "-") << ", " << trace.graphs.size() << " contractions\n";

  for (std::size_t i = 0; i < trace.graphs.size(); ++i) {
    const ContractionResult& step = trace.graphs[i];
    os << "step " << i + 1 << ": contract " << name(trace.current_edges[i].u()) << "-"
       << name(trace.current_edges[i].v()) << " (source " << join_edges({trace.source_edges[i]}, name)
       << ") -> " << name(step.merged_vertex) << '\n';
    os << "  G" << i + 1 << " edges: " << join_edges(step.contracted.edges(), name) << '\n';
  }
  const Vertex head = trace.graphs.back().merged_vertex;
  os << "final vertex " << name(head) << " = {" << join_vertices(trace.origin.at(head), name) << "}\n";
  os << "tree after: " << join_edges(trace.tree_after.edges(), name) << '\n';
  os << "leaves: " << t.leaf_count() << " -> " << trace.tree_after.leaf_count() << " ("
     << join_vertices(trace.tree_after.leaves(), name) << ")\n";
  return os.str();
}

void lift_case(std::ostream& os, const Graph& g, const Edge& e, const ContractionResult& c,
               const SpanningTree& t_prime, bool relaxed) {
  const Labeler name = plain_name;
  os << "T' = " << join_edges(t_prime.edges(), name) << "  leaves " << t_prime.leaf_count()
     << ", deg(" << c.merged_vertex << ") = " << t_prime.degree(c.merged_vertex) << '\n';
  const LiftWitness w = relaxed ? lift_tree_relaxed(g, e, c, t_prime) : lift_tree(g, e, c, t_prime);
  os << "  case " << to_string(w.case_used);
  if (w.x1) os << ", x1=" << *w.x1 << " -> " << e.v() << ", x2=" << *w.x2 << " -> " << e.u();
  os << '\n';
  for (const auto& [x, end] : w.attachments) os << "  attach " << x << " to " << end << '\n';
  os << "  T = " << join_edges(w.tree.edges(), name) << "  leaves " << w.tree.leaf_count() << " ("
     << join_vertices(w.tree.leaves(), name) << ")\n";
}

std::string demo_lift() {
  std::ostringstream os;
  const Labeler name = plain_name;
  const Graph g = named_graph("cycle:5").graph;
  const Edge e(0, 1);
  os << "G = C5: edges " << join_edges(g.edges(), name) << '\n';
  const PrivateNeighbors nbrs = edge_private_neighbors(g, e);
  os << "e = 0-1: N_e(0) = {" << join_vertices(nbrs.of_u, name) << "}, N_e(1) = {"
     << join_vertices(nbrs.of_v, name) << "}, condition "
     << (neighborhood_condition(g, e) ? "holds" : "fails") << '\n';
  const ContractionResult c = contract(g, e);
  os << "G/e: merged vertex " << c.merged_vertex << ", edges " << join_edges(c.contracted.edges(), name)
     << '\n';

  const Vertex w = c.merged_vertex;
  lift_case(os, g, e, c, SpanningTree(c.contracted, {{w, 2}, {2, 3}, {3, 4}}), false);
  const SpanningTree internal(c.contracted, {{w, 2}, {w, 4}, {4, 3}});
  lift_case(os, g, e, c, internal, false);
  lift_case(os, g, e, c, internal, true);
  return os.str();
}

}  // namespace

std::string demo_transcript(std::string_view name) {
  if (name == "fig21") return demo_fig21();
  if (name == "reduce") return demo_reduce();
  if (name == "lift") return demo_lift();
  throw Error(ErrorCode::kUnknownName, "no demo '" + std::string(name) + "'");
}

}  // namespace kend::cli
