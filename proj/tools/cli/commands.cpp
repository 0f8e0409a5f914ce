#include "commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>

#include "kend/corpus.hpp"
#include "kend/error.hpp"
#include "kend/spanning.hpp"
#include "kend/theorems.hpp"

namespace kend::cli {

using Json = nlohmann::ordered_json;

namespace {

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEdgeNotPresent:
    case ErrorCode::kNotConnected:
    case ErrorCode::kTooSmall:
    case ErrorCode::kHypothesisViolated:
    case ErrorCode::kConditionViolated:
      return kExitPrecondition;
    case ErrorCode::kInternalContradiction:
    case ErrorCode::kNoValidAttachment:
      return kExitCounterexample;
    default:
      return kExitParseError;
  }
}

Vertex parse_vertex(std::string_view text) {
  Vertex value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "bad vertex id '" + std::string(text) + "'");
  }
  return value;
}

Json edge_json(const Edge& e) { return Json::array({e.u(), e.v()}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

Json graph_json(const Graph& g) {
  return Json{{"vertices", g.vertices()}, {"edges", edges_json(g.edges())}};
}

Json origin_json(const std::map<Vertex, std::vector<Vertex>>& origin) {
  Json out = Json::array();
  for (const auto& [x, sources] : origin) out.push_back(Json::array({x, sources}));
  return out;
}

std::string dump(const Json& j) { return j.dump(-1, ' ', false, Json::error_handler_t::strict); }

struct MinleafArgs {
  std::string graph;
  std::vector<Vertex> contract_edge;
  bool min_only = false;
};

int cmd_minleaf(const MinleafArgs& args, std::ostream& out) {
  for (Graph g : load_graphs(args.graph)) {
    Json record{{"record", "minleaf"}};
    if (!args.contract_edge.empty()) {
      const Edge e(args.contract_edge[0], args.contract_edge[1]);
      ContractionResult c = contract(g, e);
      record["contracted_edge"] = edge_json(e);
      record["merged_vertex"] = c.merged_vertex;
      g = std::move(c.contracted);
    }
    if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "input graph is not connected");
    record["n"] = g.order();
    record["m"] = g.size();
    if (args.min_only) {
      const MinimumLeafTree best = minimum_leaf_tree(g);
      record["min_leaves"] = best.min_leaves;
      record["witness"] = edges_json(best.witness.edges());
    } else {
      const LeafReport report = leaf_report(g);
      record["min_leaves"] = report.min_leaves;
      record["spectrum"] = report.spectrum;
      record["witness"] = edges_json(report.witness.edges());
    }
    out << dump(record) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::size_t n_min = 3;
  std::optional<std::size_t> n_max;
  std::string corpus;
  std::optional<std::size_t> leaf_bound;
  unsigned workers = 1;
  std::uint64_t tree_cap = 5000;
  std::string output;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  CorpusSpec spec;
  spec.n_min = args.n_min;
  if (args.corpus.empty()) {
    spec.source = CorpusSpec::Source::kGenerated;
    spec.n_max = args.n_max.value_or(6);
  } else {
    spec.source = CorpusSpec::Source::kFile;
    spec.path = args.corpus;
    spec.n_max = args.n_max.value_or(std::size_t{1} << 20);
  }
  VerifyOptions options;
  options.leaf_bound = args.leaf_bound;
  options.workers = args.workers;
  options.tree_cap = args.tree_cap;

  const VerificationReport report = run_suite(parse_suite(args.suite), spec, options);
  const std::string line = report_json(report);
  out << line << '\n';
  if (!args.output.empty()) {
    std::ofstream file(args.output);
    if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + args.output);
    file << line << '\n';
  }
  for (const Counterexample& c : report.counterexamples) {
    err << "counterexample " << c.graph6 << ": " << c.detail << '\n';
  }
  return report.ok() ? kExitOk : kExitCounterexample;
}

int cmd_contract(const std::string& graph, Vertex u, Vertex v, std::ostream& out) {
  const Edge e(u, v);
  const ContractionResult c = contract(load_graph(graph), e);
  Json record{{"record", "contraction"},
              {"edge", edge_json(e)},
              {"merged_vertex", c.merged_vertex},
              {"contracted", graph_json(c.contracted)},
              {"origin", origin_json(c.origin)}};
  out << dump(record) << '\n';
  return kExitOk;
}

int cmd_preserve(const std::string& graph, const std::string& tree_edges, std::ostream& out) {
  const Graph g = load_graph(graph);
  const SpanningTree t(g, parse_edge_list(tree_edges));
  const PreservationWitness w = find_preserving_edge(g, t);
  Json record{{"record", "preservation"},
              {"leaves", t.leaf_count()},
              {"non_leaves", w.non_leaves},
              {"path_from", w.path_from},
              {"path_to", w.path_to},
              {"edge", edge_json(w.edge)},
              {"merged_vertex", w.contraction.merged_vertex},
              {"contracted", graph_json(w.contraction.contracted)},
              {"origin", origin_json(w.contraction.origin)},
              {"tree_after", edges_json(w.tree_after.edges())},
              {"leaves_after", w.tree_after.leaf_count()}};
  out << dump(record) << '\n';
  return kExitOk;
}

int cmd_reduce(const std::string& graph, const std::string& tree_edges, std::ostream& out) {
  const Graph g = load_graph(graph);
  const SpanningTree t(g, parse_edge_list(tree_edges));
  const ReductionTrace trace = reduce_leaf_count(g, t);
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.graphs.size(); ++i) {
    steps.push_back(Json{{"edge", edge_json(trace.current_edges[i])},
                         {"source_edge", edge_json(trace.source_edges[i])},
                         {"merged_vertex", trace.graphs[i].merged_vertex},
                         {"graph", graph_json(trace.graphs[i].contracted)}});
  }
  Json record{{"record", "reduction"},
              {"leaves", t.leaf_count()},
              {"leaf", trace.leaf},
              {"branch_vertex", trace.branch_vertex},
              {"path", trace.path},
              {"steps", std::move(steps)},
              {"origin", origin_json(trace.origin)},
              {"tree_after", edges_json(trace.tree_after.edges())},
              {"leaves_after", trace.tree_after.leaf_count()}};
  out << dump(record) << '\n';
  return kExitOk;
}

int cmd_lift(const std::string& graph, Vertex u, Vertex v, const std::string& tree_edges, bool relaxed,
             std::ostream& out) {
  const Graph g = load_graph(graph);
  const Edge e(u, v);
  const ContractionResult c = contract(g, e);
  const SpanningTree t_prime(c.contracted, parse_edge_list(tree_edges));
  const LiftWitness w = relaxed ? lift_tree_relaxed(g, e, c, t_prime) : lift_tree(g, e, c, t_prime);
  Json attachments = Json::array();
  for (const auto& [x, end] : w.attachments) attachments.push_back(Json::array({x, end}));
  Json record{{"record", "lift"},
              {"case", std::string(to_string(w.case_used))},
              {"edge", edge_json(e)},
              {"merged_vertex", c.merged_vertex},
              {"origin", origin_json(c.origin)},
              {"leaves", t_prime.leaf_count()},
              {"tree", edges_json(w.tree.edges())},
              {"leaves_after", w.tree.leaf_count()},
              {"attachments", std::move(attachments)}};
  record["x1"] = w.x1 ? Json(*w.x1) : Json(nullptr);
  record["x2"] = w.x2 ? Json(*w.x2) : Json(nullptr);
  out << dump(record) << '\n';
  return kExitOk;
}

}  // namespace

std::vector<Graph> load_graphs(std::string_view argument) {
  if (argument.starts_with("name:")) return {named_graph(argument.substr(5)).graph};
  if (argument.starts_with("@")) {
    const std::string path(argument.substr(1));
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
    std::vector<Graph> out;
    read_graph6_stream(in, [&](const Graph& g) { out.push_back(g); });
    return out;
  }
  return {parse_graph6(argument)};
}

Graph load_graph(std::string_view argument) {
  std::vector<Graph> graphs = load_graphs(argument);
  if (graphs.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "expected exactly one graph, got " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::vector<Edge> parse_edge_list(std::string_view text) {
  std::vector<Edge> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find_first_of(",; ", pos);
    const std::string_view token = text.substr(pos, end == std::string_view::npos ? text.npos : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    if (token.empty()) continue;
    const std::size_t dash = token.find('-');
    if (dash == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "edge '" + std::string(token) + "' is not of the form a-b");
    }
    out.emplace_back(parse_vertex(token.substr(0, dash)), parse_vertex(token.substr(dash + 1)));
  }
  return out;
}

std::string report_json(const VerificationReport& report) {
  Json counterexamples = Json::array();
  for (const Counterexample& c : report.counterexamples) {
    counterexamples.push_back(Json{{"graph6", c.graph6}, {"detail", c.detail}});
  }
  Json record{{"record", "verification"},
              {"suite", std::string(suite_id(report.suite))},
              {"name", std::string(suite_name(report.suite))},
              {"corpus", report.corpus},
              {"graphs", report.graphs},
              {"checked", report.checked},
              {"hypothesis_met", report.hypothesis_met},
              {"passed", report.passed},
              {"skipped", report.skipped},
              {"witnesses", report.witnesses}};
  record["leaf_bound"] = report.leaf_bound ? Json(*report.leaf_bound) : Json(nullptr);
  record["smallest_leaf_bound"] =
      report.smallest_leaf_bound ? Json(*report.smallest_leaf_bound) : Json(nullptr);
  record["counterexamples"] = std::move(counterexamples);
  record["wall_time"] = report.wall_time;
  return dump(record);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leaf counts of spanning trees and edge contraction", "kendtree"};
  app.require_subcommand(1);

  MinleafArgs minleaf;
  auto* minleaf_cmd = app.add_subcommand("minleaf", "Minimum leaf number and leaf spectrum");
  minleaf_cmd->add_option("graph", minleaf.graph, "graph6, @file or name:key")->required();
  minleaf_cmd->add_option("--contract", minleaf.contract_edge, "Contract edge U V first")->expected(2);
  minleaf_cmd->add_flag("--min-only", minleaf.min_only, "Skip the spectrum");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive property suite");
  verify_cmd->add_option("--suite", verify.suite, "1.1, 1.2, 2.1, 2.2, 2.3 or 2.4")->required();
  verify_cmd->add_option("--nmin", verify.n_min, "Smallest order (default 3)");
  verify_cmd->add_option("--nmax", verify.n_max, "Largest order (default 6)");
  verify_cmd->add_option("--corpus", verify.corpus, "graph6 file instead of generated graphs");
  verify_cmd->add_option("--leaf-bound", verify.leaf_bound, "Leaf bound for suite 1.2");
  verify_cmd->add_option("--workers", verify.workers, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tree-cap", verify.tree_cap, "Skip contractions with more spanning trees");
  verify_cmd->add_option("--output", verify.output, "Also write the report here");

  std::string demo_name;
  auto* demo_cmd = app.add_subcommand("demo", "Print a worked transcript");
  demo_cmd->add_option("name", demo_name, "fig21, reduce or lift")->required();

  std::string graph;
  Vertex u = 0;
  Vertex v = 0;
  std::string tree_edges;
  bool relaxed = false;
  auto* contract_cmd = app.add_subcommand("contract", "Contract one edge");
  contract_cmd->add_option("graph", graph)->required();
  contract_cmd->add_option("u", u)->required();
  contract_cmd->add_option("v", v)->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Remove one leaf by contracting a tree path");
  reduce_cmd->add_option("graph", graph)->required();
  reduce_cmd->add_option("tree-edges", tree_edges, "e.g. 0-1,1-2")->required();

  auto* preserve_cmd = app.add_subcommand("preserve", "Find a contraction that keeps the leaf count");
  preserve_cmd->add_option("graph", graph)->required();
  preserve_cmd->add_option("tree-edges", tree_edges)->required();

  auto* lift_cmd = app.add_subcommand("lift", "Lift a spanning tree of G/uv back to G");
  lift_cmd->add_flag("--relaxed", relaxed, "Skip the neighbourhood condition (may add one leaf)");
  lift_cmd->add_option("graph", graph)->required();
  lift_cmd->add_option("u", u)->required();
  lift_cmd->add_option("v", v)->required();
  lift_cmd->add_option("tree-edges", tree_edges, "Tree of the contracted graph")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*minleaf_cmd) return cmd_minleaf(minleaf, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*demo_cmd) {
      out << demo_transcript(demo_name);
      return kExitOk;
    }
    if (*contract_cmd) return cmd_contract(graph, u, v, out);
    if (*reduce_cmd) return cmd_reduce(graph, tree_edges, out);
    if (*preserve_cmd) return cmd_preserve(graph, tree_edges, out);
    if (*lift_cmd) return cmd_lift(graph, u, v, tree_edges, relaxed, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCounterexample;
  }
  return kExitParseError;
}

}  // namespace kend::cli
