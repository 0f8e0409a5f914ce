#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <string>

#include "kend/corpus.hpp"
#include "kend/error.hpp"

namespace kend {

std::string CorpusSpec::describe() const {
  std::string out = source == Source::kGenerated ? "generated" : "file:" + path;
  out += " n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
  if (connected_only) out += " connected";
  return out;
}

void validate(const CorpusSpec& spec) {
  if (spec.n_min < 1 || spec.n_min > spec.n_max) {
    throw Error(ErrorCode::kInvalidArgument, "need 1 <= n_min <= n_max");
  }
  if (spec.source == CorpusSpec::Source::kGenerated && spec.n_max > CorpusSpec::kGeneratedMaxOrder) {
    throw Error(ErrorCode::kInvalidArgument, "generated corpora stop at n = 8; use a graph6 file");
  }
  if (spec.source == CorpusSpec::Source::kFile && spec.path.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "file corpus without a path");
  }
}

namespace {

void enumerate_generated(std::size_t n, bool connected_only,
                         const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  const std::uint64_t all_vertices = (std::uint64_t{1} << n) - 1;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  std::array<std::uint64_t, CorpusSpec::kGeneratedMaxOrder> adjacency{};
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    adjacency.fill(0);
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      const auto [a, b] = pairs[std::countr_zero(bits)];
      adjacency[a] |= std::uint64_t{1} << b;
      adjacency[b] |= std::uint64_t{1} << a;
    }
    if (connected_only && n > 1) {
      std::uint64_t reached = 1;
      std::uint64_t frontier = 1;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= adjacency[std::countr_zero(f)];
        frontier = next & ~reached;
        reached |= frontier;
      }
      if (reached != all_vertices) continue;
    }
    edges.clear();
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) {
      const auto [a, b] = pairs[std::countr_zero(bits)];
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    visit(Graph(n, edges));
  }
}

}  // namespace

void read_graph6_stream(std::istream& in, const std::function<void(const Graph&)>& visit) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& err) {
      throw Error(err.code(), "line " + std::to_string(line_no) + ": " + err.what());
    }
    visit(g);
  }
}

void enumerate_connected(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit) {
  validate(spec);
  if (spec.source == CorpusSpec::Source::kGenerated) {
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) enumerate_generated(n, spec.connected_only, visit);
    return;
  }
  std::ifstream in(spec.path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + spec.path);
  read_graph6_stream(in, [&](const Graph& g) {
    if (g.order() < spec.n_min || g.order() > spec.n_max) return;
    if (spec.connected_only && !is_connected(g)) return;
    visit(g);
  });
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycles need at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, edges);
}

std::string_view fig21_label(Vertex x) noexcept {
  static constexpr std::array<std::string_view, 7> kLabels{"x", "y", "z", "w", "p", "u", "v"};
  return x < kLabels.size() ? kLabels[x] : std::string_view{};
}

namespace {

std::size_t parse_size(std::string_view text, std::string_view name) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorCode::kUnknownName, "bad size in " + std::string(name));
  }
  return value;
}

}  // namespace

NamedGraph named_graph(std::string_view name) {
  if (name == "fig21") {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {4, 6}};
    return {"fig21", Graph(7, edges),
            "seven vertices x=0 y=1 z=2 w=3 p=4 u=5 v=6; minimum leaf number 3, rising to 4 "
            "after contracting p-y"};
  }
  if (name == "k14") {
    return {"k14", star_graph(4), "the star K_{1,4}: centre 0, leaves 1..4"};
  }
  const auto colon = name.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view family = name.substr(0, colon);
    const std::size_t n = parse_size(name.substr(colon + 1), name);
    const std::string key(name);
    try {
      if (family == "cycle") return {key, cycle_graph(n), "cycle on " + std::to_string(n) + " vertices"};
      if (family == "path") return {key, path_graph(n), "path on " + std::to_string(n) + " vertices"};
      if (family == "complete") return {key, complete_graph(n), "complete graph on " + std::to_string(n) + " vertices"};
      if (family == "star") return {key, star_graph(n), "star with " + std::to_string(n) + " leaves"};
    } catch (const Error& err) {
      throw Error(ErrorCode::kUnknownName, std::string(name) + ": " + err.what());
    }
  }
  throw Error(ErrorCode::kUnknownName, "no named graph '" + std::string(name) + "'");
}

}  // namespace kend
