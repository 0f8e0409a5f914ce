#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kend/graph.hpp"

namespace kend {

/// Decodes one graph6 record (no trailing newline). A leading ">>graph6<<"
/// header is skipped. Errors: kMalformedHeader, kBadByteRange,
/// kTruncatedBody, kTrailingGarbage.
Graph parse_graph6(std::string_view record);

/// Canonical graph6 encoding. Requires ids 0..n-1 (see densify()).
std::string write_graph6(const Graph& g);

struct CorpusSpec {
  enum class Source { kGenerated, kFile };

  std::size_t n_min = 1;
  std::size_t n_max = 1;
  Source source = Source::kGenerated;
  std::string path;  // file mode only
  bool connected_only = true;

  /// Generated mode enumerates 2^(n(n-1)/2) edge sets per n.
  static constexpr std::size_t kGeneratedMaxOrder = 8;

  std::string describe() const;
};

/// Throws kInvalidArgument on an inconsistent spec.
void validate(const CorpusSpec& spec);

/// Generated mode: every labeled graph on 0..n-1 for n in [n_min, n_max],
/// edge sets as bitmasks in ascending order (bit i is the i-th pair of the
/// graph6 column order 01, 02, 12, 03, ...), optionally filtered to
/// connected graphs. File mode: graph6 records in file order, filtered by
/// order and connectivity. Parse errors carry the line number.
void enumerate_connected(const CorpusSpec& spec, const std::function<void(const Graph&)>& visit);

/// graph6 records from a stream, one per line; blank lines are skipped.
void read_graph6_stream(std::istream& in, const std::function<void(const Graph&)>& visit);

struct NamedGraph {
  std::string name;
  Graph graph;
  std::string provenance;
};

/// Registry keys: "fig21", "k14", "cycle:N", "path:N", "complete:N",
/// "star:N". Throws kUnknownName.
NamedGraph named_graph(std::string_view name);

/// Readable labels used by the fig21 registry entry (x=0 ... v=6).
std::string_view fig21_label(Vertex x) noexcept;

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Centre 0 and leaves 1..leaves.
Graph star_graph(std::size_t leaves);

}  // namespace kend
