#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kend/graph.hpp"
#include "kend/verify.hpp"

namespace kend::cli {

// Process exit statuses; nothing else is ever returned.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitCounterexample = 4;

/// Entry point shared by the binary and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// A graph argument: graph6 text, "@file" (every record) or "name:key".
std::vector<Graph> load_graphs(std::string_view argument);
/// Exactly one graph; "@file" must hold a single record.
Graph load_graph(std::string_view argument);

/// "0-1,1-2,2-3" (whitespace and ';' also separate pairs).
std::vector<Edge> parse_edge_list(std::string_view text);

/// One-line JSON record.
std::string report_json(const VerificationReport& report);

/// Deterministic step-by-step transcript for "fig21", "reduce" or "lift".
std::string demo_transcript(std::string_view name);

}  // namespace kend::cli
