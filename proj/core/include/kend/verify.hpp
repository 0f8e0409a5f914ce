#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kend/corpus.hpp"
#include "kend/graph.hpp"

namespace kend {

/// Exhaustive property suites. Ids follow the numbering used on the
/// command line ("1.1" ... "2.4").
enum class Suite {
  kOre,           // 1.1  degree-sum condition => Hamiltonian path
  kSigma4,        // 1.2  K_{1,4}-free + sigma_4 bound => few leaves
  kPreserve,      // 2.1  leaf-preserving contraction exists
  kReduce,        // 2.2  path contraction removes one leaf
  kLift,          // 2.3  trees of G/e lift to G with equal leaves
  kMinLeafDrop,   // 2.4  one contraction lowers the minimum by at most 1
};

std::string_view suite_id(Suite s) noexcept;
std::string_view suite_name(Suite s) noexcept;
/// Accepts the numeric id or the name. Throws kInvalidArgument.
Suite parse_suite(std::string_view text);

struct VerifyOptions {
  /// Required for kSigma4.
  std::optional<std::size_t> leaf_bound;
  unsigned workers = 1;
  /// kLift / kMinLeafDrop skip a contraction whose spanning trees exceed this.
  std::uint64_t tree_cap = 5000;
};

struct Counterexample {
  std::string graph6;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Counts for one graph. The unit behind checked / hypothesis_met / passed
/// depends on the suite: a graph (1.1, 1.2, 2.4), a (graph, spanning tree)
/// pair (2.1, 2.2) or a (graph, edge) pair (2.3).
struct GraphOutcome {
  std::uint64_t checked = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t witnesses = 0;  // trees/lifts validated along the way
  std::vector<std::string> failures;
  std::optional<std::size_t> min_leaves;  // kSigma4, when the hypothesis holds
};

GraphOutcome check_graph(Suite suite, const Graph& g, const VerifyOptions& options);

struct VerificationReport {
  Suite suite = Suite::kOre;
  std::string corpus;
  std::uint64_t graphs = 0;
  std::uint64_t checked = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t passed = 0;
  std::uint64_t skipped = 0;
  std::uint64_t witnesses = 0;
  std::vector<Counterexample> counterexamples;
  std::optional<std::size_t> leaf_bound;
  /// kSigma4: the largest minimum leaf number over graphs meeting the
  /// hypothesis, i.e. the smallest bound that would have passed.
  std::optional<std::size_t> smallest_leaf_bound;
  double wall_time = 0.0;

  bool ok() const noexcept { return counterexamples.empty(); }
};

VerificationReport run_suite(Suite suite, const CorpusSpec& corpus, const VerifyOptions& options);
VerificationReport run_suite(Suite suite, std::span<const Graph> graphs, std::string corpus_label,
                             const VerifyOptions& options);

}  // namespace kend
