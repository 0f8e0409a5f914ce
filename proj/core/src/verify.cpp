#include "kend/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "kend/error.hpp"
#include "kend/spanning.hpp"
#include "kend/theorems.hpp"

namespace kend {

namespace {

struct SuiteInfo {
  Suite suite;
  std::string_view id;
  std::string_view name;
};

constexpr SuiteInfo kSuites[] = {
    {Suite::kOre, "1.1", "ore"},           {Suite::kSigma4, "1.2", "sigma4"},
    {Suite::kPreserve, "2.1", "preserve"}, {Suite::kReduce, "2.2", "reduce"},
    {Suite::kLift, "2.3", "lift"},         {Suite::kMinLeafDrop, "2.4", "min-leaf-drop"},
};

const SuiteInfo& info(Suite s) {
  return *std::find_if(std::begin(kSuites), std::end(kSuites), [&](const SuiteInfo& i) { return i.suite == s; });
}

std::string tree_text(const SpanningTree& t) {
  std::string out = "[";
  for (const Edge& e : t.edges()) out += (out.size() > 1 ? "," : "") + to_string(e);
  return out + "]";
}

void check_ore(const Graph& g, GraphOutcome& out) {
  if (g.order() < 3) return;
  ++out.checked;
  if (!check_ore_condition(g)) return;
  ++out.hypothesis_met;
  if (has_hamiltonian_path(g)) {
    ++out.passed;
  } else {
    out.failures.push_back("degree-sum condition holds but no Hamiltonian path");
  }
}

void check_sigma4(const Graph& g, const VerifyOptions& options, GraphOutcome& out) {
  if (g.order() < 3) return;
  ++out.checked;
  if (!is_k1r_free(g, 4)) return;
  const auto sigma = sigma_k(g, 4);
  if (sigma && *sigma + 1 < g.order()) return;
  ++out.hypothesis_met;
  const MinimumLeafTree best = minimum_leaf_tree(g);
  out.min_leaves = best.min_leaves;
  if (best.min_leaves <= *options.leaf_bound) {
    ++out.passed;
  } else {
    out.failures.push_back("minimum leaf number " + std::to_string(best.min_leaves) + " exceeds bound " +
                           std::to_string(*options.leaf_bound));
  }
}

void check_preserve(const Graph& g, GraphOutcome& out) {
  if (g.order() < 3) return;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    ++out.checked;
    const std::size_t k = t.leaf_count();
    if (k < 2 || g.order() <= k + 1) return;
    ++out.hypothesis_met;
    try {
      const PreservationWitness w = find_preserving_edge(g, t);
      const bool valid = t.contains(w.edge) && w.tree_after.host() == w.contraction.contracted &&
                         w.tree_after.leaf_count() == k;
      if (valid) {
        ++out.passed;
      } else {
        out.failures.push_back("tree " + tree_text(t) + ": invalid witness for edge " + to_string(w.edge));
      }
    } catch (const Error& err) {
      out.failures.push_back("tree " + tree_text(t) + ": " + err.what());
    }
  });
}

void check_reduce(const Graph& g, GraphOutcome& out) {
  if (g.order() < 3) return;
  for_each_spanning_tree(g, [&](const SpanningTree& t) {
    ++out.checked;
    const std::size_t k = t.leaf_count();
    if (k < 3) return;
    ++out.hypothesis_met;
    try {
      const ReductionTrace trace = reduce_leaf_count(g, t);
      bool valid = !trace.graphs.empty() && trace.graphs.size() + 1 == trace.path.size() &&
                   trace.tree_after.host() == trace.graphs.back().contracted &&
                   trace.tree_after.leaf_count() + 1 == k;
      for (std::size_t i = 1; valid && i + 1 < trace.path.size(); ++i) valid = t.degree(trace.path[i]) == 2;
      if (valid) {
        ++out.passed;
      } else {
        out.failures.push_back("tree " + tree_text(t) + ": invalid reduction trace");
      }
    } catch (const Error& err) {
      out.failures.push_back("tree " + tree_text(t) + ": " + err.what());
    }
  });
}

void check_lift(const Graph& g, const VerifyOptions& options, GraphOutcome& out) {
  if (g.order() < 3) return;
  std::optional<LeafReport> whole;
  for (const Edge& e : g.edges()) {
    ++out.checked;
    if (!neighborhood_condition(g, e)) continue;
    const ContractionResult contraction = contract(g, e);
    if (count_spanning_trees(contraction.contracted) > options.tree_cap) {
      ++out.skipped;
      continue;
    }
    ++out.hypothesis_met;
    std::vector<std::string> problems;
    for_each_spanning_tree(contraction.contracted, [&](const SpanningTree& t_prime) {
      try {
        const LiftWitness w = lift_tree(g, e, contraction, t_prime);
        ++out.witnesses;
        if (w.tree.host() != g || w.tree.leaf_count() != t_prime.leaf_count()) {
          problems.push_back("edge " + to_string(e) + " tree " + tree_text(t_prime) + ": lift changed leaves");
        }
      } catch (const Error& err) {
        problems.push_back("edge " + to_string(e) + " tree " + tree_text(t_prime) + ": " + err.what());
      }
    });
    if (!whole) whole = leaf_report(g);
    const LeafReport part = leaf_report(contraction.contracted);
    if (!std::includes(whole->spectrum.begin(), whole->spectrum.end(), part.spectrum.begin(),
                       part.spectrum.end())) {
      problems.push_back("edge " + to_string(e) + ": spectrum of G/e is not contained in spectrum of G");
    }
    if (problems.empty()) {
      ++out.passed;
    } else {
      out.failures.insert(out.failures.end(), problems.begin(), problems.end());
    }
  }
}

void check_min_leaf_drop_suite(const Graph& g, const VerifyOptions& options, GraphOutcome& out) {
  if (g.order() < 3) return;
  ++out.checked;
  ++out.hypothesis_met;
  std::vector<std::string> problems;
  try {
    const MinLeafDropCheck check = check_min_leaf_drop(g);
    if (!check.holds) {
      problems.push_back("contracting " + to_string(*check.violating_edge) + " drops the minimum from " +
                         std::to_string(check.min_leaves) + " to " + std::to_string(check.violating_min_leaves));
    }
  } catch (const Error& err) {
    problems.push_back(err.what());
  }
  for (const Edge& e : g.edges()) {
    const ContractionResult contraction = contract(g, e);
    if (count_spanning_trees(contraction.contracted) > options.tree_cap) {
      ++out.skipped;
      continue;
    }
    for_each_spanning_tree(contraction.contracted, [&](const SpanningTree& t_prime) {
      try {
        const LiftWitness w = lift_tree_relaxed(g, e, contraction, t_prime);
        ++out.witnesses;
        if (w.tree.leaf_count() > t_prime.leaf_count() + 1) {
          problems.push_back("edge " + to_string(e) + " tree " + tree_text(t_prime) + ": relaxed lift too leafy");
        }
      } catch (const Error& err) {
        problems.push_back("edge " + to_string(e) + " tree " + tree_text(t_prime) + ": " + err.what());
      }
    });
  }
  if (problems.empty()) {
    ++out.passed;
  } else {
    out.failures = std::move(problems);
  }
}

}  // namespace

std::string_view suite_id(Suite s) noexcept { return info(s).id; }
std::string_view suite_name(Suite s) noexcept { return info(s).name; }

Suite parse_suite(std::string_view text) {
  for (const SuiteInfo& i : kSuites) {
    if (text == i.id || text == i.name) return i.suite;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + std::string(text) + "'");
}

GraphOutcome check_graph(Suite suite, const Graph& g, const VerifyOptions& options) {
  GraphOutcome out;
  switch (suite) {
    case Suite::kOre: check_ore(g, out); break;
    case Suite::kSigma4: check_sigma4(g, options, out); break;
    case Suite::kPreserve: check_preserve(g, out); break;
    case Suite::kReduce: check_reduce(g, out); break;
    case Suite::kLift: check_lift(g, options, out); break;
    case Suite::kMinLeafDrop: check_min_leaf_drop_suite(g, options, out); break;
  }
  return out;
}

namespace {

constexpr std::size_t kBatchSize = 4096;

class Reducer {
 public:
  Reducer(Suite suite, const VerifyOptions& options) : suite_(suite), options_(options) {
    if (suite == Suite::kSigma4 && !options.leaf_bound) {
      throw Error(ErrorCode::kInvalidArgument, "suite 1.2 needs a leaf bound");
    }
    report_.suite = suite;
    report_.leaf_bound = options.leaf_bound;
  }

  void add(const Graph& g) {
    batch_.push_back(g);
    if (batch_.size() == kBatchSize) flush();
  }

  VerificationReport finish(std::string corpus, std::chrono::steady_clock::time_point start) {
    flush();
    report_.corpus = std::move(corpus);
    report_.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return std::move(report_);
  }

 private:
  void flush() {
    if (batch_.empty()) return;
    std::vector<GraphOutcome> outcomes(batch_.size());
    std::vector<std::string> errors(batch_.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < batch_.size(); i = next++) {
        try {
          outcomes[i] = check_graph(suite_, batch_[i], options_);
        } catch (const std::exception& err) {
          errors[i] = err.what();
        }
      }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(options_.workers, batch_.size()));
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < batch_.size(); ++i) {
      GraphOutcome& o = outcomes[i];
      if (!errors[i].empty()) {
        ++o.checked;
        ++o.hypothesis_met;
        o.failures.push_back(errors[i]);
      }
      ++report_.graphs;
      report_.checked += o.checked;
      report_.hypothesis_met += o.hypothesis_met;
      report_.passed += o.passed;
      report_.skipped += o.skipped;
      report_.witnesses += o.witnesses;
      if (o.min_leaves) {
        report_.smallest_leaf_bound = std::max(report_.smallest_leaf_bound.value_or(0), *o.min_leaves);
      }
      if (!o.failures.empty()) {
        const std::string code = write_graph6(densify(batch_[i]).graph);
        for (std::string& detail : o.failures) report_.counterexamples.push_back({code, std::move(detail)});
      }
    }
    batch_.clear();
  }

  Suite suite_;
  VerifyOptions options_;
  VerificationReport report_;
  std::vector<Graph> batch_;
};

}  // namespace

VerificationReport run_suite(Suite suite, const CorpusSpec& corpus, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Reducer reducer(suite, options);
  enumerate_connected(corpus, [&](const Graph& g) { reducer.add(g); });
  return reducer.finish(corpus.describe(), start);
}

VerificationReport run_suite(Suite suite, std::span<const Graph> graphs, std::string corpus_label,
                             const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Reducer reducer(suite, options);
  for (const Graph& g : graphs) reducer.add(g);
  return reducer.finish(std::move(corpus_label), start);
}

}  // namespace kend
