#include "kend/error.hpp"
#include "kend/spanning.hpp"

namespace kend {

bool check_ore_condition(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw Error(ErrorCode::kTooSmall, "the degree-sum condition needs at least 3 vertices");
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.has_edge(vs[i], vs[j])) continue;
      if (g.degree(vs[i]) + g.degree(vs[j]) + 1 < n) return false;
    }
  }
  return true;
}

ConditionReport check_sigma4_condition(const Graph& g, std::size_t leaf_bound) {
  if (!is_connected(g)) throw Error(ErrorCode::kNotConnected, "graph is not connected");
  ConditionReport report;
  if (is_k1r_free(g, 4)) {
    const auto sigma = sigma_k(g, 4);
    report.hypothesis_holds = !sigma || *sigma + 1 >= g.order();
  }
  report.conclusion_holds = has_k_ended_tree(g, leaf_bound);
  return report;
}

}  // namespace kend
