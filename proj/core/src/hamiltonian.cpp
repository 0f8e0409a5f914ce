#include <bit>

#include "kend/spanning.hpp"
#include "tree_search.hpp"

namespace kend {

namespace {

class PathSearch {
 public:
  explicit PathSearch(const detail::DenseGraph& g) : g_(g) {}

  bool from(int start) { return extend(start, std::uint64_t{1} << start); }

 private:
  bool extend(int current, std::uint64_t visited) {
    const std::uint64_t rest = g_.all() & ~visited;
    if (!rest) return true;
    // The unvisited vertices plus the current end must stay connected.
    if (!detail::mask_connected(g_.adjacency, rest | (std::uint64_t{1} << current))) return false;
    std::uint64_t next = g_.adjacency[current] & rest;
    while (next) {
      const int y = std::countr_zero(next);
      next &= next - 1;
      if (extend(y, visited | (std::uint64_t{1} << y))) return true;
    }
    return false;
  }

  const detail::DenseGraph& g_;
};

}  // namespace

bool has_hamiltonian_path(const Graph& g) {
  if (g.order() <= 1) return true;
  const detail::DenseGraph dense(g);
  if (!detail::mask_connected(dense.adjacency, dense.all())) return false;

  // A degree-1 vertex can only be an endpoint.
  std::uint64_t pendant = 0;
  for (std::size_t v = 0; v < dense.n; ++v) {
    if (std::popcount(dense.adjacency[v]) == 1) pendant |= std::uint64_t{1} << v;
  }
  if (std::popcount(pendant) > 2) return false;
  std::uint64_t starts = pendant ? pendant : dense.all();

  PathSearch search(dense);
  while (starts) {
    const int s = std::countr_zero(starts);
    starts &= starts - 1;
    if (search.from(s)) return true;
    if (pendant) break;  // the other pendant vertex is the mirrored start
  }
  return false;
}

}  // namespace kend
