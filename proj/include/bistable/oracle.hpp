#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bistable/core.hpp"
#include "bistable/structure.hpp"

// Deliberately naive reference implementations used to certify the fast
// paths. Nothing here shares logic with the polynomial algorithms: stability
// numbers come from subset enumeration (which also covers the non-bipartite
// graphs that appear after same-side edge additions), matchings from
// permutation backtracking, decomposability from explicit zero-submatrix
// search. Every routine is guarded and throws too_large_error past its
// bound; the guards are parameters so callers can raise them deliberately.

namespace bistable {
namespace oracle {

// All maximum stable sets, in lexicographic order of their sorted member
// lists (A-vertices order before B-vertices). Guard on |A| + |B|.
std::vector<VertexSet> enumerate_maximum_stable_sets(const BipartiteGraph& g,
                                                     std::size_t max_vertices = 24);

// All perfect matchings by row-by-row backtracking, columns ascending, so
// the list is lexicographic in the matched-column sequence. Balanced input
// only (unbalanced_error). Guard on |A|.
std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g,
                                                  std::size_t max_side = 8);

// Searches every nonempty proper row subset R for enough all-zero columns to
// complete a k x (n-k) zero submatrix; order 1 falls back to the convention
// that [0] is partly decomposable. Agrees with is_partly_decomposable as a
// predicate wherever it runs (witnesses may differ). Guard on the order.
std::optional<ZeroBlockWitness> zero_submatrix_search(const ZeroOneMatrix& x,
                                                      std::size_t max_order = 12);

// True iff every nonempty proper subset of A and of B has strictly more
// neighbors than members. Balanced input only. Guard on the side size.
bool hall_surplus_check(const BipartiteGraph& g, std::size_t max_side = 12);

// Edge additions considered by alpha_plus_bruteforce. The stability number
// is recomputed by subset enumeration, so same-side additions (which leave
// the bipartition) are handled exactly.
enum class EdgeAdditionMode {
  all_pairs,        // every nonadjacent vertex pair, same side included
  cross_side_only,  // only pairs with one endpoint per side
};

// Literal definitions: alpha survives every single edge addition / deletion.
// Guard on |A| + |B|.
bool alpha_plus_bruteforce(const BipartiteGraph& g,
                           EdgeAdditionMode mode = EdgeAdditionMode::all_pairs,
                           std::size_t max_vertices = 20);
bool alpha_minus_bruteforce(const BipartiteGraph& g, std::size_t max_vertices = 20);

// Stability number by subset enumeration. Guard on |A| + |B|.
std::size_t bruteforce_stability_number(const BipartiteGraph& g,
                                        std::size_t max_vertices = 24);

// Maximum matching size by backtracking over row assignments. Guard on |A|.
std::size_t bruteforce_term_rank(const BipartiteGraph& g, std::size_t max_side = 8);

// Permanent by Laplace expansion along the first row, O(n!). Square input
// only. Guard on the order.
std::uint64_t naive_permanent(const ZeroOneMatrix& x, std::size_t max_order = 12);

}  // namespace oracle
}  // namespace bistable
