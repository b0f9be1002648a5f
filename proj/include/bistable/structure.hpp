#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bistable/core.hpp"
#include "bistable/matching.hpp"

// Structural deciders for square (0,1)-matrices and balanced bipartite
// graphs: full indecomposability, the canonical block triangular
// decomposition into fully indecomposable blocks, and the stability of the
// maximum-stable-set size under edge edits.

namespace bistable {

// alpha(g) = |A| + |B| - rho: maximum size of a stable vertex set.
std::size_t stability_number(const BipartiteGraph& g);

// True when every vertex outside d has at least two neighbors inside d.
bool is_two_dominating(const BipartiteGraph& g, const VertexSet& d);

// A maximum stable set extracted from a minimum vertex cover (alternating
// reachability from the unmatched A-vertices). Deterministic.
VertexSet koenig_maximum_stable_set(const BipartiteGraph& g);

// Witness of partial decomposability: a set of rows R and columns C with
// every entry of R x C zero and |R| + |C| = n. For n = 1 the zero matrix
// gets the degenerate witness R = {0}, C = {0} (the formal shape constraint
// has no valid split at order 1, but [0] counts as partly decomposable).
struct ZeroBlockWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Returns a witness iff x (square, else not_square_error) is not fully
// indecomposable. Polynomial: a deficient row set found by alternating
// reachability when the term rank is short, otherwise a split of the pair
// digraph's condensation.
std::optional<ZeroBlockWitness> is_partly_decomposable(const ZeroOneMatrix& x);

// True iff x is square with full term rank, its graph is connected and every
// edge is allowed. Agrees with !is_partly_decomposable(x) on all inputs.
// For order 1: [1] yes, [0] no.
bool is_fully_indecomposable(const ZeroOneMatrix& x);

// True iff the only maximum stable sets of g are the two vertex rows A and B.
// Equivalent to: g balanced, connected, reduced adjacency matrix fully
// indecomposable. The single edge K2 is bistable.
bool is_bistable(const BipartiteGraph& g);

// alpha unchanged under every single edge addition. For balanced graphs this
// is equivalent to having a perfect matching. Throws unbalanced_error on
// unbalanced input (use the brute-force oracle there).
bool is_alpha_plus_stable(const BipartiteGraph& g);

// alpha unchanged under every single edge deletion, decided by enumerating
// all maximum stable sets and checking 2-domination. Exhaustive: throws
// too_large_error past max_vertices.
bool is_alpha_minus_stable(const BipartiteGraph& g, std::size_t max_vertices = 24);

// alpha unchanged under any single edge edit. Balanced input only
// (unbalanced_error otherwise). Decided in polynomial time: a perfect
// matching exists and no edge is forced; equivalently every block of the
// decomposition below has order >= 2, and equivalently every 1 of the matrix
// is avoided by some nonzero diagonal.
bool is_alpha_stable(const BipartiteGraph& g);

// Canonical decomposition PXQ into block triangular form with fully
// indecomposable square diagonal blocks and zeros strictly below the block
// diagonal. row_perm/col_perm list original indices in the new order:
// permuted(i, j) = x(row_perm[i], col_perm[j]). Blocks follow a topological
// order of the contracted pair digraph (sources first, ties by smallest
// original row index); rows inside a block are ascending and each column is
// the matching partner of the row in the same position, so the matching runs
// down the block diagonals. Throws not_square_error / no_perfect_matching_error.
struct BlockTriangularForm {
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::vector<std::size_t> block_sizes;
  std::vector<ZeroOneMatrix> blocks;
};

BlockTriangularForm block_triangular_form(const ZeroOneMatrix& x);

// Number of 1 x 1 blocks; equals the number of forced edges.
std::size_t count_unit_blocks(const BlockTriangularForm& form);

// The diagonal blocks of the decomposition as induced subgraphs of g, each
// bistable, ordered by smallest original A-vertex. Together they cover every
// vertex exactly once. Throws unbalanced_error / no_perfect_matching_error.
std::vector<InducedSubgraph> bistable_components(const BipartiteGraph& g);

// For a stable set s with p >= 1 A-members and q >= 1 B-members, row and
// column permutations that move the p x q all-zero submatrix induced by s
// into the upper right corner (rows of s first, columns of s last).
// Empty result iff s is not stable. Throws std::invalid_argument when a side
// of s is empty or out of range.
struct StableSetZeroBlock {
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
  std::size_t p = 0;
  std::size_t q = 0;
};

std::optional<StableSetZeroBlock> stable_set_zero_block(const BipartiteGraph& g,
                                                        const VertexSet& s);

// Aggregate stability answer for one balanced graph. is_alpha_minus comes
// from the exhaustive decider, so the same guard applies.
struct StabilityReport {
  std::size_t alpha = 0;
  bool is_alpha_plus = false;
  bool is_alpha_minus = false;
  bool is_alpha = false;
  bool is_bistable = false;
};

StabilityReport stability_report(const BipartiteGraph& g, std::size_t max_vertices = 24);

}  // namespace bistable
