#pragma once

#include "bistable/core.hpp"

namespace bistable {

// Maximum matching result. rho is the term rank of the reduced adjacency
// matrix (size of a maximum matching).
struct TermRankResult {
  std::size_t rho = 0;
  Matching witness;
};

// Hopcroft-Karp with a fixed deterministic scan order (vertices and neighbor
// lists ascending), so the witness matching is a pure function of the graph.
TermRankResult maximum_matching(const BipartiteGraph& g);

// True iff |A| = |B| = rho.
bool has_perfect_matching(const BipartiteGraph& g);

// Partition of the edge set relative to the perfect matchings of g:
// an edge is allowed when some perfect matching uses it and forced when
// every perfect matching uses it. witness_matching is the canonical maximum
// matching the classification was derived from.
struct EdgeClassification {
  std::vector<Edge> allowed;
  std::vector<Edge> forced;
  Matching witness_matching;
};

// Throws no_perfect_matching_error unless g is balanced with a perfect
// matching. Matched pairs are contracted into a digraph with an arc u -> v
// for every non-matching edge (a_u, b_{m(v)}); an edge is allowed iff its
// endpoints' pairs share a strongly connected component (matching edges
// always are), and a matching edge is forced iff its pair is a singleton
// component.
EdgeClassification classify_edges(const BipartiteGraph& g);

// True iff x is square, has term rank equal to its order and every 1 of x
// lies on a nonzero diagonal (equivalently: every edge is allowed). The
// matrix with no nonzero diagonal therefore never has total support, zero
// matrix included. Throws not_square_error on rectangular input.
bool has_total_support(const ZeroOneMatrix& x);

}  // namespace bistable
