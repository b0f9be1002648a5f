#pragma once

#include "bistable/core.hpp"

namespace bistable {

// Boolean matrix product: z(i, j) = OR_k x(i, k) AND y(k, j). This is the
// zero pattern of the integer product. Throws dimension_mismatch_error
// unless x.cols() == y.rows().
ZeroOneMatrix boolean_product(const ZeroOneMatrix& x, const ZeroOneMatrix& y);

// Join of g = (A, B) and h = (B', C) with |B| = |B'| (else
// dimension_mismatch_error): vertex rows A and C, edge (a, c) iff some b has
// (a, b) in g and (b, c) in h. Built directly on adjacency lists; converting
// to matrices and taking the Boolean product gives the same graph.
BipartiteGraph join(const BipartiteGraph& g, const BipartiteGraph& h);

// Kronecker product: with y of shape p x q, the entry at
// (k*p + i, r*q + j) is x(k, r) AND y(i, j). No shape constraints.
ZeroOneMatrix kronecker_product(const ZeroOneMatrix& x, const ZeroOneMatrix& y);

// Kronecker product of graphs: A-row = A_g x A_h flattened as
// k * h.a_count() + p, B-row likewise; ((k, p), (r, q)) is an edge iff
// (k, r) in g and (p, q) in h. Built directly on edge lists; commutes with
// from_graph and kronecker_product.
BipartiteGraph graph_kronecker(const BipartiteGraph& g, const BipartiteGraph& h);

}  // namespace bistable
