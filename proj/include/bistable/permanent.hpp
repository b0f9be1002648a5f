#pragma once

#include <cstdint>

#include "bistable/core.hpp"

namespace bistable {

struct PermanentValue {
  std::uint64_t value = 0;
  friend bool operator==(const PermanentValue&, const PermanentValue&) = default;
};

// Exact permanent by Ryser's inclusion-exclusion with Gray-code column
// updates, O(2^n * n). Guarded: orders past max_order throw too_large_error.
// Accumulation is 128-bit and overflow-checked; a result that does not fit
// in 64 bits throws overflow_error instead of wrapping (cannot happen for
// n <= 20, where the permanent is at most 20!).
PermanentValue permanent(const ZeroOneMatrix& x, std::size_t max_order = 20);

// True iff every (n-1) x (n-1) submatrix obtained by striking one row and
// one column has a nonzero diagonal, decided by matchings rather than
// permanents so no guard applies. Square only; order 1 is rejected
// (std::invalid_argument) because the empty minor has no content to decide.
bool all_minor_permanents_positive(const ZeroOneMatrix& x);

// Number of perfect matchings = permanent of the reduced adjacency matrix.
// Throws unbalanced_error / too_large_error.
std::uint64_t count_perfect_matchings(const BipartiteGraph& g, std::size_t max_order = 20);

}  // namespace bistable
