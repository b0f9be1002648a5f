#include "bistable/permanent.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bistable/errors.hpp"
#include "bistable/matching.hpp"

namespace bistable {

PermanentValue permanent(const ZeroOneMatrix& x, std::size_t max_order) {
  if (!x.is_square()) throw not_square_error("permanent needs a square matrix");
  const std::size_t n = x.rows();
  if (n > max_order) {
    throw too_large_error("permanent: order " + std::to_string(n) + " exceeds guard " +
                          std::to_string(max_order));
  }
  if (n > 33) {
    // 2^n iterations are out of reach anyway; refuse before the subset
    // counter could overflow.
    throw too_large_error("permanent: order " + std::to_string(n) + " is not computable here");
  }

  // Ryser: per(X) = (-1)^n * sum over column subsets S of (-1)^|S| of the
  // product over rows of the row sums restricted to S. Subsets walk in
  // Gray-code order so each step updates the row sums by one column.
  std::vector<std::int64_t> row_sums(n, 0);
  std::vector<std::uint64_t> column_bits(n, 0);  // column j: bit i set iff x(i, j)
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (x.get(i, j)) column_bits[j] |= std::uint64_t{1} << i;
    }
  }
  __int128 total = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t counter = 1; counter < (std::uint64_t{1} << n); ++counter) {
    std::size_t j = static_cast<std::size_t>(std::countr_zero(counter));
    std::uint64_t bit = std::uint64_t{1} << j;
    gray ^= bit;
    std::int64_t delta = (gray & bit) ? 1 : -1;
    for (std::uint64_t rows = column_bits[j]; rows != 0; rows &= rows - 1) {
      row_sums[static_cast<std::size_t>(std::countr_zero(rows))] += delta;
    }
    __int128 product = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_sums[i] == 0) {
        product = 0;
        break;
      }
      if (__builtin_mul_overflow(product, static_cast<__int128>(row_sums[i]), &product)) {
        throw overflow_error("permanent: intermediate product overflows");
      }
    }
    bool subset_odd = (std::popcount(gray) & 1) != 0;
    bool n_odd = (n & 1) != 0;
    // Sign of (-1)^n * (-1)^|S|.
    total += (subset_odd == n_odd) ? product : -product;
  }
  if (total < 0 || total > static_cast<__int128>(std::numeric_limits<std::uint64_t>::max())) {
    throw overflow_error("permanent: value does not fit in 64 bits");
  }
  return PermanentValue{static_cast<std::uint64_t>(total)};
}

bool all_minor_permanents_positive(const ZeroOneMatrix& x) {
  if (!x.is_square()) throw not_square_error("minors need a square matrix");
  const std::size_t n = x.rows();
  if (n < 2) {
    throw std::invalid_argument("order 1 has no proper minors to decide");
  }
  // A minor has a positive permanent iff its graph has a perfect matching;
  // deciding by matchings keeps this unguarded.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      BipartiteGraph minor = to_graph(x.minor_without(i, j));
      if (maximum_matching(minor).rho != n - 1) return false;
    }
  }
  return true;
}

std::uint64_t count_perfect_matchings(const BipartiteGraph& g, std::size_t max_order) {
  if (!g.is_balanced()) throw unbalanced_error("counting perfect matchings needs |A| = |B|");
  if (g.a_count() > max_order) {
    throw too_large_error("count_perfect_matchings: side " + std::to_string(g.a_count()) +
                          " exceeds guard " + std::to_string(max_order));
  }
  if (g.a_count() == 0) return 1;  // the empty matching
  return permanent(from_graph(g), max_order).value;
}

}  // namespace bistable
