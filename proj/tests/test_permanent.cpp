#include <cstdint>
#include <stdexcept>
#include <variant>

#include "doctest.h"

#include "bistable/core.hpp"
#include "bistable/errors.hpp"
#include "bistable/generators.hpp"
#include "bistable/permanent.hpp"

using namespace bistable;

TEST_CASE("permanents of small matrices") {
  CHECK(permanent(ZeroOneMatrix::from_rows({{1}})).value == 1);
  CHECK(permanent(ZeroOneMatrix::from_rows({{0}})).value == 0);
  CHECK(permanent(gen::identity_matrix(4)).value == 1);
  CHECK(permanent(gen::ones_matrix(3)).value == 6);
  CHECK(permanent(gen::ones_matrix(5)).value == 120);
  CHECK(permanent(std::get<ZeroOneMatrix>(gen::fixture("fig5_x"))).value == 2);
  CHECK(permanent(std::get<ZeroOneMatrix>(gen::fixture("fig5_y"))).value == 1);
  CHECK(permanent(std::get<ZeroOneMatrix>(gen::fixture("fig5_z"))).value == 2);
  // The cycle matrix has exactly the identity and the shift diagonals.
  CHECK(permanent(gen::cycle_matrix(6)).value == 2);
}

TEST_CASE("permanent guard and input checks") {
  CHECK_THROWS_AS(permanent(ZeroOneMatrix(2, 3)), not_square_error);
  CHECK_THROWS_AS(permanent(gen::ones_matrix(21), 20), too_large_error);
  // Raising the guard works; 20! still fits in 64 bits.
  CHECK(permanent(gen::ones_matrix(20), 20).value == 2432902008176640000ull);
}

TEST_CASE("permanent overflow is detected, not wrapped") {
  // 21! exceeds 2^64 - 1.
  CHECK_THROWS_AS(permanent(gen::ones_matrix(21), 33), overflow_error);
}

TEST_CASE("minor positivity") {
  CHECK(all_minor_permanents_positive(gen::ones_matrix(3)));
  CHECK(all_minor_permanents_positive(gen::cycle_matrix(4)));
  CHECK_FALSE(all_minor_permanents_positive(gen::identity_matrix(2)));
  CHECK_FALSE(
      all_minor_permanents_positive(std::get<ZeroOneMatrix>(gen::fixture("fig5_x"))));
  CHECK_THROWS_AS(all_minor_permanents_positive(ZeroOneMatrix(2, 3)), not_square_error);
  CHECK_THROWS_AS(all_minor_permanents_positive(ZeroOneMatrix::from_rows({{1}})),
                  std::invalid_argument);
}

TEST_CASE("counting perfect matchings through the graph view") {
  CHECK(count_perfect_matchings(to_graph(gen::ones_matrix(4))) == 24);
  CHECK(count_perfect_matchings(BipartiteGraph(0, 0, {})) == 1);
  CHECK(count_perfect_matchings(BipartiteGraph(2, 2, {{0, 0}})) == 0);
  CHECK_THROWS_AS(count_perfect_matchings(BipartiteGraph(1, 2, {})), unbalanced_error);
}
