#include <variant>
#include <vector>

#include "doctest.h"

#include "bistable/core.hpp"
#include "bistable/errors.hpp"
#include "bistable/generators.hpp"
#include "bistable/oracle.hpp"

using namespace bistable;

namespace {
BipartiteGraph graph_fixture(const char* name) {
  return std::get<BipartiteGraph>(gen::fixture(name));
}
ZeroOneMatrix matrix_fixture(const char* name) {
  return std::get<ZeroOneMatrix>(gen::fixture(name));
}
}  // namespace

TEST_CASE("maximum stable sets of the figure graphs") {
  // fig3_g1 has exactly three: A, B, and the mixed set {a2, b1, b3}.
  auto sets = oracle::enumerate_maximum_stable_sets(graph_fixture("fig3_g1"));
  REQUIRE(sets.size() == 3);
  CHECK(sets[0] == VertexSet({0, 1, 2}, {}));
  CHECK(sets[1] == VertexSet({1}, {0, 2}));
  CHECK(sets[2] == VertexSet({}, {0, 1, 2}));

  // fig3_g2 is bistable: only the two vertex rows.
  auto bistable_sets = oracle::enumerate_maximum_stable_sets(graph_fixture("fig3_g2"));
  REQUIRE(bistable_sets.size() == 2);
  CHECK(bistable_sets[0] == VertexSet({0, 1, 2}, {}));
  CHECK(bistable_sets[1] == VertexSet({}, {0, 1, 2}));

  // fig1_g2's A side is the unique maximum stable set.
  auto unique = oracle::enumerate_maximum_stable_sets(graph_fixture("fig1_g2"));
  REQUIRE(unique.size() == 1);
  CHECK(unique[0] == VertexSet({0, 1, 2}, {}));

  CHECK(oracle::enumerate_maximum_stable_sets(graph_fixture("fig1_g1")).size() == 4);
}

TEST_CASE("stable set enumeration is guarded") {
  CHECK_THROWS_AS(oracle::enumerate_maximum_stable_sets(BipartiteGraph(7, 6, {}), 12),
                  too_large_error);
  // The guard is a parameter.
  CHECK(oracle::enumerate_maximum_stable_sets(BipartiteGraph(7, 6, {}), 13).size() == 1);
}

TEST_CASE("perfect matching enumeration is lexicographic") {
  auto matchings = oracle::enumerate_perfect_matchings(to_graph(matrix_fixture("fig5_x")));
  REQUIRE(matchings.size() == 2);
  CHECK(matchings[0] == Matching({{0, 0}, {1, 1}, {2, 2}}));
  CHECK(matchings[1] == Matching({{0, 1}, {1, 0}, {2, 2}}));

  CHECK(oracle::enumerate_perfect_matchings(BipartiteGraph(0, 0, {})).size() == 1);
  CHECK(oracle::enumerate_perfect_matchings(BipartiteGraph(2, 2, {{0, 0}})).empty());
  CHECK_THROWS_AS(oracle::enumerate_perfect_matchings(BipartiteGraph(1, 2, {})),
                  unbalanced_error);
  CHECK_THROWS_AS(oracle::enumerate_perfect_matchings(BipartiteGraph(9, 9, {}), 8),
                  too_large_error);
}

TEST_CASE("zero submatrix search") {
  auto witness = oracle::zero_submatrix_search(matrix_fixture("fig5_x"));
  REQUIRE(witness.has_value());
  CHECK(witness->rows == std::vector<std::size_t>{2});
  CHECK(witness->cols == std::vector<std::size_t>{0, 1});

  CHECK_FALSE(oracle::zero_submatrix_search(gen::ones_matrix(3)).has_value());
  CHECK(oracle::zero_submatrix_search(ZeroOneMatrix::from_rows({{0}})).has_value());
  CHECK_FALSE(oracle::zero_submatrix_search(ZeroOneMatrix::from_rows({{1}})).has_value());
  CHECK_THROWS_AS(oracle::zero_submatrix_search(gen::ones_matrix(13), 12), too_large_error);
}

TEST_CASE("hall surplus check") {
  CHECK(oracle::hall_surplus_check(to_graph(gen::cycle_matrix(4))));
  CHECK_FALSE(oracle::hall_surplus_check(graph_fixture("fig1_g1")));
  CHECK_FALSE(oracle::hall_surplus_check(to_graph(gen::identity_matrix(3))));
  CHECK_THROWS_AS(oracle::hall_surplus_check(graph_fixture("fig1_g2")), unbalanced_error);
}

TEST_CASE("edge edit bruteforce") {
  CHECK(oracle::alpha_plus_bruteforce(graph_fixture("fig1_g1")));
  CHECK_FALSE(oracle::alpha_plus_bruteforce(graph_fixture("fig1_g2")));
  // Under cross-side additions only, fig1_g2 keeps its stability number.
  CHECK(oracle::alpha_plus_bruteforce(graph_fixture("fig1_g2"),
                                      oracle::EdgeAdditionMode::cross_side_only));
  CHECK_FALSE(oracle::alpha_minus_bruteforce(graph_fixture("fig1_g1")));
  CHECK(oracle::alpha_minus_bruteforce(graph_fixture("fig1_g2")));
  CHECK(oracle::alpha_minus_bruteforce(graph_fixture("fig2_g")));
  CHECK_THROWS_AS(oracle::alpha_plus_bruteforce(
                      BipartiteGraph(11, 11, {}), oracle::EdgeAdditionMode::all_pairs, 20),
                  too_large_error);
}

TEST_CASE("bruteforce stability number and term rank") {
  CHECK(oracle::bruteforce_stability_number(graph_fixture("fig2_g")) == 5);
  CHECK(oracle::bruteforce_stability_number(BipartiteGraph(2, 3, {})) == 5);
  CHECK(oracle::bruteforce_term_rank(graph_fixture("fig1_g2")) == 2);
  CHECK(oracle::bruteforce_term_rank(BipartiteGraph(3, 3, {})) == 0);
  CHECK_THROWS_AS(oracle::bruteforce_term_rank(BipartiteGraph(9, 2, {}), 8),
                  too_large_error);
}

TEST_CASE("naive permanent") {
  CHECK(oracle::naive_permanent(gen::ones_matrix(4)) == 24);
  CHECK(oracle::naive_permanent(matrix_fixture("fig5_x")) == 2);
  CHECK(oracle::naive_permanent(ZeroOneMatrix::from_rows({{0}})) == 0);
  CHECK_THROWS_AS(oracle::naive_permanent(gen::ones_matrix(13), 12), too_large_error);
  CHECK_THROWS_AS(oracle::naive_permanent(ZeroOneMatrix(2, 3)), not_square_error);
}
