#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "bistable/core.hpp"

namespace bistable {
namespace gen {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over the standard engines
// because its output for a given 64-bit seed is three lines of arithmetic,
// reproducible in any language, whereas std distributions are
// implementation-defined. All randomized generators document their draw
// order so fixtures can be regenerated elsewhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Event of probability p: next() < floor(p * 2^64), so p >= 1 always fires
  // and p <= 0 never does.
  bool chance(double p) {
    std::uint64_t draw = next();
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return draw < static_cast<std::uint64_t>(p * 18446744073709551616.0);
  }

  // Uniform value in [0, bound), by modulo (bias is irrelevant here and the
  // rule is easy to replicate).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// Named example graphs and matrices used across the tests and the CLI.
// Parameterized names use call syntax: "cycle(4)", "nk2(3)", "ones(2)",
// "identity(5)". Unknown names throw unknown_fixture_error.
//
//   fig1_g1, fig1_g2, fig2_g, fig3_g1, fig3_g2, fig4_g   graphs
//   fig5_x, fig5_y, fig5_z                               matrices
//   cycle(n)     reduced adjacency matrix of the cycle on 2n vertices, n >= 2
//   nk2(n)       graph of n disjoint edges
//   ones(n)      all-ones matrix
//   identity(n)  identity matrix
using Fixture = std::variant<ZeroOneMatrix, BipartiteGraph>;

Fixture fixture(const std::string& name);

// Direct accessors behind the parameterized fixture names.
ZeroOneMatrix cycle_matrix(std::size_t n);
BipartiteGraph nk2(std::size_t n);
ZeroOneMatrix ones_matrix(std::size_t n);
ZeroOneMatrix identity_matrix(std::size_t n);

// Balanced graph on n + n vertices; each of the n^2 pairs is drawn once in
// row-major order and kept with probability edge_prob.
BipartiteGraph random_balanced(std::size_t n, double edge_prob, std::uint64_t seed);

// A random permutation diagonal (Fisher-Yates, swapping positions n-1 down
// to 1 with below(i+1)) guarantees a perfect matching; every off-diagonal
// pair is then drawn in row-major order with probability extra_edge_prob.
BipartiteGraph random_with_pm(std::size_t n, double extra_edge_prob, std::uint64_t seed);

// A cycle matrix conjugated by random row and column permutations (two
// Fisher-Yates draws, rows first), then one extra-1 draw per position in
// row-major order, cycle entries included. Any superset of a fully
// indecomposable matrix stays fully indecomposable, so the result is
// certified by construction; n = 1 returns [1].
ZeroOneMatrix random_fully_indecomposable(std::size_t n, double extra_edge_prob,
                                          std::uint64_t seed);

}  // namespace gen
}  // namespace bistable
