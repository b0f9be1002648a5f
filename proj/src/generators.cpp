#include "bistable/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bistable/errors.hpp"

namespace bistable {
namespace gen {

namespace {

// The fig* fixtures are the bundled example graphs drawn in docs/figures.md;
// edges are listed 1-based there and converted here.
BipartiteGraph graph_from_pairs(std::size_t a_count, std::size_t b_count,
                                std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j] : pairs) {
    edges.push_back(Edge{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)});
  }
  return BipartiteGraph(a_count, b_count, std::move(edges));
}

std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  for (std::size_t i = n; i-- > 1;) {
    std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

// Accepts "name(k)" and fills k; plain names pass through untouched.
bool split_parameter(const std::string& name, std::string& stem, std::size_t& k) {
  auto open = name.find('(');
  if (open == std::string::npos) return false;
  if (name.back() != ')') throw unknown_fixture_error("malformed fixture name '" + name + "'");
  stem = name.substr(0, open);
  std::string digits = name.substr(open + 1, name.size() - open - 2);
  if (digits.empty() || digits.size() > 6 ||
      digits.find_first_not_of("0123456789") != std::string::npos) {
    throw unknown_fixture_error("bad fixture parameter in '" + name + "'");
  }
  k = static_cast<std::size_t>(std::stoul(digits));
  return true;
}

}  // namespace

Fixture fixture(const std::string& name) {
  if (name == "fig1_g1") {
    // Three matched pairs plus a dominating first A-vertex: keeps alpha
    // under additions (perfect matching) but not under every deletion.
    return graph_from_pairs(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 2}, {3, 3}});
  }
  if (name == "fig1_g2") {
    // Unbalanced 3 + 2 with one dominant stable row: alpha survives any
    // deletion but not every addition.
    return graph_from_pairs(3, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}});
  }
  if (name == "fig2_g") {
    // A 4-cycle block and a 6-cycle block tied by one cross edge; connected
    // and alpha-stable with two bistable components.
    return graph_from_pairs(5, 5,
                            {{1, 1},
                             {1, 2},
                             {2, 1},
                             {2, 2},
                             {3, 2},
                             {3, 3},
                             {3, 4},
                             {4, 4},
                             {4, 5},
                             {5, 3},
                             {5, 5}});
  }
  if (name == "fig3_g1") {
    // Connected with a perfect matching yet exactly three maximum stable
    // sets, so not bistable.
    return graph_from_pairs(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {3, 3}});
  }
  if (name == "fig3_g2") {
    // The 6-cycle: bistable.
    return graph_from_pairs(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 1}, {3, 3}});
  }
  if (name == "fig4_g") {
    // Three bistable blocks (4-cycle, 6-cycle, single edge) chained by two
    // cross edges: alpha-plus-stable, not alpha-stable.
    return graph_from_pairs(6, 6,
                            {{1, 1},
                             {1, 2},
                             {2, 1},
                             {2, 2},
                             {3, 2},
                             {3, 3},
                             {3, 4},
                             {4, 4},
                             {4, 5},
                             {5, 3},
                             {5, 5},
                             {6, 5},
                             {6, 6}});
  }
  if (name == "fig5_x") {
    return ZeroOneMatrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 0, 1}});
  }
  if (name == "fig5_y") {
    return ZeroOneMatrix::from_rows({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
  }
  if (name == "fig5_z") {
    // Boolean product of fig5_x and fig5_y.
    return ZeroOneMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {0, 0, 1}});
  }
  std::string stem;
  std::size_t k = 0;
  if (split_parameter(name, stem, k)) {
    if (stem == "cycle") return cycle_matrix(k);
    if (stem == "nk2") return nk2(k);
    if (stem == "ones") return ones_matrix(k);
    if (stem == "identity") return identity_matrix(k);
  }
  throw unknown_fixture_error("unknown fixture '" + name + "'");
}

ZeroOneMatrix cycle_matrix(std::size_t n) {
  if (n < 2) throw std::invalid_argument("cycle_matrix needs n >= 2");
  ZeroOneMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    x.set(i, i, true);
    x.set(i, (i + 1) % n, true);
  }
  return x;
}

BipartiteGraph nk2(std::size_t n) {
  if (n < 1) throw std::invalid_argument("nk2 needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge{i, i});
  return BipartiteGraph(n, n, std::move(edges));
}

ZeroOneMatrix ones_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("ones_matrix needs n >= 1");
  ZeroOneMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) x.set(i, j, true);
  }
  return x;
}

ZeroOneMatrix identity_matrix(std::size_t n) {
  if (n < 1) throw std::invalid_argument("identity_matrix needs n >= 1");
  ZeroOneMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, i, true);
  return x;
}

BipartiteGraph random_balanced(std::size_t n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_balanced needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.chance(edge_prob)) edges.push_back(Edge{i, j});
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph random_with_pm(std::size_t n, double extra_edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_with_pm needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<std::size_t> diagonal = random_permutation(n, rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge{i, diagonal[i]});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == diagonal[i]) continue;
      if (rng.chance(extra_edge_prob)) edges.push_back(Edge{i, j});
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

ZeroOneMatrix random_fully_indecomposable(std::size_t n, double extra_edge_prob,
                                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_fully_indecomposable needs n >= 1");
  if (n == 1) return ones_matrix(1);
  SplitMix64 rng(seed);
  std::vector<std::size_t> row_perm = random_permutation(n, rng);
  std::vector<std::size_t> col_perm = random_permutation(n, rng);
  ZeroOneMatrix x(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    x.set(row_perm[i], col_perm[i], true);
    x.set(row_perm[i], col_perm[(i + 1) % n], true);
  }
  // One draw per position in row-major order (cycle entries included, so the
  // draw sequence does not depend on the cycle layout).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.chance(extra_edge_prob)) x.set(i, j, true);
    }
  }
  return x;
}

}  // namespace gen
}  // namespace bistable
