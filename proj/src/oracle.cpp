#include "bistable/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "bistable/errors.hpp"

namespace bistable {
namespace oracle {

namespace {

// One flat vertex numbering for both sides: 0..na-1 the A-row, then the
// B-row. Subset enumeration works on plain adjacency bitmasks, so the same
// machinery copes with the non-bipartite graphs produced by same-side edge
// additions.
struct MaskGraph {
  std::size_t na = 0;
  std::size_t total = 0;
  std::vector<std::uint64_t> adj;

  explicit MaskGraph(const BipartiteGraph& g)
      : na(g.a_count()), total(g.vertex_count()), adj(total, 0) {
    for (const Edge& e : g.edges()) {
      adj[e.a] |= std::uint64_t{1} << (na + e.b);
      adj[na + e.b] |= std::uint64_t{1} << e.a;
    }
  }
};

bool stable(const std::vector<std::uint64_t>& adj, std::uint64_t subset) {
  for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
    std::size_t v = static_cast<std::size_t>(std::countr_zero(rest));
    if (adj[v] & subset) return false;
  }
  return true;
}

std::size_t max_stable_size(const std::vector<std::uint64_t>& adj, std::size_t total) {
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << total); ++subset) {
    if (std::popcount(subset) > static_cast<int>(best) && stable(adj, subset)) {
      best = static_cast<std::size_t>(std::popcount(subset));
    }
  }
  return best;
}

void check_vertex_guard(const BipartiteGraph& g, std::size_t max_vertices, const char* who) {
  // 30 is a hard implementation cap (single-word subset masks); the
  // configurable guard can only tighten it.
  std::size_t effective = std::min<std::size_t>(max_vertices, 30);
  if (g.vertex_count() > effective) {
    throw too_large_error(std::string(who) + ": instance has " +
                          std::to_string(g.vertex_count()) + " vertices, guard is " +
                          std::to_string(effective));
  }
}

}  // namespace

std::vector<VertexSet> enumerate_maximum_stable_sets(const BipartiteGraph& g,
                                                     std::size_t max_vertices) {
  check_vertex_guard(g, max_vertices, "enumerate_maximum_stable_sets");
  MaskGraph mg(g);
  std::size_t alpha = max_stable_size(mg.adj, mg.total);
  // Collect masks, then decode. Numeric mask order is not lexicographic in
  // the member lists, so decoded sets are sorted explicitly.
  std::vector<std::vector<std::size_t>> members;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << mg.total); ++subset) {
    if (std::popcount(subset) != static_cast<int>(alpha)) continue;
    if (!stable(mg.adj, subset)) continue;
    std::vector<std::size_t> list;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      list.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    members.push_back(std::move(list));
  }
  std::sort(members.begin(), members.end());
  std::vector<VertexSet> result;
  result.reserve(members.size());
  for (const auto& list : members) {
    std::vector<std::size_t> a_members, b_members;
    for (std::size_t v : list) {
      if (v < mg.na) {
        a_members.push_back(v);
      } else {
        b_members.push_back(v - mg.na);
      }
    }
    result.emplace_back(std::move(a_members), std::move(b_members));
  }
  return result;
}

std::vector<Matching> enumerate_perfect_matchings(const BipartiteGraph& g, std::size_t max_side) {
  if (!g.is_balanced()) throw unbalanced_error("perfect matchings need |A| = |B|");
  if (g.a_count() > max_side) {
    throw too_large_error("enumerate_perfect_matchings: side " + std::to_string(g.a_count()) +
                          " exceeds guard " + std::to_string(max_side));
  }
  const std::size_t n = g.a_count();
  std::vector<Matching> result;
  std::vector<std::size_t> chosen(n, 0);
  std::vector<bool> used(n, false);
  // Row by row, columns ascending: the output is lexicographic in the
  // matched-column sequence.
  auto descend = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      std::vector<Edge> pairs;
      pairs.reserve(n);
      for (std::size_t i = 0; i < n; ++i) pairs.push_back(Edge{i, chosen[i]});
      result.emplace_back(std::move(pairs));
      return;
    }
    for (std::size_t col : g.a_adjacency()[row]) {
      if (used[col]) continue;
      used[col] = true;
      chosen[row] = col;
      self(self, row + 1);
      used[col] = false;
    }
  };
  descend(descend, 0);
  return result;
}

std::optional<ZeroBlockWitness> zero_submatrix_search(const ZeroOneMatrix& x,
                                                      std::size_t max_order) {
  if (!x.is_square()) throw not_square_error("zero submatrix search needs a square matrix");
  const std::size_t n = x.rows();
  if (n > max_order) {
    throw too_large_error("zero_submatrix_search: order " + std::to_string(n) +
                          " exceeds guard " + std::to_string(max_order));
  }
  if (n == 1) {
    // No proper nonempty row subset exists; order 1 decomposability is a
    // convention on the single entry.
    if (x.get(0, 0)) return std::nullopt;
    return ZeroBlockWitness{{0}, {0}};
  }
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n) - 1; ++subset) {
    std::vector<std::size_t> rows;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
      rows.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < n; ++j) {
      bool all_zero = true;
      for (std::size_t i : rows) {
        if (x.get(i, j)) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) zero_cols.push_back(j);
    }
    if (zero_cols.size() >= n - rows.size()) {
      zero_cols.resize(n - rows.size());
      return ZeroBlockWitness{std::move(rows), std::move(zero_cols)};
    }
  }
  return std::nullopt;
}

bool hall_surplus_check(const BipartiteGraph& g, std::size_t max_side) {
  if (!g.is_balanced()) throw unbalanced_error("the surplus check needs |A| = |B|");
  const std::size_t n = g.a_count();
  if (n > max_side) {
    throw too_large_error("hall_surplus_check: side " + std::to_string(n) + " exceeds guard " +
                          std::to_string(max_side));
  }
  if (n < 2) return true;  // no proper nonempty subsets
  std::vector<std::uint64_t> a_neighbors(n, 0), b_neighbors(n, 0);
  for (const Edge& e : g.edges()) {
    a_neighbors[e.a] |= std::uint64_t{1} << e.b;
    b_neighbors[e.b] |= std::uint64_t{1} << e.a;
  }
  for (int side = 0; side < 2; ++side) {
    const auto& neighbors = side == 0 ? a_neighbors : b_neighbors;
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n) - 1; ++subset) {
      std::uint64_t seen = 0;
      for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
        seen |= neighbors[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (std::popcount(seen) <= std::popcount(subset)) return false;
    }
  }
  return true;
}

bool alpha_plus_bruteforce(const BipartiteGraph& g, EdgeAdditionMode mode,
                           std::size_t max_vertices) {
  check_vertex_guard(g, max_vertices, "alpha_plus_bruteforce");
  MaskGraph mg(g);
  std::size_t alpha = max_stable_size(mg.adj, mg.total);
  for (std::size_t u = 0; u < mg.total; ++u) {
    for (std::size_t v = u + 1; v < mg.total; ++v) {
      bool cross = (u < mg.na) != (v < mg.na);
      if (mode == EdgeAdditionMode::cross_side_only && !cross) continue;
      if (mg.adj[u] & (std::uint64_t{1} << v)) continue;
      mg.adj[u] |= std::uint64_t{1} << v;
      mg.adj[v] |= std::uint64_t{1} << u;
      std::size_t perturbed = max_stable_size(mg.adj, mg.total);
      mg.adj[u] &= ~(std::uint64_t{1} << v);
      mg.adj[v] &= ~(std::uint64_t{1} << u);
      if (perturbed < alpha) return false;
    }
  }
  return true;
}

bool alpha_minus_bruteforce(const BipartiteGraph& g, std::size_t max_vertices) {
  check_vertex_guard(g, max_vertices, "alpha_minus_bruteforce");
  MaskGraph mg(g);
  std::size_t alpha = max_stable_size(mg.adj, mg.total);
  for (const Edge& e : g.edges()) {
    std::size_t u = e.a, v = mg.na + e.b;
    mg.adj[u] &= ~(std::uint64_t{1} << v);
    mg.adj[v] &= ~(std::uint64_t{1} << u);
    std::size_t perturbed = max_stable_size(mg.adj, mg.total);
    mg.adj[u] |= std::uint64_t{1} << v;
    mg.adj[v] |= std::uint64_t{1} << u;
    if (perturbed > alpha) return false;
  }
  return true;
}

std::size_t bruteforce_stability_number(const BipartiteGraph& g, std::size_t max_vertices) {
  check_vertex_guard(g, max_vertices, "bruteforce_stability_number");
  MaskGraph mg(g);
  return max_stable_size(mg.adj, mg.total);
}

std::size_t bruteforce_term_rank(const BipartiteGraph& g, std::size_t max_side) {
  if (std::max(g.a_count(), g.b_count()) > max_side) {
    throw too_large_error("bruteforce_term_rank: side exceeds guard " +
                          std::to_string(max_side));
  }
  // Rows either stay unmatched or take any free column; memo on
  // (row, used column mask).
  const std::size_t na = g.a_count();
  std::vector<std::vector<int>> memo(na + 1,
                                     std::vector<int>(std::size_t{1} << g.b_count(), -1));
  auto best = [&](auto&& self, std::size_t row, std::uint64_t used) -> int {
    if (row == na) return 0;
    int& slot = memo[row][used];
    if (slot >= 0) return slot;
    int result = self(self, row + 1, used);
    for (std::size_t col : g.a_adjacency()[row]) {
      if (used & (std::uint64_t{1} << col)) continue;
      result = std::max(result, 1 + self(self, row + 1, used | (std::uint64_t{1} << col)));
    }
    return slot = result;
  };
  return static_cast<std::size_t>(best(best, 0, 0));
}

std::uint64_t naive_permanent(const ZeroOneMatrix& x, std::size_t max_order) {
  if (!x.is_square()) throw not_square_error("permanent needs a square matrix");
  const std::size_t n = x.rows();
  if (n > max_order) {
    throw too_large_error("naive_permanent: order " + std::to_string(n) + " exceeds guard " +
                          std::to_string(max_order));
  }
  // Literal Laplace expansion along the first remaining row, O(n!).
  auto expand = [&](auto&& self, std::size_t row, std::uint64_t remaining_cols) -> std::uint64_t {
    if (row == n) return 1;
    std::uint64_t total = 0;
    for (std::uint64_t rest = remaining_cols; rest != 0; rest &= rest - 1) {
      std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
      if (x.get(row, j)) {
        total += self(self, row + 1, remaining_cols & ~(std::uint64_t{1} << j));
      }
    }
    return total;
  };
  return expand(expand, 0, (std::uint64_t{1} << n) - 1);
}

}  // namespace oracle
}  // namespace bistable
