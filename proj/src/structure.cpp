#include "bistable/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>

#include "bistable/detail/scc.hpp"
#include "bistable/errors.hpp"
#include "bistable/oracle.hpp"

namespace bistable {

namespace {

constexpr std::size_t kNone = SIZE_MAX;

// Pair digraph of a perfectly matched square matrix: node u stands for the
// matched pair (row u, column col_of[u]); every non-matching 1 at
// (u, col_of[v]) contributes the arc u -> v.
std::vector<std::vector<std::size_t>> pair_digraph(const BipartiteGraph& g,
                                                   const std::vector<std::size_t>& pair_of_col) {
  std::vector<std::vector<std::size_t>> arcs(g.a_count());
  for (const Edge& e : g.edges()) {
    std::size_t u = e.a, v = pair_of_col[e.b];
    if (u != v) arcs[u].push_back(v);
  }
  return arcs;
}

// Strongly connected components of the pair digraph in the canonical block
// order: topological with sources first, ties by smallest row index.
std::vector<std::vector<std::size_t>> canonical_blocks(
    const std::vector<std::vector<std::size_t>>& arcs) {
  auto components = detail::strongly_connected_components(arcs);
  const std::size_t k = components.size();
  std::vector<std::size_t> component_of(arcs.size());
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t v : components[c]) component_of[v] = c;
  }
  std::set<std::pair<std::size_t, std::size_t>> condensed;
  for (std::size_t u = 0; u < arcs.size(); ++u) {
    for (std::size_t v : arcs[u]) {
      if (component_of[u] != component_of[v]) condensed.insert({component_of[u], component_of[v]});
    }
  }
  std::vector<std::size_t> indegree(k, 0);
  for (const auto& [cu, cv] : condensed) ++indegree[cv];
  using Key = std::pair<std::size_t, std::size_t>;  // (smallest row, component)
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> ready;
  for (std::size_t c = 0; c < k; ++c) {
    if (indegree[c] == 0) ready.push({components[c].front(), c});
  }
  std::vector<std::vector<std::size_t>> ordered;
  ordered.reserve(k);
  while (!ready.empty()) {
    std::size_t c = ready.top().second;
    ready.pop();
    ordered.push_back(components[c]);
    for (const auto& [cu, cv] : condensed) {
      if (cu == c && --indegree[cv] == 0) ready.push({components[cv].front(), cv});
    }
  }
  return ordered;
}

}  // namespace

std::size_t stability_number(const BipartiteGraph& g) {
  return g.vertex_count() - maximum_matching(g).rho;
}

bool is_two_dominating(const BipartiteGraph& g, const VertexSet& d) {
  for (std::size_t a : d.a_members()) {
    if (a >= g.a_count()) throw std::invalid_argument("vertex set member out of range");
  }
  for (std::size_t b : d.b_members()) {
    if (b >= g.b_count()) throw std::invalid_argument("vertex set member out of range");
  }
  for (std::size_t a = 0; a < g.a_count(); ++a) {
    if (d.contains_a(a)) continue;
    std::size_t hits = 0;
    for (std::size_t b : g.a_adjacency()[a]) {
      if (d.contains_b(b) && ++hits == 2) break;
    }
    if (hits < 2) return false;
  }
  for (std::size_t b = 0; b < g.b_count(); ++b) {
    if (d.contains_b(b)) continue;
    std::size_t hits = 0;
    for (std::size_t a : g.b_adjacency()[b]) {
      if (d.contains_a(a) && ++hits == 2) break;
    }
    if (hits < 2) return false;
  }
  return true;
}

VertexSet koenig_maximum_stable_set(const BipartiteGraph& g) {
  TermRankResult mm = maximum_matching(g);
  std::vector<std::size_t> match_a(g.a_count(), kNone), match_b(g.b_count(), kNone);
  for (const Edge& e : mm.witness.pairs()) {
    match_a[e.a] = e.b;
    match_b[e.b] = e.a;
  }
  // Alternating reachability from the unmatched A-vertices: A to B along any
  // edge, B to A along matching edges. The reachable A-vertices plus the
  // unreachable B-vertices form a maximum stable set (complement of a
  // minimum vertex cover).
  std::vector<bool> reached_a(g.a_count(), false), reached_b(g.b_count(), false);
  std::queue<std::size_t> frontier;
  for (std::size_t a = 0; a < g.a_count(); ++a) {
    if (match_a[a] == kNone) {
      reached_a[a] = true;
      frontier.push(a);
    }
  }
  while (!frontier.empty()) {
    std::size_t a = frontier.front();
    frontier.pop();
    for (std::size_t b : g.a_adjacency()[a]) {
      if (reached_b[b]) continue;
      reached_b[b] = true;
      std::size_t a2 = match_b[b];
      if (a2 != kNone && !reached_a[a2]) {
        reached_a[a2] = true;
        frontier.push(a2);
      }
    }
  }
  std::vector<std::size_t> a_members, b_members;
  for (std::size_t a = 0; a < g.a_count(); ++a)
    if (reached_a[a]) a_members.push_back(a);
  for (std::size_t b = 0; b < g.b_count(); ++b)
    if (!reached_b[b]) b_members.push_back(b);
  return VertexSet(std::move(a_members), std::move(b_members));
}

std::optional<ZeroBlockWitness> is_partly_decomposable(const ZeroOneMatrix& x) {
  if (!x.is_square()) throw not_square_error("decomposability is defined for square matrices");
  const std::size_t n = x.rows();
  if (n == 1) {
    if (x.get(0, 0)) return std::nullopt;
    return ZeroBlockWitness{{0}, {0}};
  }
  BipartiteGraph g = to_graph(x);
  TermRankResult mm = maximum_matching(g);

  if (mm.rho < n) {
    // Short term rank always yields a witness. Zero lines first; otherwise
    // alternating reachability from an unmatched row gives a row set whose
    // whole neighborhood is too small, leaving enough untouched columns.
    for (std::size_t i = 0; i < n; ++i) {
      if (g.a_adjacency()[i].empty()) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j + 1 < n; ++j) cols.push_back(j);
        return ZeroBlockWitness{{i}, std::move(cols)};
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (g.b_adjacency()[j].empty()) {
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i + 1 < n; ++i) rows.push_back(i);
        return ZeroBlockWitness{std::move(rows), {j}};
      }
    }
    std::vector<std::size_t> match_a(n, kNone), match_b(n, kNone);
    for (const Edge& e : mm.witness.pairs()) {
      match_a[e.a] = e.b;
      match_b[e.b] = e.a;
    }
    std::vector<bool> reached_a(n, false), reached_b(n, false);
    std::queue<std::size_t> frontier;
    for (std::size_t a = 0; a < n; ++a) {
      if (match_a[a] == kNone) {
        reached_a[a] = true;
        frontier.push(a);
      }
    }
    while (!frontier.empty()) {
      std::size_t a = frontier.front();
      frontier.pop();
      for (std::size_t b : g.a_adjacency()[a]) {
        if (reached_b[b]) continue;
        reached_b[b] = true;
        std::size_t a2 = match_b[b];
        if (a2 != kNone && !reached_a[a2]) {
          reached_a[a2] = true;
          frontier.push(a2);
        }
      }
    }
    std::vector<std::size_t> rows, spare_cols;
    for (std::size_t a = 0; a < n; ++a)
      if (reached_a[a]) rows.push_back(a);
    for (std::size_t b = 0; b < n; ++b)
      if (!reached_b[b]) spare_cols.push_back(b);
    spare_cols.resize(n - rows.size());
    return ZeroBlockWitness{std::move(rows), std::move(spare_cols)};
  }

  // Full term rank: more than one block in the canonical decomposition means
  // the rows of the later blocks meet the columns of the first block in
  // zeros only.
  std::vector<std::size_t> col_of(n), pair_of_col(n);
  for (const Edge& e : mm.witness.pairs()) {
    col_of[e.a] = e.b;
    pair_of_col[e.b] = e.a;
  }
  auto blocks = canonical_blocks(pair_digraph(g, pair_of_col));
  if (blocks.size() == 1) return std::nullopt;
  std::vector<std::size_t> rows, cols;
  for (std::size_t u : blocks.front()) cols.push_back(col_of[u]);
  for (std::size_t c = 1; c < blocks.size(); ++c) {
    for (std::size_t u : blocks[c]) rows.push_back(u);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return ZeroBlockWitness{std::move(rows), std::move(cols)};
}

bool is_fully_indecomposable(const ZeroOneMatrix& x) {
  if (!x.is_square()) throw not_square_error("full indecomposability needs a square matrix");
  BipartiteGraph g = to_graph(x);
  if (maximum_matching(g).rho != x.rows()) return false;
  if (connected_components(g).size() != 1) return false;
  return classify_edges(g).allowed.size() == g.edge_count();
}

bool is_bistable(const BipartiteGraph& g) {
  if (!g.is_balanced() || g.vertex_count() == 0) return false;
  if (connected_components(g).size() != 1) return false;
  return is_fully_indecomposable(from_graph(g));
}

bool is_alpha_plus_stable(const BipartiteGraph& g) {
  if (!g.is_balanced()) {
    throw unbalanced_error("the polynomial alpha-plus decider needs |A| = |B|");
  }
  return has_perfect_matching(g);
}

bool is_alpha_minus_stable(const BipartiteGraph& g, std::size_t max_vertices) {
  auto maximum_sets = oracle::enumerate_maximum_stable_sets(g, max_vertices);
  for (const VertexSet& s : maximum_sets) {
    if (!is_two_dominating(g, s)) return false;
  }
  return true;
}

bool is_alpha_stable(const BipartiteGraph& g) {
  if (!g.is_balanced()) {
    throw unbalanced_error("the polynomial alpha-stability decider needs |A| = |B|");
  }
  if (!has_perfect_matching(g)) return false;
  return classify_edges(g).forced.empty();
}

BlockTriangularForm block_triangular_form(const ZeroOneMatrix& x) {
  if (!x.is_square()) throw not_square_error("block triangular form needs a square matrix");
  const std::size_t n = x.rows();
  BipartiteGraph g = to_graph(x);
  TermRankResult mm = maximum_matching(g);
  if (mm.rho != n) {
    throw no_perfect_matching_error("block triangular form needs a perfect matching");
  }
  std::vector<std::size_t> col_of(n), pair_of_col(n);
  for (const Edge& e : mm.witness.pairs()) {
    col_of[e.a] = e.b;
    pair_of_col[e.b] = e.a;
  }
  auto blocks = canonical_blocks(pair_digraph(g, pair_of_col));
  BlockTriangularForm form;
  for (const auto& block : blocks) {
    form.block_sizes.push_back(block.size());
    std::vector<std::size_t> block_cols;
    for (std::size_t u : block) {
      form.row_perm.push_back(u);
      form.col_perm.push_back(col_of[u]);
      block_cols.push_back(col_of[u]);
    }
    form.blocks.push_back(x.submatrix(block, block_cols));
  }
  return form;
}

std::size_t count_unit_blocks(const BlockTriangularForm& form) {
  return static_cast<std::size_t>(
      std::count(form.block_sizes.begin(), form.block_sizes.end(), std::size_t{1}));
}

std::vector<InducedSubgraph> bistable_components(const BipartiteGraph& g) {
  if (!g.is_balanced()) throw unbalanced_error("bistable components need |A| = |B|");
  if (g.vertex_count() == 0) return {};
  BlockTriangularForm form = block_triangular_form(from_graph(g));
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  std::size_t offset = 0;
  for (std::size_t size : form.block_sizes) {
    std::vector<std::size_t> rows(form.row_perm.begin() + offset,
                                  form.row_perm.begin() + offset + size);
    std::vector<std::size_t> cols(form.col_perm.begin() + offset,
                                  form.col_perm.begin() + offset + size);
    std::sort(cols.begin(), cols.end());
    parts.emplace_back(std::move(rows), std::move(cols));
    offset += size;
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& p, const auto& q) { return p.first.front() < q.first.front(); });
  std::vector<InducedSubgraph> result;
  result.reserve(parts.size());
  for (const auto& [rows, cols] : parts) result.push_back(induced_subgraph(g, rows, cols));
  return result;
}

std::optional<StableSetZeroBlock> stable_set_zero_block(const BipartiteGraph& g,
                                                        const VertexSet& s) {
  if (s.a_members().empty() || s.b_members().empty()) {
    throw std::invalid_argument("the stable set must meet both sides");
  }
  if (!s.a_members().empty() && s.a_members().back() >= g.a_count()) {
    throw std::invalid_argument("vertex set member out of range");
  }
  if (!s.b_members().empty() && s.b_members().back() >= g.b_count()) {
    throw std::invalid_argument("vertex set member out of range");
  }
  if (!is_stable_set(g, s)) return std::nullopt;
  StableSetZeroBlock result;
  result.p = s.a_members().size();
  result.q = s.b_members().size();
  for (std::size_t a : s.a_members()) result.row_perm.push_back(a);
  for (std::size_t a = 0; a < g.a_count(); ++a) {
    if (!s.contains_a(a)) result.row_perm.push_back(a);
  }
  for (std::size_t b = 0; b < g.b_count(); ++b) {
    if (!s.contains_b(b)) result.col_perm.push_back(b);
  }
  for (std::size_t b : s.b_members()) result.col_perm.push_back(b);
  return result;
}

StabilityReport stability_report(const BipartiteGraph& g, std::size_t max_vertices) {
  if (!g.is_balanced()) throw unbalanced_error("stability report needs |A| = |B|");
  StabilityReport report;
  report.alpha = stability_number(g);
  report.is_alpha_plus = is_alpha_plus_stable(g);
  report.is_alpha_minus = is_alpha_minus_stable(g, max_vertices);
  report.is_alpha = is_alpha_stable(g);
  report.is_bistable = is_bistable(g);
  return report;
}

}  // namespace bistable
