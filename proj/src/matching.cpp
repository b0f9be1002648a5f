#include "bistable/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

#include "bistable/detail/scc.hpp"
#include "bistable/errors.hpp"

namespace bistable {

namespace {

constexpr std::size_t kFree = SIZE_MAX;

struct HopcroftKarp {
  const std::vector<std::vector<std::size_t>>& adj;
  std::size_t na, nb;
  std::vector<std::size_t> match_a, match_b, layer;

  explicit HopcroftKarp(const BipartiteGraph& g)
      : adj(g.a_adjacency()),
        na(g.a_count()),
        nb(g.b_count()),
        match_a(na, kFree),
        match_b(nb, kFree),
        layer(na, 0) {}

  bool bfs() {
    std::queue<std::size_t> frontier;
    bool reached_free_b = false;
    for (std::size_t a = 0; a < na; ++a) {
      if (match_a[a] == kFree) {
        layer[a] = 0;
        frontier.push(a);
      } else {
        layer[a] = kFree;
      }
    }
    while (!frontier.empty()) {
      std::size_t a = frontier.front();
      frontier.pop();
      for (std::size_t b : adj[a]) {
        std::size_t a2 = match_b[b];
        if (a2 == kFree) {
          reached_free_b = true;
        } else if (layer[a2] == kFree) {
          layer[a2] = layer[a] + 1;
          frontier.push(a2);
        }
      }
    }
    return reached_free_b;
  }

  bool dfs(std::size_t a) {
    for (std::size_t b : adj[a]) {
      std::size_t a2 = match_b[b];
      if (a2 == kFree || (layer[a2] == layer[a] + 1 && dfs(a2))) {
        match_a[a] = b;
        match_b[b] = a;
        return true;
      }
    }
    layer[a] = kFree;
    return false;
  }

  std::size_t run() {
    std::size_t size = 0;
    while (bfs()) {
      for (std::size_t a = 0; a < na; ++a) {
        if (match_a[a] == kFree && dfs(a)) ++size;
      }
    }
    return size;
  }
};

}  // namespace

TermRankResult maximum_matching(const BipartiteGraph& g) {
  HopcroftKarp hk(g);
  std::size_t rho = hk.run();
  std::vector<Edge> pairs;
  pairs.reserve(rho);
  for (std::size_t a = 0; a < g.a_count(); ++a) {
    if (hk.match_a[a] != kFree) pairs.push_back(Edge{a, hk.match_a[a]});
  }
  return TermRankResult{rho, Matching(std::move(pairs))};
}

bool has_perfect_matching(const BipartiteGraph& g) {
  if (!g.is_balanced()) return false;
  return maximum_matching(g).rho == g.a_count();
}

EdgeClassification classify_edges(const BipartiteGraph& g) {
  if (!g.is_balanced()) {
    throw no_perfect_matching_error("edge classification needs |A| = |B|");
  }
  const std::size_t n = g.a_count();
  TermRankResult mm = maximum_matching(g);
  if (mm.rho != n) {
    throw no_perfect_matching_error("edge classification needs a perfect matching");
  }

  // Pair u = (a_u, b_{col_of[u]}). Arc u -> v for every non-matching edge
  // (a_u, b_{col_of[v]}): following it swaps the matching along a potential
  // alternating cycle, so an edge is in some perfect matching exactly when
  // its two pairs lie on a common cycle, i.e. in one strongly connected
  // component.
  std::vector<std::size_t> col_of(n), pair_of_col(n);
  for (const Edge& e : mm.witness.pairs()) {
    col_of[e.a] = e.b;
    pair_of_col[e.b] = e.a;
  }
  std::vector<std::vector<std::size_t>> arcs(n);
  for (const Edge& e : g.edges()) {
    std::size_t u = e.a, v = pair_of_col[e.b];
    if (u != v) arcs[u].push_back(v);
  }
  auto components = detail::strongly_connected_components(arcs);
  std::vector<std::size_t> component_of(n), component_size(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    component_size[c] = components[c].size();
    for (std::size_t v : components[c]) component_of[v] = c;
  }

  EdgeClassification result;
  result.witness_matching = mm.witness;
  for (const Edge& e : g.edges()) {
    std::size_t u = e.a, v = pair_of_col[e.b];
    bool matched = u == v;
    if (matched || component_of[u] == component_of[v]) result.allowed.push_back(e);
    if (matched && component_size[component_of[u]] == 1) result.forced.push_back(e);
  }
  return result;
}

bool has_total_support(const ZeroOneMatrix& x) {
  if (!x.is_square()) throw not_square_error("total support is defined for square matrices");
  BipartiteGraph g = to_graph(x);
  if (maximum_matching(g).rho != x.rows()) return false;
  return classify_edges(g).allowed.size() == g.edge_count();
}

}  // namespace bistable
