#include "bistable/core.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace bistable {

ZeroOneMatrix::ZeroOneMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, false) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("matrix needs at least one row and one column");
  }
}

ZeroOneMatrix ZeroOneMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> copy;
  copy.reserve(rows.size());
  for (const auto& row : rows) copy.emplace_back(row);
  return from_rows(copy);
}

ZeroOneMatrix ZeroOneMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("matrix needs at least one row and one column");
  }
  ZeroOneMatrix x(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != x.cols_) {
      throw std::invalid_argument("ragged row in matrix literal");
    }
    for (std::size_t j = 0; j < x.cols_; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw std::invalid_argument("matrix entries must be 0 or 1");
      }
      x.bits_[i * x.cols_ + j] = rows[i][j] != 0;
    }
  }
  return x;
}

bool ZeroOneMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return bits_[i * cols_ + j];
}

void ZeroOneMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  bits_[i * cols_ + j] = value;
}

std::size_t ZeroOneMatrix::one_count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

ZeroOneMatrix ZeroOneMatrix::transposed() const {
  ZeroOneMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.bits_[j * rows_ + i] = bits_[i * cols_ + j];
  return t;
}

ZeroOneMatrix ZeroOneMatrix::permuted(const std::vector<std::size_t>& row_perm,
                                      const std::vector<std::size_t>& col_perm) const {
  if (row_perm.size() != rows_ || col_perm.size() != cols_) {
    throw std::invalid_argument("permutation length does not match matrix shape");
  }
  return submatrix(row_perm, col_perm);
}

ZeroOneMatrix ZeroOneMatrix::submatrix(const std::vector<std::size_t>& keep_rows,
                                       const std::vector<std::size_t>& keep_cols) const {
  ZeroOneMatrix s(keep_rows.size(), keep_cols.size());
  for (std::size_t i = 0; i < keep_rows.size(); ++i) {
    for (std::size_t j = 0; j < keep_cols.size(); ++j) {
      s.bits_[i * s.cols_ + j] = get(keep_rows[i], keep_cols[j]);
    }
  }
  return s;
}

ZeroOneMatrix ZeroOneMatrix::minor_without(std::size_t i, std::size_t j) const {
  if (rows_ < 2 || cols_ < 2) throw std::invalid_argument("minor of a single row or column");
  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t r = 0; r < rows_; ++r)
    if (r != i) keep_rows.push_back(r);
  for (std::size_t c = 0; c < cols_; ++c)
    if (c != j) keep_cols.push_back(c);
  return submatrix(keep_rows, keep_cols);
}

BipartiteGraph::BipartiteGraph(std::size_t a_count, std::size_t b_count, std::vector<Edge> edges)
    : a_count_(a_count), b_count_(b_count), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].a >= a_count_ || edges_[k].b >= b_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (k > 0 && edges_[k] == edges_[k - 1]) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  a_adj_.resize(a_count_);
  b_adj_.resize(b_count_);
  for (const Edge& e : edges_) {
    a_adj_[e.a].push_back(e.b);
    b_adj_[e.b].push_back(e.a);
  }
}

bool BipartiteGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

namespace {

std::vector<std::size_t> checked_members(std::vector<std::size_t> members, std::size_t bound,
                                         const char* side) {
  std::sort(members.begin(), members.end());
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (members[k] >= bound) {
      throw std::invalid_argument(std::string("vertex set ") + side + " member out of range");
    }
    if (k > 0 && members[k] == members[k - 1]) {
      throw std::invalid_argument(std::string("duplicate ") + side + " member in vertex set");
    }
  }
  return members;
}

}  // namespace

VertexSet::VertexSet(std::vector<std::size_t> a_members, std::vector<std::size_t> b_members)
    : a_members_(std::move(a_members)), b_members_(std::move(b_members)) {
  a_members_ = checked_members(std::move(a_members_), SIZE_MAX, "A");
  b_members_ = checked_members(std::move(b_members_), SIZE_MAX, "B");
}

bool VertexSet::contains_a(std::size_t a) const {
  return std::binary_search(a_members_.begin(), a_members_.end(), a);
}

bool VertexSet::contains_b(std::size_t b) const {
  return std::binary_search(b_members_.begin(), b_members_.end(), b);
}

Matching::Matching(std::vector<Edge> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    if (pairs_[k].a == pairs_[k - 1].a) throw std::invalid_argument("A-vertex matched twice");
  }
  std::vector<std::size_t> bs;
  bs.reserve(pairs_.size());
  for (const Edge& e : pairs_) bs.push_back(e.b);
  std::sort(bs.begin(), bs.end());
  for (std::size_t k = 1; k < bs.size(); ++k) {
    if (bs[k] == bs[k - 1]) throw std::invalid_argument("B-vertex matched twice");
  }
}

ZeroOneMatrix from_graph(const BipartiteGraph& g) {
  if (g.a_count() == 0 || g.b_count() == 0) {
    throw std::invalid_argument("graph with an empty side has no reduced adjacency matrix");
  }
  ZeroOneMatrix x(g.a_count(), g.b_count());
  for (const Edge& e : g.edges()) x.set(e.a, e.b, true);
  return x;
}

BipartiteGraph to_graph(const ZeroOneMatrix& x) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x.get(i, j)) edges.push_back(Edge{i, j});
  return BipartiteGraph(x.rows(), x.cols(), std::move(edges));
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, const std::vector<std::size_t>& keep_a,
                                 const std::vector<std::size_t>& keep_b) {
  std::vector<std::size_t> a_local(g.a_count(), SIZE_MAX), b_local(g.b_count(), SIZE_MAX);
  for (std::size_t k = 0; k < keep_a.size(); ++k) {
    if (keep_a[k] >= g.a_count() || (k > 0 && keep_a[k] <= keep_a[k - 1])) {
      throw std::invalid_argument("keep_a must be sorted, unique and in range");
    }
    a_local[keep_a[k]] = k;
  }
  for (std::size_t k = 0; k < keep_b.size(); ++k) {
    if (keep_b[k] >= g.b_count() || (k > 0 && keep_b[k] <= keep_b[k - 1])) {
      throw std::invalid_argument("keep_b must be sorted, unique and in range");
    }
    b_local[keep_b[k]] = k;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (a_local[e.a] != SIZE_MAX && b_local[e.b] != SIZE_MAX) {
      edges.push_back(Edge{a_local[e.a], b_local[e.b]});
    }
  }
  return InducedSubgraph{BipartiteGraph(keep_a.size(), keep_b.size(), std::move(edges)), keep_a,
                         keep_b};
}

std::vector<InducedSubgraph> connected_components(const BipartiteGraph& g) {
  // Vertices 0..a_count-1 are the A side, then the B side. BFS in ascending
  // vertex order makes the component order canonical: sorted by smallest
  // member, A-vertices first.
  const std::size_t na = g.a_count(), total = na + g.b_count();
  std::vector<std::size_t> component(total, SIZE_MAX);
  std::size_t next_component = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (component[start] != SIZE_MAX) continue;
    component[start] = next_component;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      std::size_t v = frontier.front();
      frontier.pop();
      const auto& neighbors = v < na ? g.a_adjacency()[v] : g.b_adjacency()[v - na];
      for (std::size_t w : neighbors) {
        std::size_t wv = v < na ? na + w : w;
        if (component[wv] == SIZE_MAX) {
          component[wv] = next_component;
          frontier.push(wv);
        }
      }
    }
    ++next_component;
  }
  std::vector<std::vector<std::size_t>> keep_a(next_component), keep_b(next_component);
  for (std::size_t v = 0; v < total; ++v) {
    if (v < na) {
      keep_a[component[v]].push_back(v);
    } else {
      keep_b[component[v]].push_back(v - na);
    }
  }
  std::vector<InducedSubgraph> result;
  result.reserve(next_component);
  for (std::size_t c = 0; c < next_component; ++c) {
    result.push_back(induced_subgraph(g, keep_a[c], keep_b[c]));
  }
  return result;
}

VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& s) {
  std::vector<bool> in_a(g.a_count(), false), in_b(g.b_count(), false);
  for (std::size_t a : s.a_members()) {
    if (a >= g.a_count()) throw std::invalid_argument("vertex set member out of range");
    for (std::size_t b : g.a_adjacency()[a]) in_b[b] = true;
  }
  for (std::size_t b : s.b_members()) {
    if (b >= g.b_count()) throw std::invalid_argument("vertex set member out of range");
    for (std::size_t a : g.b_adjacency()[b]) in_a[a] = true;
  }
  std::vector<std::size_t> a_members, b_members;
  for (std::size_t a = 0; a < g.a_count(); ++a)
    if (in_a[a]) a_members.push_back(a);
  for (std::size_t b = 0; b < g.b_count(); ++b)
    if (in_b[b]) b_members.push_back(b);
  return VertexSet(std::move(a_members), std::move(b_members));
}

bool is_stable_set(const BipartiteGraph& g, const VertexSet& s) {
  for (std::size_t a : s.a_members()) {
    if (a >= g.a_count()) throw std::invalid_argument("vertex set member out of range");
    for (std::size_t b : g.a_adjacency()[a]) {
      if (s.contains_b(b)) return false;
    }
  }
  for (std::size_t b : s.b_members()) {
    if (b >= g.b_count()) throw std::invalid_argument("vertex set member out of range");
  }
  return true;
}

}  // namespace bistable
