#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bistable/errors.hpp"

// Core value types: square and rectangular (0,1)-matrices, bipartite graphs
// on two labelled vertex rows A and B, vertex sets, and matchings. All types
// are immutable after construction apart from ZeroOneMatrix::set, and all
// free functions are pure. Indices are 0-based throughout the in-memory API;
// the file formats and the CLI translate to 1-based on the way in and out.

namespace bistable {

// Dense row-major bit matrix. Rows and columns are at least 1.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix(std::size_t rows, std::size_t cols);

  // Convenience for literals in tests and fixtures; every entry must be 0 or 1.
  static ZeroOneMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static ZeroOneMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);

  std::size_t one_count() const noexcept;
  std::size_t zero_count() const noexcept { return rows_ * cols_ - one_count(); }

  ZeroOneMatrix transposed() const;

  // Row and column permutations given as arrays of original indices in the
  // new order: result(i, j) = (*this)(row_perm[i], col_perm[j]).
  ZeroOneMatrix permuted(const std::vector<std::size_t>& row_perm,
                         const std::vector<std::size_t>& col_perm) const;

  // Submatrix keeping the listed rows and columns in the given order.
  ZeroOneMatrix submatrix(const std::vector<std::size_t>& keep_rows,
                          const std::vector<std::size_t>& keep_cols) const;

  // Matrix with row i and column j struck out. Needs rows >= 2 and cols >= 2.
  ZeroOneMatrix minor_without(std::size_t i, std::size_t j) const;

  friend bool operator==(const ZeroOneMatrix& x, const ZeroOneMatrix& y) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<bool> bits_;
};

// Edge between A-vertex a and B-vertex b, 0-based.
struct Edge {
  std::size_t a = 0;
  std::size_t b = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Bipartite graph with vertex rows A (size a_count) and B (size b_count).
// Either side may be empty; isolated vertices are legal so connectivity
// questions have honest answers. The edge list is kept sorted and duplicate
// edges are rejected at construction.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t a_count, std::size_t b_count, std::vector<Edge> edges);

  std::size_t a_count() const noexcept { return a_count_; }
  std::size_t b_count() const noexcept { return b_count_; }
  std::size_t vertex_count() const noexcept { return a_count_ + b_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool is_balanced() const noexcept { return a_count_ == b_count_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool has_edge(std::size_t a, std::size_t b) const;

  // Neighbor lists in ascending order, one per vertex of the side.
  const std::vector<std::vector<std::size_t>>& a_adjacency() const noexcept { return a_adj_; }
  const std::vector<std::vector<std::size_t>>& b_adjacency() const noexcept { return b_adj_; }

  friend bool operator==(const BipartiteGraph& g, const BipartiteGraph& h) {
    return g.a_count_ == h.a_count_ && g.b_count_ == h.b_count_ && g.edges_ == h.edges_;
  }

 private:
  std::size_t a_count_ = 0;
  std::size_t b_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> a_adj_;
  std::vector<std::vector<std::size_t>> b_adj_;
};

// Subset of the vertices of a bipartite graph, split by side, sorted, no
// duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::vector<std::size_t> a_members, std::vector<std::size_t> b_members);

  const std::vector<std::size_t>& a_members() const noexcept { return a_members_; }
  const std::vector<std::size_t>& b_members() const noexcept { return b_members_; }
  std::size_t size() const noexcept { return a_members_.size() + b_members_.size(); }
  bool contains_a(std::size_t a) const;
  bool contains_b(std::size_t b) const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<std::size_t> a_members_;
  std::vector<std::size_t> b_members_;
};

// Matching given as a sorted list of edges; no vertex appears twice.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> pairs);

  const std::vector<Edge>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  friend auto operator<=>(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> pairs_;
};

// Reduced adjacency matrix of g: entry (i, j) = 1 iff edge (a_i, b_j).
// Both sides must be nonempty (matrices have at least one row and column).
ZeroOneMatrix from_graph(const BipartiteGraph& g);

// Inverse of from_graph: A indexes rows, B indexes columns.
BipartiteGraph to_graph(const ZeroOneMatrix& x);

// Induced subgraph together with the maps back to the original indices:
// a_map[local] and b_map[local] are original vertex numbers.
struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<std::size_t> a_map;
  std::vector<std::size_t> b_map;
};

// keep_a and keep_b must be sorted, unique and in range.
InducedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 const std::vector<std::size_t>& keep_a,
                                 const std::vector<std::size_t>& keep_b);

// Connected components ordered by their smallest vertex (A-vertices compare
// before B-vertices). Every vertex lands in exactly one component; isolated
// vertices form singleton components. Concatenating the components in the
// returned order and relabelling puts the reduced adjacency matrix in block
// diagonal form.
std::vector<InducedSubgraph> connected_components(const BipartiteGraph& g);

// Vertices adjacent to at least one member of s: neighbors of s's A-members
// land on the B side and vice versa.
VertexSet neighborhood(const BipartiteGraph& g, const VertexSet& s);

// True when no edge of g joins an A-member of s to a B-member of s.
bool is_stable_set(const BipartiteGraph& g, const VertexSet& s);

}  // namespace bistable
