#include "bistable/products.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bistable/errors.hpp"

namespace bistable {

ZeroOneMatrix boolean_product(const ZeroOneMatrix& x, const ZeroOneMatrix& y) {
  if (x.cols() != y.rows()) {
    throw dimension_mismatch_error("boolean product needs x.cols() == y.rows(), got " +
                                   std::to_string(x.cols()) + " and " + std::to_string(y.rows()));
  }
  ZeroOneMatrix z(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < y.cols(); ++j) {
      for (std::size_t k = 0; k < x.cols(); ++k) {
        if (x.get(i, k) && y.get(k, j)) {
          z.set(i, j, true);
          break;
        }
      }
    }
  }
  return z;
}

BipartiteGraph join(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (g.b_count() != h.a_count()) {
    throw dimension_mismatch_error("join needs g.b_count() == h.a_count(), got " +
                                   std::to_string(g.b_count()) + " and " +
                                   std::to_string(h.a_count()));
  }
  std::vector<Edge> edges;
  std::vector<bool> reaches(h.b_count());
  for (std::size_t a = 0; a < g.a_count(); ++a) {
    std::fill(reaches.begin(), reaches.end(), false);
    for (std::size_t b : g.a_adjacency()[a]) {
      for (std::size_t c : h.a_adjacency()[b]) reaches[c] = true;
    }
    for (std::size_t c = 0; c < h.b_count(); ++c) {
      if (reaches[c]) edges.push_back(Edge{a, c});
    }
  }
  return BipartiteGraph(g.a_count(), h.b_count(), std::move(edges));
}

ZeroOneMatrix kronecker_product(const ZeroOneMatrix& x, const ZeroOneMatrix& y) {
  ZeroOneMatrix z(x.rows() * y.rows(), x.cols() * y.cols());
  for (std::size_t k = 0; k < x.rows(); ++k) {
    for (std::size_t r = 0; r < x.cols(); ++r) {
      if (!x.get(k, r)) continue;
      for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
          if (y.get(i, j)) z.set(k * y.rows() + i, r * y.cols() + j, true);
        }
      }
    }
  }
  return z;
}

BipartiteGraph graph_kronecker(const BipartiteGraph& g, const BipartiteGraph& h) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * h.edge_count());
  for (const Edge& e : g.edges()) {
    for (const Edge& f : h.edges()) {
      edges.push_back(Edge{e.a * h.a_count() + f.a, e.b * h.b_count() + f.b});
    }
  }
  return BipartiteGraph(g.a_count() * h.a_count(), g.b_count() * h.b_count(), std::move(edges));
}

}  // namespace bistable
