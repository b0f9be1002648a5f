#include "bistable/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>

#include "bistable/core.hpp"
#include "bistable/errors.hpp"
#include "bistable/generators.hpp"
#include "bistable/matching.hpp"
#include "bistable/oracle.hpp"
#include "bistable/permanent.hpp"
#include "bistable/products.hpp"
#include "bistable/structure.hpp"
#include "bistable/io.hpp"

namespace bistable {
namespace verify {

namespace {

std::uint64_t fnv1a(const char* text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (const char* p = text; *p; ++p) {
    hash ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*p));
    hash *= 1099511628211ull;
  }
  return hash;
}

double pick_probability(gen::SplitMix64& rng) {
  static const double levels[] = {0.15, 0.3, 0.5, 0.7, 0.85};
  return levels[rng.below(5)];
}

std::string describe(const ZeroOneMatrix& x) {
  std::ostringstream out;
  out << x.rows() << "x" << x.cols() << " [";
  for (std::size_t i = 0; i < x.rows(); ++i) {
    if (i > 0) out << "; ";
    for (std::size_t j = 0; j < x.cols(); ++j) out << (x.get(i, j) ? '1' : '0');
  }
  out << "]";
  return out.str();
}

std::string describe(const BipartiteGraph& g) {
  std::ostringstream out;
  out << g.a_count() << "+" << g.b_count() << " {";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k > 0) out << " ";
    out << (g.edges()[k].a + 1) << "-" << (g.edges()[k].b + 1);
  }
  out << "}";
  return out.str();
}

BipartiteGraph random_rectangular(std::size_t na, std::size_t nb, double p,
                                  gen::SplitMix64& rng) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < na; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      if (rng.chance(p)) edges.push_back(Edge{a, b});
    }
  }
  return BipartiteGraph(na, nb, std::move(edges));
}

BipartiteGraph without_edge(const BipartiteGraph& g, const Edge& cut) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const Edge& e : g.edges()) {
    if (!(e == cut)) edges.push_back(e);
  }
  return BipartiteGraph(g.a_count(), g.b_count(), std::move(edges));
}

BipartiteGraph without_pair(const BipartiteGraph& g, std::size_t a, std::size_t b) {
  std::vector<std::size_t> keep_a, keep_b;
  for (std::size_t i = 0; i < g.a_count(); ++i)
    if (i != a) keep_a.push_back(i);
  for (std::size_t j = 0; j < g.b_count(); ++j)
    if (j != b) keep_b.push_back(j);
  return induced_subgraph(g, keep_a, keep_b).graph;
}

// Every diagonal of a small square matrix in one sweep: which 1-entries lie
// on an all-ones diagonal, which 0-entries on an otherwise all-ones
// diagonal, and how many all-ones diagonals pass through each entry.
struct DiagonalSurvey {
  std::size_t positive_diagonals = 0;
  std::vector<std::vector<std::size_t>> through;  // all-ones diagonals through entry
  std::vector<std::vector<bool>> zero_covered;    // 0-entry on an otherwise all-ones diagonal

  explicit DiagonalSurvey(const ZeroOneMatrix& x)
      : through(x.rows(), std::vector<std::size_t>(x.cols(), 0)),
        zero_covered(x.rows(), std::vector<bool>(x.cols(), false)) {
    const std::size_t n = x.rows();
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    do {
      std::size_t misses = 0, miss_row = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!x.get(i, sigma[i])) {
          if (++misses > 1) break;
          miss_row = i;
        }
      }
      if (misses == 0) {
        ++positive_diagonals;
        for (std::size_t i = 0; i < n; ++i) ++through[i][sigma[i]];
      } else if (misses == 1) {
        zero_covered[miss_row][sigma[miss_row]] = true;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
};

class Harness {
 public:
  explicit Harness(const Options& options) : options_(options) {}

  // Runs the body, which returns the first counterexample or nothing.
  void check(const std::string& name,
             const std::function<std::optional<std::string>()>& body) {
    CheckResult result;
    result.name = name;
    try {
      auto failure = body();
      result.passed = !failure.has_value();
      result.detail = failure.value_or("");
    } catch (const std::exception& e) {
      result.passed = false;
      result.detail = std::string("unexpected exception: ") + e.what();
    }
    results_.push_back(std::move(result));
  }

  gen::SplitMix64 rng_for(const std::string& name) const {
    return gen::SplitMix64(options_.seed ^ fnv1a(name.c_str()));
  }

  const Options& options() const { return options_; }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  Options options_;
  std::vector<CheckResult> results_;
};

// Square instance pool: every matrix up to the exhaustive bound, then seeded
// random instances of the three generator families for the larger orders.
std::vector<ZeroOneMatrix> square_pool(const Options& options) {
  std::vector<ZeroOneMatrix> pool;
  const std::size_t max_n = std::max<std::size_t>(1, options.max_n);
  const std::size_t exhaustive = std::min<std::size_t>(max_n, 4);
  for (std::size_t n = 1; n <= exhaustive; ++n) {
    const std::size_t cells = n * n;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << cells); ++word) {
      ZeroOneMatrix x(n, n);
      for (std::size_t c = 0; c < cells; ++c) {
        if (word & (std::uint64_t{1} << c)) x.set(c / n, c % n, true);
      }
      pool.push_back(std::move(x));
    }
  }
  if (max_n > exhaustive) {
    gen::SplitMix64 rng(options.seed ^ fnv1a("square_pool"));
    for (std::size_t t = 0; t < options.count; ++t) {
      std::size_t n = exhaustive + 1 + rng.below(max_n - exhaustive);
      double p = pick_probability(rng);
      std::uint64_t sub_seed = rng.next();
      switch (t % 3) {
        case 0:
          pool.push_back(from_graph(gen::random_balanced(n, p, sub_seed)));
          break;
        case 1:
          pool.push_back(from_graph(gen::random_with_pm(n, p, sub_seed)));
          break;
        default:
          pool.push_back(gen::random_fully_indecomposable(n, p, sub_seed));
          break;
      }
    }
  }
  return pool;
}

std::vector<BipartiteGraph> graph_pool(const Options& options) {
  std::vector<BipartiteGraph> pool;
  gen::SplitMix64 rng(options.seed ^ fnv1a("graph_pool"));
  const std::size_t max_n = std::max<std::size_t>(1, options.max_n);
  for (std::size_t t = 0; t < options.count; ++t) {
    std::size_t na = 1 + rng.below(max_n);
    std::size_t nb = 1 + rng.below(max_n);
    pool.push_back(random_rectangular(na, nb, pick_probability(rng), rng));
  }
  return pool;
}

bool oracle_sized(const BipartiteGraph& g) { return g.vertex_count() <= 16; }

}  // namespace

std::vector<CheckResult> run_laws(const Options& options) {
  Harness h(options);
  const std::size_t count = std::max<std::size_t>(1, options.count);
  const std::size_t max_n = std::max<std::size_t>(2, options.max_n);

  h.check("boolean_product_matches_integer_zero_pattern", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("boolean_product_matches_integer_zero_pattern");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n), k = 1 + rng.below(max_n), m = 1 + rng.below(max_n);
      auto g = random_rectangular(n, k, pick_probability(rng), rng);
      auto hg = random_rectangular(k, m, pick_probability(rng), rng);
      ZeroOneMatrix x = from_graph(g), y = from_graph(hg);
      ZeroOneMatrix z = boolean_product(x, y);
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
          std::size_t integer_entry = 0;
          for (std::size_t kk = 0; kk < x.cols(); ++kk) {
            integer_entry += (x.get(i, kk) && y.get(kk, j)) ? 1 : 0;
          }
          if ((integer_entry > 0) != z.get(i, j)) {
            return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") disagrees on " + describe(x) + " * " + describe(y);
          }
        }
      }
    }
    return std::nullopt;
  });

  h.check("join_commutes_with_matrix_product", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("join_commutes_with_matrix_product");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n), k = 1 + rng.below(max_n), m = 1 + rng.below(max_n);
      auto g = random_rectangular(n, k, pick_probability(rng), rng);
      auto hg = random_rectangular(k, m, pick_probability(rng), rng);
      if (from_graph(join(g, hg)) != boolean_product(from_graph(g), from_graph(hg))) {
        return "join disagrees with product on " + describe(g) + " and " + describe(hg);
      }
    }
    return std::nullopt;
  });

  h.check("kronecker_commutes_with_matrix_form", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("kronecker_commutes_with_matrix_form");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(3), k = 1 + rng.below(3);
      std::size_t m = 1 + rng.below(3), l = 1 + rng.below(3);
      auto g = random_rectangular(n, k, pick_probability(rng), rng);
      auto hg = random_rectangular(m, l, pick_probability(rng), rng);
      if (from_graph(graph_kronecker(g, hg)) !=
          kronecker_product(from_graph(g), from_graph(hg))) {
        return "kronecker disagrees with matrix form on " + describe(g) + " and " + describe(hg);
      }
    }
    return std::nullopt;
  });

  h.check("identity_is_boolean_unit", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("identity_is_boolean_unit");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n);
      ZeroOneMatrix x = from_graph(gen::random_balanced(n, pick_probability(rng), rng.next()));
      ZeroOneMatrix id = gen::identity_matrix(n);
      if (boolean_product(x, id) != x) return "x * I != x for " + describe(x);
      if (boolean_product(id, x) != x) return "I * x != x for " + describe(x);
    }
    return std::nullopt;
  });

  h.check("disjoint_edges_join_identity", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("disjoint_edges_join_identity");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t na = 1 + rng.below(max_n), nb = 1 + rng.below(max_n);
      auto g = random_rectangular(na, nb, pick_probability(rng), rng);
      if (join(g, gen::nk2(nb)) != g) return "g * nK2 != g for " + describe(g);
      if (join(gen::nk2(na), g) != g) return "nK2 * g != g for " + describe(g);
    }
    return std::nullopt;
  });

  h.check("product_of_fully_indecomposable_is_fully_indecomposable",
          [&]() -> std::optional<std::string> {
            auto rng = h.rng_for("product_of_fully_indecomposable_is_fully_indecomposable");
            for (std::size_t t = 0; t < count; ++t) {
              std::size_t n = 1 + rng.below(max_n);
              auto x = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
              auto y = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
              if (!is_fully_indecomposable(boolean_product(x, y))) {
                return "product not fully indecomposable for " + describe(x) + " * " + describe(y);
              }
            }
            return std::nullopt;
          });

  h.check("matching_times_fully_indecomposable_keeps_matching",
          [&]() -> std::optional<std::string> {
            auto rng = h.rng_for("matching_times_fully_indecomposable_keeps_matching");
            for (std::size_t t = 0; t < count; ++t) {
              std::size_t n = 1 + rng.below(max_n);
              auto x = from_graph(gen::random_with_pm(n, pick_probability(rng), rng.next()));
              auto y = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
              ZeroOneMatrix z = boolean_product(x, y);
              if (maximum_matching(to_graph(z)).rho != n) {
                return "product lost its perfect matching for " + describe(x) + " * " +
                       describe(y);
              }
            }
            return std::nullopt;
          });

  h.check("product_with_transpose_fully_indecomposable", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("product_with_transpose_fully_indecomposable");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n);
      auto x = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
      if (!is_fully_indecomposable(boolean_product(x, x.transposed()))) {
        return "x * x^T not fully indecomposable for " + describe(x);
      }
      if (!is_fully_indecomposable(boolean_product(x.transposed(), x))) {
        return "x^T * x not fully indecomposable for " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("kronecker_of_fully_indecomposable_is_fully_indecomposable",
          [&]() -> std::optional<std::string> {
            auto rng = h.rng_for("kronecker_of_fully_indecomposable_is_fully_indecomposable");
            for (std::size_t t = 0; t < count; ++t) {
              std::size_t n = 1 + rng.below(std::min<std::size_t>(max_n, 6));
              std::size_t m = 1 + rng.below(std::min<std::size_t>(max_n, 6));
              auto x = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
              auto y = gen::random_fully_indecomposable(m, pick_probability(rng), rng.next());
              if (!is_fully_indecomposable(kronecker_product(x, y))) {
                return "kronecker not fully indecomposable for " + describe(x) + " and " +
                       describe(y);
              }
            }
            return std::nullopt;
          });

  h.check("kronecker_term_rank_lower_bound", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("kronecker_term_rank_lower_bound");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(std::min<std::size_t>(max_n, 5));
      std::size_t m = 1 + rng.below(std::min<std::size_t>(max_n, 5));
      auto g = gen::random_balanced(n, pick_probability(rng), rng.next());
      auto hg = gen::random_balanced(m, pick_probability(rng), rng.next());
      ZeroOneMatrix x = from_graph(g), y = from_graph(hg);
      std::size_t rx = maximum_matching(g).rho, ry = maximum_matching(hg).rho;
      std::size_t rk = maximum_matching(to_graph(kronecker_product(x, y))).rho;
      if (rk < rx * ry) {
        return "term rank " + std::to_string(rk) + " below bound " + std::to_string(rx * ry) +
               " for " + describe(x) + " and " + describe(y);
      }
      auto gp = gen::random_with_pm(n, pick_probability(rng), rng.next());
      auto hp = gen::random_with_pm(m, pick_probability(rng), rng.next());
      std::size_t full = maximum_matching(to_graph(kronecker_product(from_graph(gp),
                                                                     from_graph(hp))))
                             .rho;
      if (full != n * m) {
        return "full term ranks did not multiply: got " + std::to_string(full) + " for " +
               describe(from_graph(gp)) + " and " + describe(from_graph(hp));
      }
    }
    return std::nullopt;
  });

  h.check("join_preserves_addition_stability", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("join_preserves_addition_stability");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n);
      auto g = gen::random_with_pm(n, pick_probability(rng), rng.next());
      auto hg = gen::random_with_pm(n, pick_probability(rng), rng.next());
      if (!is_alpha_plus_stable(join(g, hg))) {
        return "join lost addition stability for " + describe(g) + " * " + describe(hg);
      }
    }
    return std::nullopt;
  });

  h.check("join_with_bistable_gives_bistable", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("join_with_bistable_gives_bistable");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(max_n);
      auto g = gen::random_with_pm(n, pick_probability(rng), rng.next());
      auto hb = to_graph(gen::random_fully_indecomposable(n, pick_probability(rng), rng.next()));
      if (!is_bistable(join(g, hb))) {
        return "join not bistable for addition-stable " + describe(g) + " and bistable " +
               describe(hb);
      }
      auto gb = to_graph(gen::random_fully_indecomposable(n, pick_probability(rng), rng.next()));
      if (!is_bistable(join(gb, hb))) {
        return "join of bistable pair not bistable for " + describe(gb) + " and " + describe(hb);
      }
    }
    return std::nullopt;
  });

  h.check("kronecker_preserves_addition_stability", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("kronecker_preserves_addition_stability");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 1 + rng.below(std::min<std::size_t>(max_n, 5));
      std::size_t m = 1 + rng.below(std::min<std::size_t>(max_n, 5));
      auto g = gen::random_with_pm(n, pick_probability(rng), rng.next());
      auto hg = gen::random_with_pm(m, pick_probability(rng), rng.next());
      if (!is_alpha_plus_stable(graph_kronecker(g, hg))) {
        return "kronecker lost addition stability for " + describe(g) + " and " + describe(hg);
      }
    }
    return std::nullopt;
  });

  h.check("kronecker_of_edit_stable_and_addition_stable_is_edit_stable",
          [&]() -> std::optional<std::string> {
            auto rng = h.rng_for("kronecker_of_edit_stable_and_addition_stable_is_edit_stable");
            for (std::size_t t = 0; t < count; ++t) {
              std::size_t n = 2 + rng.below(std::min<std::size_t>(max_n, 5) - 1);
              std::size_t m = 1 + rng.below(std::min<std::size_t>(max_n, 5));
              auto g = to_graph(gen::random_fully_indecomposable(n, pick_probability(rng),
                                                                 rng.next()));
              auto hg = gen::random_with_pm(m, pick_probability(rng), rng.next());
              BipartiteGraph k = graph_kronecker(g, hg);
              if (!is_alpha_stable(k)) {
                return "kronecker lost edit stability for " + describe(g) + " and " +
                       describe(hg);
              }
              if (oracle_sized(k) &&
                  (!oracle::alpha_plus_bruteforce(k) || !oracle::alpha_minus_bruteforce(k))) {
                return "bruteforce disputes edit stability for " + describe(g) + " and " +
                       describe(hg);
              }
            }
            return std::nullopt;
          });

  h.check("kronecker_of_edit_stable_pair_is_edit_stable", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("kronecker_of_edit_stable_pair_is_edit_stable");
    for (std::size_t t = 0; t < count; ++t) {
      std::size_t n = 2 + rng.below(std::min<std::size_t>(max_n, 4) - 1);
      std::size_t m = 2 + rng.below(std::min<std::size_t>(max_n, 4) - 1);
      auto g = to_graph(gen::random_fully_indecomposable(n, pick_probability(rng), rng.next()));
      auto hg = to_graph(gen::random_fully_indecomposable(m, pick_probability(rng), rng.next()));
      if (!is_alpha_stable(graph_kronecker(g, hg))) {
        return "kronecker of edit-stable pair not edit-stable for " + describe(g) + " and " +
               describe(hg);
      }
    }
    return std::nullopt;
  });

  if (options.inject_failure) {
    h.check("deliberate_failure_selftest", [&]() -> std::optional<std::string> {
      return "injected failure: this check fails by design";
    });
  }

  return h.take();
}

std::vector<CheckResult> run_oracle(const Options& options) {
  Harness h(options);
  const std::vector<ZeroOneMatrix> squares = square_pool(options);
  const std::vector<BipartiteGraph> rectangles = graph_pool(options);

  h.check("term_rank_matches_bruteforce", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (g.a_count() > 8) continue;
      if (maximum_matching(g).rho != oracle::bruteforce_term_rank(g)) {
        return "term rank mismatch on " + describe(x);
      }
    }
    for (const auto& g : rectangles) {
      if (std::max(g.a_count(), g.b_count()) > 8) continue;
      if (maximum_matching(g).rho != oracle::bruteforce_term_rank(g)) {
        return "term rank mismatch on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("stability_number_matches_bruteforce", [&]() -> std::optional<std::string> {
    for (const auto& g : rectangles) {
      if (!oracle_sized(g)) continue;
      if (stability_number(g) != oracle::bruteforce_stability_number(g)) {
        return "stability number mismatch on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("koenig_set_is_maximum_stable", [&]() -> std::optional<std::string> {
    for (const auto& g : rectangles) {
      VertexSet s = koenig_maximum_stable_set(g);
      if (!is_stable_set(g, s)) return "koenig set not stable on " + describe(g);
      if (s.size() != stability_number(g)) return "koenig set not maximum on " + describe(g);
    }
    return std::nullopt;
  });

  h.check("matching_permanent_equivalence_chain", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      bool full_rank = maximum_matching(g).rho == x.rows();
      bool pm = has_perfect_matching(g);
      if (full_rank != pm) return "term rank and matching disagree on " + describe(x);
      if (x.rows() <= 20 && pm != (permanent(x).value > 0)) {
        return "matching and permanent disagree on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("permanent_matches_expansion", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (x.rows() > 8) continue;
      if (permanent(x).value != oracle::naive_permanent(x)) {
        return "permanent mismatch on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("permanent_permutation_invariant", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("permanent_permutation_invariant");
    for (const auto& x : squares) {
      if (x.rows() > 10) continue;
      // One random relabelling per instance, seeded once for the suite.
      std::vector<std::size_t> rows(x.rows()), cols(x.rows());
      std::iota(rows.begin(), rows.end(), std::size_t{0});
      std::iota(cols.begin(), cols.end(), std::size_t{0});
      for (std::size_t i = x.rows(); i-- > 1;) {
        std::swap(rows[i], rows[rng.below(i + 1)]);
        std::swap(cols[i], cols[rng.below(i + 1)]);
      }
      if (permanent(x).value != permanent(x.permuted(rows, cols)).value) {
        return "permanent changed under relabelling on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("decomposability_witness_agrees_with_search", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      auto fast = is_partly_decomposable(x);
      if (x.rows() <= 12) {
        auto brute = oracle::zero_submatrix_search(x);
        if (fast.has_value() != brute.has_value()) {
          return "witness existence mismatch on " + describe(x);
        }
      }
      if (fast && x.rows() >= 2) {
        if (fast->rows.empty() || fast->cols.empty() ||
            fast->rows.size() + fast->cols.size() != x.rows()) {
          return "malformed witness on " + describe(x);
        }
        for (std::size_t i : fast->rows) {
          for (std::size_t j : fast->cols) {
            if (x.get(i, j)) return "witness block not zero on " + describe(x);
          }
        }
      }
    }
    return std::nullopt;
  });

  h.check("full_indecomposability_complements_witness", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (is_fully_indecomposable(x) != !is_partly_decomposable(x).has_value()) {
        return "deciders disagree on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("full_indecomposability_matches_minor_positivity", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (x.rows() < 2) continue;
      if (is_fully_indecomposable(x) != all_minor_permanents_positive(x)) {
        return "minor positivity disagrees on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("full_indecomposability_matches_diagonal_test", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (x.rows() < 2 || x.rows() > 6) continue;
      DiagonalSurvey survey(x);
      bool every_zero_covered = true, every_one_covered = true;
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
          if (x.get(i, j)) {
            if (survey.through[i][j] == 0) every_one_covered = false;
          } else if (!survey.zero_covered[i][j]) {
            every_zero_covered = false;
          }
        }
      }
      bool diagonal_test = every_zero_covered && every_one_covered;
      if (is_fully_indecomposable(x) != diagonal_test) {
        return "diagonal test disagrees on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("fully_indecomposable_zero_bound", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (x.rows() < 2) continue;
      if (is_fully_indecomposable(x) && x.zero_count() > x.rows() * (x.rows() - 2)) {
        return "zero bound exceeded on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("total_support_matches_component_bistability", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      bool all_bistable = true;
      for (const auto& component : connected_components(g)) {
        if (!is_bistable(component.graph)) {
          all_bistable = false;
          break;
        }
      }
      if (has_total_support(x) != all_bistable) {
        return "total support vs components mismatch on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("total_support_connectivity_equivalence", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (!has_total_support(x)) continue;
      bool connected = connected_components(to_graph(x)).size() == 1;
      if (connected != is_fully_indecomposable(x)) {
        return "connectivity equivalence broken on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("edge_classes_match_enumeration", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!has_perfect_matching(g) || g.a_count() > 7) continue;
      auto matchings = oracle::enumerate_perfect_matchings(g);
      std::vector<Edge> in_some, in_all;
      for (const Edge& e : g.edges()) {
        std::size_t uses = 0;
        for (const auto& m : matchings) {
          if (std::binary_search(m.pairs().begin(), m.pairs().end(), e)) ++uses;
        }
        if (uses > 0) in_some.push_back(e);
        if (uses == matchings.size()) in_all.push_back(e);
      }
      EdgeClassification classes = classify_edges(g);
      if (classes.allowed != in_some) return "allowed set mismatch on " + describe(x);
      if (classes.forced != in_all) return "forced set mismatch on " + describe(x);
      if (std::find(matchings.begin(), matchings.end(), classes.witness_matching) ==
          matchings.end()) {
        return "witness matching not a perfect matching on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("edge_classes_match_deletion_probes", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!has_perfect_matching(g) || g.a_count() == 0) continue;
      EdgeClassification classes = classify_edges(g);
      for (const Edge& e : g.edges()) {
        bool allowed = std::binary_search(classes.allowed.begin(), classes.allowed.end(), e);
        bool forced = std::binary_search(classes.forced.begin(), classes.forced.end(), e);
        bool pm_without_pair = has_perfect_matching(without_pair(g, e.a, e.b));
        if (allowed != pm_without_pair) {
          return "allowed probe mismatch on " + describe(x);
        }
        if (forced != !has_perfect_matching(without_edge(g, e))) {
          return "forced probe mismatch on " + describe(x);
        }
      }
    }
    return std::nullopt;
  });

  h.check("decomposition_reconstructs_input", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (!has_perfect_matching(to_graph(x))) continue;
      BlockTriangularForm form = block_triangular_form(x);
      ZeroOneMatrix permuted = x.permuted(form.row_perm, form.col_perm);
      // The permuted matrix must carry the blocks on its diagonal and
      // nothing below them.
      std::size_t offset = 0;
      for (std::size_t b = 0; b < form.block_sizes.size(); ++b) {
        std::size_t size = form.block_sizes[b];
        for (std::size_t i = 0; i < size; ++i) {
          for (std::size_t j = 0; j < size; ++j) {
            if (permuted.get(offset + i, offset + j) != form.blocks[b].get(i, j)) {
              return "diagonal block mismatch on " + describe(x);
            }
          }
        }
        for (std::size_t i = offset + size; i < x.rows(); ++i) {
          for (std::size_t j = offset; j < offset + size; ++j) {
            if (permuted.get(i, j)) return "nonzero below the diagonal on " + describe(x);
          }
        }
        offset += size;
      }
      // And the permutations must be genuine relabellings of the input.
      std::vector<std::size_t> row_inverse(x.rows()), col_inverse(x.rows());
      for (std::size_t i = 0; i < x.rows(); ++i) {
        row_inverse[form.row_perm[i]] = i;
        col_inverse[form.col_perm[i]] = i;
      }
      if (permuted.permuted(row_inverse, col_inverse) != x) {
        return "permutation does not invert on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("decomposition_blocks_fully_indecomposable", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (!has_perfect_matching(to_graph(x))) continue;
      for (const auto& block : block_triangular_form(x).blocks) {
        if (!is_fully_indecomposable(block)) {
          return "reducible block on " + describe(x);
        }
      }
    }
    return std::nullopt;
  });

  h.check("single_block_iff_fully_indecomposable", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (!has_perfect_matching(to_graph(x))) continue;
      bool single = block_triangular_form(x).block_sizes.size() == 1;
      if (single != is_fully_indecomposable(x)) {
        return "block count disagrees with decomposability on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("unit_blocks_count_forced_edges", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!has_perfect_matching(g)) continue;
      if (count_unit_blocks(block_triangular_form(x)) != classify_edges(g).forced.size()) {
        return "unit block count mismatch on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("edit_stability_three_routes_agree", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (x.rows() > 6) continue;
      BipartiteGraph g = to_graph(x);
      bool fast = is_alpha_stable(g);
      bool via_blocks = false;
      if (has_perfect_matching(g)) {
        auto sizes = block_triangular_form(x).block_sizes;
        via_blocks = *std::min_element(sizes.begin(), sizes.end()) >= 2;
      }
      DiagonalSurvey survey(x);
      bool via_diagonals = survey.positive_diagonals > 0;
      if (via_diagonals) {
        for (std::size_t i = 0; i < x.rows() && via_diagonals; ++i) {
          for (std::size_t j = 0; j < x.cols(); ++j) {
            if (x.get(i, j) && survey.through[i][j] == survey.positive_diagonals) {
              via_diagonals = false;
              break;
            }
          }
        }
      }
      if (fast != via_blocks || fast != via_diagonals) {
        return "edit stability routes disagree on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("addition_stability_matches_bruteforce", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!oracle_sized(g)) continue;
      if (is_alpha_plus_stable(g) != oracle::alpha_plus_bruteforce(g)) {
        return "addition stability mismatch on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("deletion_stability_matches_bruteforce", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!oracle_sized(g)) continue;
      if (is_alpha_minus_stable(g) != oracle::alpha_minus_bruteforce(g)) {
        return "deletion stability mismatch on " + describe(x);
      }
    }
    for (const auto& g : rectangles) {
      if (!oracle_sized(g)) continue;
      if (is_alpha_minus_stable(g) != oracle::alpha_minus_bruteforce(g)) {
        return "deletion stability mismatch on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("stability_flags_compose", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!oracle_sized(g)) continue;
      StabilityReport report = stability_report(g);
      if (report.is_alpha != (report.is_alpha_plus && report.is_alpha_minus)) {
        return "flag composition broken on " + describe(x);
      }
      if (report.is_bistable && g.vertex_count() >= 4 && !report.is_alpha) {
        return "bistable without edit stability on " + describe(x);
      }
      if (report.alpha != stability_number(g)) {
        return "report alpha mismatch on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("no_shared_pair_characterizes_addition_stability",
          [&]() -> std::optional<std::string> {
            for (const auto& x : squares) {
              BipartiteGraph g = to_graph(x);
              if (!oracle_sized(g)) continue;
              auto sets = oracle::enumerate_maximum_stable_sets(g);
              // Count vertices present in every maximum stable set.
              std::size_t shared = 0;
              for (std::size_t a = 0; a < g.a_count(); ++a) {
                bool everywhere = true;
                for (const auto& s : sets)
                  if (!s.contains_a(a)) {
                    everywhere = false;
                    break;
                  }
                if (everywhere) ++shared;
              }
              for (std::size_t b = 0; b < g.b_count(); ++b) {
                bool everywhere = true;
                for (const auto& s : sets)
                  if (!s.contains_b(b)) {
                    everywhere = false;
                    break;
                  }
                if (everywhere) ++shared;
              }
              if ((shared <= 1) != oracle::alpha_plus_bruteforce(g)) {
                return "shared pair characterization fails on " + describe(x);
              }
            }
            return std::nullopt;
          });

  h.check("two_domination_characterizes_deletion_stability",
          [&]() -> std::optional<std::string> {
            for (const auto& x : squares) {
              BipartiteGraph g = to_graph(x);
              if (!oracle_sized(g)) continue;
              bool all_dominating = true;
              for (const auto& s : oracle::enumerate_maximum_stable_sets(g)) {
                if (!is_two_dominating(g, s)) {
                  all_dominating = false;
                  break;
                }
              }
              if (all_dominating != oracle::alpha_minus_bruteforce(g)) {
                return "two-domination characterization fails on " + describe(x);
              }
            }
            return std::nullopt;
          });

  h.check("bistable_iff_two_maximum_stable_sets", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!oracle_sized(g)) continue;
      auto sets = oracle::enumerate_maximum_stable_sets(g);
      std::vector<std::size_t> all_a(g.a_count()), all_b(g.b_count());
      std::iota(all_a.begin(), all_a.end(), std::size_t{0});
      std::iota(all_b.begin(), all_b.end(), std::size_t{0});
      bool exactly_rows = sets.size() == 2 && sets[0] == VertexSet(all_a, {}) &&
                          sets[1] == VertexSet({}, all_b);
      if (exactly_rows != is_bistable(g)) {
        return "bistability disagrees with stable set census on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("connected_stability_equivalences", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (g.vertex_count() < 4 || g.a_count() > 6) continue;
      if (connected_components(g).size() != 1) continue;
      auto sets = oracle::enumerate_maximum_stable_sets(g);
      std::vector<std::size_t> all_a(g.a_count()), all_b(g.b_count());
      std::iota(all_a.begin(), all_a.end(), std::size_t{0});
      std::iota(all_b.begin(), all_b.end(), std::size_t{0});
      bool route_census = sets.size() == 2 && sets[0] == VertexSet(all_a, {}) &&
                          sets[1] == VertexSet({}, all_b);
      bool route_fast = is_alpha_plus_stable(g);
      bool route_enum = !oracle::enumerate_perfect_matchings(g).empty();
      for (std::size_t a = 0; a < g.a_count() && (route_fast || route_enum); ++a) {
        for (std::size_t b = 0; b < g.b_count(); ++b) {
          BipartiteGraph cut = without_pair(g, a, b);
          route_fast = route_fast && is_alpha_plus_stable(cut);
          route_enum = route_enum && !oracle::enumerate_perfect_matchings(cut).empty();
          if (!route_fast && !route_enum) break;
        }
      }
      bool route_support = has_total_support(from_graph(g));
      bool route_surplus = oracle::hall_surplus_check(g);
      if (route_census != route_fast || route_census != route_enum ||
          route_census != route_support || route_census != route_surplus) {
        return "five-way equivalence broken on " + describe(x) + ": census=" +
               std::to_string(route_census) + " fast=" + std::to_string(route_fast) +
               " enum=" + std::to_string(route_enum) + " support=" +
               std::to_string(route_support) + " surplus=" + std::to_string(route_surplus);
      }
    }
    return std::nullopt;
  });

  h.check("decomposability_matches_mixed_stable_set", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (g.a_count() < 2 || !oracle_sized(g)) continue;
      if (connected_components(g).size() != 1) continue;
      // A stable set with exactly n vertices touching both sides, by subset
      // enumeration.
      const std::size_t n = g.a_count(), total = g.vertex_count();
      bool mixed_found = false;
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << total) && !mixed_found;
           ++subset) {
        if (static_cast<std::size_t>(std::popcount(subset)) != n) continue;
        std::vector<std::size_t> sa, sb;
        for (std::size_t v = 0; v < total; ++v) {
          if (subset & (std::uint64_t{1} << v)) {
            if (v < n) {
              sa.push_back(v);
            } else {
              sb.push_back(v - n);
            }
          }
        }
        if (sa.empty() || sb.empty()) continue;
        if (is_stable_set(g, VertexSet(sa, sb))) mixed_found = true;
      }
      if (mixed_found != is_partly_decomposable(x).has_value()) {
        return "mixed stable set criterion fails on " + describe(x);
      }
    }
    return std::nullopt;
  });

  h.check("stable_set_corner_rotation", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      BipartiteGraph g = to_graph(x);
      if (!oracle_sized(g)) continue;
      for (const auto& s : oracle::enumerate_maximum_stable_sets(g)) {
        if (s.a_members().empty() || s.b_members().empty()) continue;
        auto block = stable_set_zero_block(g, s);
        if (!block) return "stable set rejected on " + describe(x);
        ZeroOneMatrix moved = x.permuted(block->row_perm, block->col_perm);
        for (std::size_t i = 0; i < block->p; ++i) {
          for (std::size_t j = 0; j < block->q; ++j) {
            if (moved.get(i, x.cols() - block->q + j)) {
              return "corner not zero on " + describe(x);
            }
          }
        }
      }
      // A vertex pair joined by an edge is never stable.
      if (!g.edges().empty()) {
        const Edge& e = g.edges().front();
        if (stable_set_zero_block(g, VertexSet({e.a}, {e.b}))) {
          return "adjacent pair accepted on " + describe(x);
        }
      }
    }
    return std::nullopt;
  });

  h.check("io_roundtrip", [&]() -> std::optional<std::string> {
    for (const auto& x : squares) {
      if (read_matrix_string(write_matrix(x)) != x) {
        return "matrix roundtrip failed on " + describe(x);
      }
    }
    for (const auto& g : rectangles) {
      if (read_graph_string(write_graph(g)) != g) {
        return "graph roundtrip failed on " + describe(g);
      }
      if (to_graph(from_graph(g)) != g) {
        return "matrix conversion roundtrip failed on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("component_split_is_block_diagonal", [&]() -> std::optional<std::string> {
    for (const auto& g : rectangles) {
      auto components = connected_components(g);
      std::size_t a_seen = 0, b_seen = 0, edges_seen = 0;
      for (const auto& c : components) {
        a_seen += c.graph.a_count();
        b_seen += c.graph.b_count();
        edges_seen += c.graph.edge_count();
      }
      if (a_seen != g.a_count() || b_seen != g.b_count()) {
        return "components do not partition the vertices on " + describe(g);
      }
      if (edges_seen != g.edge_count()) {
        return "components drop or cross edges on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("neighborhood_matches_definition", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("neighborhood_matches_definition");
    for (const auto& g : rectangles) {
      std::vector<std::size_t> sa, sb;
      for (std::size_t a = 0; a < g.a_count(); ++a)
        if (rng.chance(0.4)) sa.push_back(a);
      for (std::size_t b = 0; b < g.b_count(); ++b)
        if (rng.chance(0.4)) sb.push_back(b);
      VertexSet s(sa, sb);
      VertexSet n = neighborhood(g, s);
      for (std::size_t b = 0; b < g.b_count(); ++b) {
        bool adjacent = false;
        for (std::size_t a : sa) {
          if (g.has_edge(a, b)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent != n.contains_b(b)) return "neighborhood wrong on " + describe(g);
      }
      for (std::size_t a = 0; a < g.a_count(); ++a) {
        bool adjacent = false;
        for (std::size_t b : sb) {
          if (g.has_edge(a, b)) {
            adjacent = true;
            break;
          }
        }
        if (adjacent != n.contains_a(a)) return "neighborhood wrong on " + describe(g);
      }
    }
    return std::nullopt;
  });

  h.check("generator_determinism", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("generator_determinism");
    for (std::size_t t = 0; t < 20; ++t) {
      std::size_t n = 1 + rng.below(std::max<std::size_t>(1, options.max_n));
      double p = pick_probability(rng);
      std::uint64_t seed = rng.next();
      if (gen::random_balanced(n, p, seed) != gen::random_balanced(n, p, seed) ||
          gen::random_with_pm(n, p, seed) != gen::random_with_pm(n, p, seed) ||
          gen::random_fully_indecomposable(n, p, seed) !=
              gen::random_fully_indecomposable(n, p, seed)) {
        return "same seed produced different instances at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  h.check("generated_matching_guarantee", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("generated_matching_guarantee");
    for (std::size_t t = 0; t < std::max<std::size_t>(20, options.count); ++t) {
      std::size_t n = 1 + rng.below(std::max<std::size_t>(1, options.max_n));
      auto g = gen::random_with_pm(n, pick_probability(rng), rng.next());
      if (!has_perfect_matching(g)) {
        return "generated instance lost its matching at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  h.check("generated_indecomposability_guarantee", [&]() -> std::optional<std::string> {
    auto rng = h.rng_for("generated_indecomposability_guarantee");
    for (std::size_t t = 0; t < std::max<std::size_t>(20, options.count); ++t) {
      std::size_t n = 1 + rng.below(std::max<std::size_t>(1, options.max_n));
      auto x = gen::random_fully_indecomposable(n, pick_probability(rng), rng.next());
      if (!is_fully_indecomposable(x)) {
        return "generated instance not fully indecomposable at n=" + std::to_string(n);
      }
    }
    return std::nullopt;
  });

  h.check("addition_stability_mode_monotone", [&]() -> std::optional<std::string> {
    // Surviving every pair addition implies surviving the cross-side subset
    // of them; the two interpretations may otherwise disagree.
    for (const auto& g : rectangles) {
      if (!oracle_sized(g)) continue;
      if (oracle::alpha_plus_bruteforce(g, oracle::EdgeAdditionMode::all_pairs) &&
          !oracle::alpha_plus_bruteforce(g, oracle::EdgeAdditionMode::cross_side_only)) {
        return "cross-side additions stricter than all pairs on " + describe(g);
      }
    }
    return std::nullopt;
  });

  if (options.inject_failure) {
    h.check("deliberate_failure_selftest", [&]() -> std::optional<std::string> {
      return "injected failure: this check fails by design";
    });
  }

  return h.take();
}

}  // namespace verify
}  // namespace bistable
