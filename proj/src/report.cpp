#include "bistable/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "bistable/errors.hpp"
#include "bistable/matching.hpp"
#include "bistable/oracle.hpp"
#include "bistable/permanent.hpp"
#include "bistable/structure.hpp"

namespace bistable {

Guards guards_from_environment() {
  Guards guards;
  if (const char* raw = std::getenv("BISTABLE_MAX_ORACLE")) {
    char* end = nullptr;
    unsigned long value = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) {
      guards.enumeration_max_vertices = static_cast<std::size_t>(value);
      guards.bruteforce_max_vertices = static_cast<std::size_t>(value);
    }
  }
  return guards;
}

AnalysisReport analyze(const BipartiteGraph& g, const std::string& input_name,
                       const Guards& guards) {
  AnalysisReport report;
  report.input = input_name;
  report.rows = g.a_count();
  report.cols = g.b_count();

  auto components = connected_components(g);
  report.components = components.size();
  report.connected = components.size() == 1;

  TermRankResult mm = maximum_matching(g);
  report.term_rank = mm.rho;
  report.alpha = g.vertex_count() - mm.rho;
  report.has_perfect_matching = g.is_balanced() && mm.rho == g.a_count();
  report.bistable = is_bistable(g);

  const bool square = g.a_count() == g.b_count() && g.a_count() > 0;
  if (square) {
    ZeroOneMatrix x = from_graph(g);
    if (g.a_count() <= guards.permanent_max_order) {
      report.permanent = permanent(x, guards.permanent_max_order).value;
    } else {
      report.guard_suppressed = true;
    }
    report.fully_indecomposable = is_fully_indecomposable(x);
    report.total_support = has_total_support(x);
  }

  if (g.is_balanced()) {
    report.alpha_plus = is_alpha_plus_stable(g);
    report.alpha_stable = is_alpha_stable(g);
  } else if (g.vertex_count() <= guards.bruteforce_max_vertices) {
    report.alpha_plus = oracle::alpha_plus_bruteforce(g, oracle::EdgeAdditionMode::all_pairs,
                                                      guards.bruteforce_max_vertices);
  } else {
    report.guard_suppressed = true;
  }

  if (g.vertex_count() <= guards.enumeration_max_vertices) {
    report.alpha_minus = is_alpha_minus_stable(g, guards.enumeration_max_vertices);
  } else {
    report.guard_suppressed = true;
  }
  if (!g.is_balanced()) {
    if (report.alpha_plus.has_value() && report.alpha_minus.has_value()) {
      report.alpha_stable = *report.alpha_plus && *report.alpha_minus;
    } else {
      report.guard_suppressed = true;
    }
  }

  if (report.has_perfect_matching && g.a_count() > 0) {
    EdgeClassification classes = classify_edges(g);
    report.forced_edges = classes.forced;
    report.allowed_edge_count = classes.allowed.size();
    BlockTriangularForm form = block_triangular_form(from_graph(g));
    report.block_sizes = form.block_sizes;
    report.unit_block_count = count_unit_blocks(form);
    report.row_perm = form.row_perm;
    report.col_perm = form.col_perm;
  }
  return report;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json one_based(const std::vector<std::size_t>& indices) {
  ordered_json list = ordered_json::array();
  for (std::size_t v : indices) list.push_back(v + 1);
  return list;
}

ordered_json report_to_ordered_json(const AnalysisReport& report) {
  ordered_json j;
  j["schema"] = 1;
  j["input"] = report.input;
  j["rows"] = report.rows;
  j["cols"] = report.cols;
  j["connected"] = report.connected;
  j["components"] = report.components;
  j["term_rank"] = report.term_rank;
  j["permanent"] = report.permanent ? ordered_json(*report.permanent) : ordered_json(nullptr);
  j["alpha"] = report.alpha;
  j["has_perfect_matching"] = report.has_perfect_matching;
  j["fully_indecomposable"] =
      report.fully_indecomposable ? ordered_json(*report.fully_indecomposable) : ordered_json(nullptr);
  j["total_support"] =
      report.total_support ? ordered_json(*report.total_support) : ordered_json(nullptr);
  j["bistable"] = report.bistable;
  j["alpha_plus"] = report.alpha_plus ? ordered_json(*report.alpha_plus) : ordered_json(nullptr);
  j["alpha_minus"] = report.alpha_minus ? ordered_json(*report.alpha_minus) : ordered_json(nullptr);
  j["alpha_stable"] =
      report.alpha_stable ? ordered_json(*report.alpha_stable) : ordered_json(nullptr);
  if (report.forced_edges) {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : *report.forced_edges) {
      edges.push_back(ordered_json::array({e.a + 1, e.b + 1}));
    }
    j["forced_edges"] = edges;
  } else {
    j["forced_edges"] = nullptr;
  }
  j["allowed_edge_count"] =
      report.allowed_edge_count ? ordered_json(*report.allowed_edge_count) : ordered_json(nullptr);
  j["block_sizes"] = report.block_sizes ? ordered_json(*report.block_sizes) : ordered_json(nullptr);
  j["unit_block_count"] =
      report.unit_block_count ? ordered_json(*report.unit_block_count) : ordered_json(nullptr);
  j["row_perm"] = report.row_perm ? one_based(*report.row_perm) : ordered_json(nullptr);
  j["col_perm"] = report.col_perm ? one_based(*report.col_perm) : ordered_json(nullptr);
  return j;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report, int indent) {
  return report_to_ordered_json(report).dump(indent) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
  // Same keys, same order, same value rendering as the JSON mode; strings
  // lose their quotes, everything else is the compact JSON encoding.
  ordered_json j = report_to_ordered_json(report);
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bistable
