#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bistable/core.hpp"

// Full structural analysis of one input, with a fixed field shape: fields
// that do not apply (rectangular input, no perfect matching) or whose
// computation exceeded a guard are null rather than omitted, so JSON
// consumers always see the same keys. guard_suppressed distinguishes the
// two kinds of null; the CLI turns it into exit code 3.

namespace bistable {

struct Guards {
  std::size_t permanent_max_order = 20;
  std::size_t enumeration_max_vertices = 24;  // maximum-stable-set enumeration
  std::size_t bruteforce_max_vertices = 20;   // alpha+/alpha- edge perturbation
};

// Reads BISTABLE_MAX_ORACLE (a vertex count) into the enumeration and
// brute-force guards; unset or unparsable leaves the defaults.
Guards guards_from_environment();

struct AnalysisReport {
  std::string input;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool connected = false;
  std::size_t components = 0;
  std::size_t term_rank = 0;
  std::optional<std::uint64_t> permanent;
  std::size_t alpha = 0;
  bool has_perfect_matching = false;
  std::optional<bool> fully_indecomposable;
  std::optional<bool> total_support;
  bool bistable = false;
  std::optional<bool> alpha_plus;
  std::optional<bool> alpha_minus;
  std::optional<bool> alpha_stable;
  std::optional<std::vector<Edge>> forced_edges;  // 0-based here, 1-based on output
  std::optional<std::size_t> allowed_edge_count;
  std::optional<std::vector<std::size_t>> block_sizes;
  std::optional<std::size_t> unit_block_count;
  std::optional<std::vector<std::size_t>> row_perm;
  std::optional<std::vector<std::size_t>> col_perm;
  bool guard_suppressed = false;
};

AnalysisReport analyze(const BipartiteGraph& g, const std::string& input_name,
                       const Guards& guards = {});

// JSON object with "schema": 1 and the fields above in declaration order;
// indices 1-based. to_text renders the same fields line by line as
// "key: value" with identical value formatting, so the two modes agree
// field for field.
std::string report_to_json(const AnalysisReport& report, int indent = 2);
std::string report_to_text(const AnalysisReport& report);

}  // namespace bistable
