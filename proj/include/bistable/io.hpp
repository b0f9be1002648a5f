#pragma once

#include <iosfwd>
#include <string>

#include "bistable/core.hpp"

// Text formats. Both are strict: every malformed token raises parse_error
// with the 1-based line and column of the offence.
//
// Matrix format (.01m):
//   line 1:        "<rows> <cols>"          both at least 1
//   lines 2..m+1:  <cols> whitespace-separated tokens, each "0" or "1"
// The writer emits exactly one space between tokens and a newline after
// every row. The reader accepts any positive amount of blank separation and
// ignores trailing whitespace after the last row.
//
// Graph format (.bge):
//   line 1:        "<|A|> <|B|>"
//   one line per edge: "<i> <j>" with 1 <= i <= |A|, 1 <= j <= |B|
// Duplicate edges are rejected. Vertices may be isolated. The writer lists
// edges in sorted order, 1-based.

namespace bistable {

ZeroOneMatrix read_matrix(std::istream& in);
ZeroOneMatrix read_matrix_string(const std::string& text);
ZeroOneMatrix read_matrix_file(const std::string& path);

std::string write_matrix(const ZeroOneMatrix& x);

BipartiteGraph read_graph(std::istream& in);
BipartiteGraph read_graph_string(const std::string& text);
BipartiteGraph read_graph_file(const std::string& path);

std::string write_graph(const BipartiteGraph& g);

}  // namespace bistable
