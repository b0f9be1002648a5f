#include "bistable/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bistable {

namespace {

// Line-oriented tokenizer that remembers the 1-based position of every
// token so parse errors can point at the offence.
struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  // Next token anywhere in the stream, or nullopt at end of input.
  std::optional<Token> next() {
    for (;;) {
      if (pos_ >= line_.size()) {
        if (!std::getline(in_, line_)) return std::nullopt;
        ++line_number_;
        pos_ = 0;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(line_[pos_]))) {
        ++pos_;
        continue;
      }
      std::size_t start = pos_;
      while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
      return Token{line_.substr(start, pos_ - start), line_number_, start + 1};
    }
  }

  std::size_t current_line() const { return line_number_ == 0 ? 1 : line_number_; }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t line_number_ = 0;
  std::size_t pos_ = 0;
};

Token require_token(TokenReader& reader, const char* what) {
  auto token = reader.next();
  if (!token) {
    throw parse_error(std::string("unexpected end of input, expected ") + what,
                      reader.current_line(), 1);
  }
  return *token;
}

std::size_t parse_count(const Token& token, const char* what) {
  std::size_t value = 0;
  if (token.text.empty() || token.text.size() > 9) {
    throw parse_error(std::string("bad ") + what + " '" + token.text + "'", token.line,
                      token.column);
  }
  for (char c : token.text) {
    if (c < '0' || c > '9') {
      throw parse_error(std::string("bad ") + what + " '" + token.text + "'", token.line,
                        token.column);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

void reject_trailing(TokenReader& reader) {
  if (auto extra = reader.next()) {
    throw parse_error("unexpected trailing token '" + extra->text + "'", extra->line,
                      extra->column);
  }
}

}  // namespace

ZeroOneMatrix read_matrix(std::istream& in) {
  TokenReader reader(in);
  Token rows_token = require_token(reader, "row count");
  std::size_t rows = parse_count(rows_token, "row count");
  Token cols_token = require_token(reader, "column count");
  std::size_t cols = parse_count(cols_token, "column count");
  if (rows == 0) throw parse_error("row count must be positive", rows_token.line, rows_token.column);
  if (cols == 0) {
    throw parse_error("column count must be positive", cols_token.line, cols_token.column);
  }
  ZeroOneMatrix x(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Token entry = require_token(reader, "matrix entry");
      if (entry.text == "0") continue;
      if (entry.text == "1") {
        x.set(i, j, true);
        continue;
      }
      throw parse_error("matrix entry must be 0 or 1, got '" + entry.text + "'", entry.line,
                        entry.column);
    }
  }
  reject_trailing(reader);
  return x;
}

ZeroOneMatrix read_matrix_string(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

ZeroOneMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'", 1, 1);
  return read_matrix(in);
}

std::string write_matrix(const ZeroOneMatrix& x) {
  std::ostringstream out;
  out << x.rows() << ' ' << x.cols() << '\n';
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      if (j > 0) out << ' ';
      out << (x.get(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  return out.str();
}

BipartiteGraph read_graph(std::istream& in) {
  TokenReader reader(in);
  Token a_token = require_token(reader, "A side size");
  std::size_t a_count = parse_count(a_token, "A side size");
  Token b_token = require_token(reader, "B side size");
  std::size_t b_count = parse_count(b_token, "B side size");
  std::vector<Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (;;) {
    auto i_token = reader.next();
    if (!i_token) break;
    std::size_t i = parse_count(*i_token, "A endpoint");
    Token j_token = require_token(reader, "B endpoint");
    std::size_t j = parse_count(j_token, "B endpoint");
    if (i < 1 || i > a_count) {
      throw parse_error("A endpoint out of range", i_token->line, i_token->column);
    }
    if (j < 1 || j > b_count) {
      throw parse_error("B endpoint out of range", j_token.line, j_token.column);
    }
    if (!seen.insert({i, j}).second) {
      throw parse_error("duplicate edge", i_token->line, i_token->column);
    }
    edges.push_back(Edge{i - 1, j - 1});
  }
  return BipartiteGraph(a_count, b_count, std::move(edges));
}

BipartiteGraph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

BipartiteGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'", 1, 1);
  return read_graph(in);
}

std::string write_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << g.a_count() << ' ' << g.b_count() << '\n';
  for (const Edge& e : g.edges()) out << e.a + 1 << ' ' << e.b + 1 << '\n';
  return out.str();
}

}  // namespace bistable
