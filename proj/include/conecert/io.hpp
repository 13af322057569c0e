#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "conecert/cone.hpp"
#include "conecert/errors.hpp"
#include "conecert/matrix.hpp"

namespace conecert {

namespace detail {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Whitespace tokenizer with 1-based source positions; '#' comments run to
/// end of line. Parsing is locale-independent (std::from_chars).
class TokenStream {
 public:
  explicit TokenStream(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        tokens_.push_back({line.substr(start, i - start), lineno, start + 1});
      }
    }
    last_line_ = lineno == 0 ? 1 : lineno;
  }

  bool empty() const { return pos_ >= tokens_.size(); }

  const Token& peek() const {
    if (empty()) throw parse_error("unexpected end of input", last_line_, 1);
    return tokens_[pos_];
  }

  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }

  double next_double(const char* what) {
    Token t = next();
    double value = 0.0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
      throw parse_error(std::string("expected ") + what + ", got '" + t.text + "'",
                        t.line, t.column);
    if (!std::isfinite(value))
      throw parse_error(std::string(what) + " must be finite", t.line, t.column);
    return value;
  }

  std::size_t next_count(const char* what, std::size_t max_value = 4096) {
    Token t = next();
    std::size_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value == 0)
      throw parse_error(std::string("expected positive ") + what + ", got '" +
                            t.text + "'",
                        t.line, t.column);
    if (value > max_value)
      throw parse_error(std::string(what) + " too large", t.line, t.column);
    return value;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
};

inline Matrix read_matrix_block(TokenStream& ts, std::size_t rows,
                                std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = ts.next_double("matrix entry");
  return m;
}

}  // namespace detail

/// Matrix text format: first line `rows cols`, then `rows` lines of `cols`
/// whitespace-separated decimal numbers. '#' starts a comment.
inline Matrix read_matrix(std::istream& in) {
  detail::TokenStream ts(in);
  std::size_t rows = ts.next_count("row count");
  std::size_t cols = ts.next_count("column count");
  Matrix m = detail::read_matrix_block(ts, rows, cols);
  if (!ts.empty()) {
    auto t = ts.peek();
    throw parse_error("trailing input after matrix", t.line, t.column);
  }
  return m;
}

inline Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return read_matrix(in);
}

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_matrix(std::ostream& out, const Matrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

/// Cone spec format: `orthant n`, `rotated n` followed by n x n entries for
/// O, `simplicial n` followed by G, or `psd n`.
inline ConeModel read_cone_spec(std::istream& in) {
  detail::TokenStream ts(in);
  detail::Token kw = ts.next();
  std::size_t n = ts.next_count("cone dimension", 64);
  ConeModel cone = [&]() {
    if (kw.text == "orthant") return ConeModel::orthant(n);
    if (kw.text == "rotated")
      return ConeModel::rotated_orthant(detail::read_matrix_block(ts, n, n));
    if (kw.text == "simplicial")
      return ConeModel::simplicial(detail::read_matrix_block(ts, n, n));
    if (kw.text == "psd") return ConeModel::psd(n);
    throw parse_error("unknown cone kind '" + kw.text + "'", kw.line, kw.column);
  }();
  if (!ts.empty()) {
    auto t = ts.peek();
    throw parse_error("trailing input after cone spec", t.line, t.column);
  }
  return cone;
}

inline ConeModel parse_cone_spec(const std::string& text) {
  std::istringstream in(text);
  return read_cone_spec(in);
}

inline void write_cone_spec(std::ostream& out, const ConeModel& k) {
  out << cone_kind_name(k.kind()) << ' ' << k.order() << '\n';
  if (k.kind() == ConeModel::Kind::rotated_orthant ||
      k.kind() == ConeModel::Kind::simplicial) {
    const Matrix& g = k.generator_matrix();
    for (std::size_t i = 0; i < g.rows(); ++i) {
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (j) out << ' ';
        out << format_double(g(i, j));
      }
      out << '\n';
    }
  }
}

inline Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open matrix file " + path);
  return read_matrix(in);
}

inline ConeModel read_cone_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::invalid_argument, "cannot open cone spec " + path);
  return read_cone_spec(in);
}

}  // namespace conecert
