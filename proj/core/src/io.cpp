#include "avecond/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "avecond/error.hpp"

namespace avecond {

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;
};

// Splits on whitespace while tracking 1-based line/column positions.
class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  std::optional<Token> next() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
    if (pos_ >= text_.size()) return std::nullopt;
    Token t;
    t.line = line_;
    t.column = column_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_])) advance();
    t.text = text_.substr(start, pos_ - start);
    return t;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::size_t parse_extent(const Token& t) {
  std::size_t value = 0;
  const char* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw ParseError(t.line, t.column, "expected a positive integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

double parse_entry(const Token& t) {
  std::string_view s = t.text;
  if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError(t.line, t.column, "expected a finite number, got '" + std::string(t.text) + "'");
  }
  return value;
}

Token expect(Tokenizer& tok, const char* what) {
  auto t = tok.next();
  if (!t) throw ParseError(tok.line(), tok.column(), std::string("missing ") + what);
  return *t;
}

Vector parse_entries(Tokenizer& tok, std::size_t count) {
  Vector out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(parse_entry(expect(tok, "entry")));
  }
  if (auto extra = tok.next()) {
    throw Error(ErrorCode::DimensionMismatch,
                "surplus entry '" + std::string(extra->text) + "' at line " +
                    std::to_string(extra->line) + ", column " + std::to_string(extra->column));
  }
  return out;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
  Tokenizer tok(text);
  const Token rows_tok = expect(tok, "header");
  const std::size_t rows = parse_extent(rows_tok);
  const Token cols_tok = expect(tok, "column count");
  if (cols_tok.line != rows_tok.line) {
    throw ParseError(cols_tok.line, cols_tok.column, "header must be 'rows cols' on one line");
  }
  const std::size_t cols = parse_extent(cols_tok);
  Vector entries = parse_entries(tok, rows * cols);
  return Matrix::from_row_major(rows, cols, std::move(entries));
}

Vector parse_vector(std::string_view text) {
  Tokenizer tok(text);
  const std::size_t n = parse_extent(expect(tok, "header"));
  return parse_entries(tok, n);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Matrix read_matrix(const std::filesystem::path& path) { return parse_matrix(read_file(path)); }

Vector read_vector(const std::filesystem::path& path) { return parse_vector(read_file(path)); }

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_vector(std::span<const double> x) {
  std::string out = std::to_string(x.size()) + "\n";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ' ';
    out += format_double(x[i]);
  }
  out += '\n';
  return out;
}

std::string format_matrix(const Matrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += format_double(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace avecond
