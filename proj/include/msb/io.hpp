#pragma once

#include "msb/graded_matrix.hpp"
#include "msb/matching.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace msb {

/// Malformed or invalid input; the message carries "line L, column C".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Shortest decimal that round-trips; "inf" for +infinity.
std::string format_double(double v);

/// First token of the first non-comment line ("sbarc", "mpres", ...).
std::string format_magic(std::string_view text);

SignedBarcode parse_signed_barcode(std::string_view text);
std::string serialize_signed_barcode(const SignedBarcode& s);

Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

ChainPair parse_chain_pair(std::string_view text);
std::string serialize_chain_pair(const ChainPair& c);

/// "value <v>" and, when requested and finite, "match <count>" then "i j" lines.
std::string serialize_matching(const MatchingResult& r, bool with_matching);

/// "beta<k> <count>" followed by the bars, for each degree.
std::string serialize_betti(const std::vector<Barcode>& degrees);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Non-blank lines with '#' comments removed, split on whitespace.
class LineReader {
 public:
  explicit LineReader(std::string_view text);

  bool at_end() const { return pos_ >= lines_.size(); }
  /// Next line's tokens; throws at end of input.
  const std::vector<Token>& next(const char* expecting);
  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const;
  [[noreturn]] void fail(const std::string& msg) const;

  double real(const Token& t) const;
  long long integer(const Token& t) const;
  std::size_t count(const Token& t) const;
  /// "<index>:<coeff>" with index < bound.
  std::pair<Index, long long> entry(const Token& t, Index bound) const;
  /// Expects `keyword <value>` and returns the value token.
  const Token& keyword(const char* kw);
  void expect_tokens(const std::vector<Token>& toks, std::size_t n, const char* what) const;
  void expect_end() const;

 private:
  struct Line {
    std::size_t number;
    std::vector<Token> tokens;
  };
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t line_no_ = 0;
};

PrimeField parse_field(LineReader& in);
Index parse_dim(LineReader& in);
Grade parse_grade(const LineReader& in, const std::vector<Token>& toks, std::size_t first, Index dim);
void append_grade(std::string& out, const Grade& g);

}  // namespace detail

}  // namespace msb
