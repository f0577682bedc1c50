#include "msb/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace msb {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace detail {

LineReader::LineReader(std::string_view text) {
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines_.push_back(std::move(line));
  }
}

const std::vector<Token>& LineReader::next(const char* expecting) {
  if (at_end()) throw ParseError(line_no_ + 1, 1, std::string("unexpected end of input, expected ") + expecting);
  const Line& l = lines_[pos_++];
  line_no_ = l.number;
  return l.tokens;
}

void LineReader::fail(const Token& t, const std::string& msg) const { throw ParseError(line_no_, t.column, msg); }
void LineReader::fail(const std::string& msg) const { throw ParseError(line_no_, 1, msg); }

double LineReader::real(const Token& t) const {
  double v = 0.0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) fail(t, "expected a number, got '" + std::string(t.text) + "'");
  if (!std::isfinite(v)) fail(t, "coordinate must be finite, got '" + std::string(t.text) + "'");
  return v;
}

long long LineReader::integer(const Token& t) const {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    fail(t, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

std::size_t LineReader::count(const Token& t) const {
  const long long v = integer(t);
  if (v < 0) fail(t, "count must be nonnegative");
  return static_cast<std::size_t>(v);
}

std::pair<Index, long long> LineReader::entry(const Token& t, Index bound) const {
  const std::size_t colon = t.text.find(':');
  if (colon == std::string_view::npos) fail(t, "expected <index>:<coeff>, got '" + std::string(t.text) + "'");
  const Token idx_tok{t.text.substr(0, colon), t.column};
  const Token val_tok{t.text.substr(colon + 1), t.column + colon + 1};
  const long long idx = integer(idx_tok);
  if (idx < 0 || idx >= bound)
    fail(idx_tok, "index " + std::to_string(idx) + " out of range [0, " + std::to_string(bound) + ")");
  return {static_cast<Index>(idx), integer(val_tok)};
}

const Token& LineReader::keyword(const char* kw) {
  const auto& toks = next(kw);
  if (toks[0].text != kw) fail(toks[0], std::string("expected '") + kw + "', got '" + std::string(toks[0].text) + "'");
  expect_tokens(toks, 2, kw);
  return toks[1];
}

void LineReader::expect_tokens(const std::vector<Token>& toks, std::size_t n, const char* what) const {
  if (toks.size() != n)
    fail(toks.size() > n ? toks[n] : toks.back(),
         std::string(what) + ": expected " + std::to_string(n) + " tokens, got " + std::to_string(toks.size()));
}

void LineReader::expect_end() const {
  if (!at_end()) throw ParseError(lines_[pos_].number, 1, "unexpected trailing content");
}

PrimeField parse_field(LineReader& in) {
  const Token& t = in.keyword("field");
  const long long p = in.integer(t);
  if (p < 2 || p >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(p))) in.fail(t, "field characteristic must be a prime");
  return PrimeField(static_cast<std::uint32_t>(p));
}

Index parse_dim(LineReader& in) {
  const Token& t = in.keyword("n");
  const long long n = in.integer(t);
  if (n < 1 || n > 64) in.fail(t, "dimension must be between 1 and 64");
  return static_cast<Index>(n);
}

Grade parse_grade(const LineReader& in, const std::vector<Token>& toks, std::size_t first, Index dim) {
  if (toks.size() < first + static_cast<std::size_t>(dim)) in.fail(toks.back(), "grade needs " + std::to_string(dim) + " coordinates");
  Grade g(dim);
  for (Index k = 0; k < dim; ++k) g(k) = in.real(toks[first + static_cast<std::size_t>(k)]);
  return g;
}

void append_grade(std::string& out, const Grade& g) {
  for (Index k = 0; k < g.size(); ++k) {
    if (k) out += ' ';
    out += format_double(g(k));
  }
}

namespace {

void expect_magic(LineReader& in, const char* magic) {
  const auto& toks = in.next(magic);
  if (toks[0].text != magic) in.fail(toks[0], std::string("expected magic '") + magic + "', got '" + std::string(toks[0].text) + "'");
  in.expect_tokens(toks, 2, magic);
  if (toks[1].text != "1") in.fail(toks[1], "unsupported format version '" + std::string(toks[1].text) + "'");
}

std::vector<Grade> parse_grade_block(LineReader& in, const char* kw, Index dim) {
  const std::size_t n = in.count(in.keyword(kw));
  std::vector<Grade> out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& toks = in.next("grade");
    in.expect_tokens(toks, static_cast<std::size_t>(dim), "grade");
    out.push_back(parse_grade(in, toks, 0, dim));
  }
  return out;
}

/// Block of graded columns: `kw <count>` then `grade... nnz idx:coeff...` lines.
/// Entries are checked against `row_grades` as they are read.
struct ColumnBlock {
  std::vector<Grade> grades;
  std::vector<SparseColumn> columns;
};

ColumnBlock parse_column_block(LineReader& in, const char* kw, Index dim, const PrimeField& field,
                               const std::vector<Grade>& row_grades) {
  ColumnBlock block;
  const std::size_t n = in.count(in.keyword(kw));
  const auto d = static_cast<std::size_t>(dim);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& toks = in.next("column");
    if (toks.size() < d + 1) in.fail(toks.back(), "column needs a grade and an entry count");
    Grade g = parse_grade(in, toks, 0, dim);
    const std::size_t nnz = in.count(toks[d]);
    in.expect_tokens(toks, d + 1 + nnz, "column");
    SparseColumn col;
    for (std::size_t e = 0; e < nnz; ++e) {
      const Token& t = toks[d + 1 + e];
      const auto [row, coeff] = in.entry(t, static_cast<Index>(row_grades.size()));
      if (coeff < 1 || coeff >= static_cast<long long>(field.characteristic()))
        in.fail(t, "coefficient must lie in [1, " + std::to_string(field.characteristic()) + ")");
      if (!leq(row_grades[static_cast<std::size_t>(row)], g))
        in.fail(t, "entry " + std::string(t.text) + " of " + kw + " column " + std::to_string(j) + " maps row grade " +
                       to_string(row_grades[static_cast<std::size_t>(row)]) + " to column grade " + to_string(g) +
                       ", which is not above it");
      for (const Entry& prev : col)
        if (prev.row == row) in.fail(t, "duplicate row " + std::to_string(row) + " in column");
      col.push_back({row, static_cast<FieldElem>(coeff)});
    }
    block.grades.push_back(std::move(g));
    block.columns.push_back(std::move(col));
  }
  return block;
}

void append_columns(std::string& out, const GradedMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    append_grade(out, m.col_grade(j));
    out += ' ' + std::to_string(m.column(j).size());
    for (const Entry& e : m.column(j)) out += ' ' + std::to_string(e.row) + ':' + std::to_string(e.value);
    out += '\n';
  }
}

void append_grades(std::string& out, const std::vector<Grade>& gs) {
  for (const Grade& g : gs) {
    append_grade(out, g);
    out += '\n';
  }
}

void append_header(std::string& out, const char* magic, const PrimeField& field, Index dim) {
  out += std::string(magic) + " 1\nfield " + std::to_string(field.characteristic()) + "\nn " + std::to_string(dim) + '\n';
}

}  // namespace
}  // namespace detail

using namespace detail;

std::string format_magic(std::string_view text) {
  LineReader in(text);
  if (in.at_end()) return {};
  return std::string(in.next("magic")[0].text);
}

SignedBarcode parse_signed_barcode(std::string_view text) {
  LineReader in(text);
  expect_magic(in, "sbarc");
  const Index dim = parse_dim(in);
  std::vector<Grade> pos = parse_grade_block(in, "positive", dim);
  std::vector<Grade> neg = parse_grade_block(in, "negative", dim);
  in.expect_end();
  return {Barcode(dim, pos), Barcode(dim, neg)};
}

std::string serialize_signed_barcode(const SignedBarcode& s) {
  std::string out = "sbarc 1\nn " + std::to_string(s.dim()) + '\n';
  for (const auto& [name, b] : {std::pair{"positive", &s.positive()}, std::pair{"negative", &s.negative()}}) {
    out += std::string(name) + ' ' + std::to_string(b->size()) + '\n';
    append_grades(out, b->grades());
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  LineReader in(text);
  expect_magic(in, "mpres");
  const PrimeField field = parse_field(in);
  const Index dim = parse_dim(in);
  std::vector<Grade> gens = parse_grade_block(in, "gens", dim);
  ColumnBlock rels = parse_column_block(in, "rels", dim, field, gens);
  in.expect_end();
  return Presentation(GradedMatrix(field, dim, std::move(gens), std::move(rels.grades), std::move(rels.columns)));
}

std::string serialize_presentation(const Presentation& p) {
  std::string out;
  append_header(out, "mpres", p.field(), p.dim());
  out += "gens " + std::to_string(p.num_generators()) + '\n';
  append_grades(out, p.generators());
  out += "rels " + std::to_string(p.num_relations()) + '\n';
  append_columns(out, p.relations());
  return out;
}

ChainPair parse_chain_pair(std::string_view text) {
  LineReader in(text);
  expect_magic(in, "mchain");
  const PrimeField field = parse_field(in);
  const Index dim = parse_dim(in);
  std::vector<Grade> z = parse_grade_block(in, "Z", dim);
  ColumnBlock y = parse_column_block(in, "Y", dim, field, z);
  ColumnBlock x = parse_column_block(in, "X", dim, field, y.grades);
  in.expect_end();
  GradedMatrix g(field, dim, std::move(z), y.grades, std::move(y.columns));
  GradedMatrix f(field, dim, std::move(y.grades), std::move(x.grades), std::move(x.columns));
  try {
    return ChainPair(std::move(f), std::move(g));
  } catch (const ValidityError& e) {
    throw ParseError(in.line(), 1, e.what());
  }
}

std::string serialize_chain_pair(const ChainPair& c) {
  std::string out;
  append_header(out, "mchain", c.f().field(), c.f().dim());
  out += "Z " + std::to_string(c.g().rows()) + '\n';
  append_grades(out, c.g().row_grades());
  out += "Y " + std::to_string(c.g().cols()) + '\n';
  append_columns(out, c.g());
  out += "X " + std::to_string(c.f().cols()) + '\n';
  append_columns(out, c.f());
  return out;
}

std::string serialize_matching(const MatchingResult& r, bool with_matching) {
  std::string out = "value " + format_double(r.value) + '\n';
  if (with_matching && r.matching) {
    out += "match " + std::to_string(r.matching->size()) + '\n';
    for (const auto& [i, j] : *r.matching) out += std::to_string(i) + ' ' + std::to_string(j) + '\n';
  }
  return out;
}

std::string serialize_betti(const std::vector<Barcode>& degrees) {
  std::string out;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    out += "beta" + std::to_string(k) + ' ' + std::to_string(degrees[k].size()) + '\n';
    append_grades(out, degrees[k].grades());
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

}  // namespace msb
