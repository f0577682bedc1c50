#include "msb/grade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace msb {

Grade make_grade(std::initializer_list<double> coords) {
  Grade g(static_cast<Index>(coords.size()));
  Index k = 0;
  for (double c : coords) g(k++) = c;
  check_finite(g);
  return g;
}

void check_finite(const Eigen::Ref<const Eigen::VectorXd>& g) {
  if (!g.allFinite()) throw ValidityError("grade has a non-finite coordinate: " + to_string(g));
}

std::string to_string(const Grade& g) {
  std::ostringstream os;
  os << '(';
  for (Index k = 0; k < g.size(); ++k) os << (k ? "," : "") << g(k);
  os << ')';
  return os.str();
}

Barcode::Barcode(Index dim) : dim_(dim), bars_(0, dim) {
  if (dim < 1) throw DimensionError("barcode dimension must be at least 1");
}

Barcode::Barcode(Index dim, std::span<const Grade> bars) : Barcode(dim) {
  bars_.resize(static_cast<Index>(bars.size()), dim);
  for (Index i = 0; i < bars_.rows(); ++i) {
    const Grade& g = bars[static_cast<std::size_t>(i)];
    if (g.size() != dim) throw DimensionError("bar " + to_string(g) + " does not have dimension " + std::to_string(dim));
    bars_.row(i) = g.transpose();
  }
  canonicalize();
}

Barcode::Barcode(Index dim, std::initializer_list<Grade> bars)
    : Barcode(dim, std::span<const Grade>(bars.begin(), bars.size())) {}

Barcode Barcode::from_rows(Index dim, Eigen::MatrixXd bars) {
  if (bars.cols() != dim && bars.rows() > 0) throw DimensionError("bar matrix has the wrong number of columns");
  Barcode b(dim);
  if (bars.rows() > 0) b.bars_ = std::move(bars);
  b.canonicalize();
  return b;
}

void Barcode::canonicalize() {
  for (Index i = 0; i < bars_.rows(); ++i) check_finite(bars_.row(i).transpose());
  // -0.0 and 0.0 compare equal but print differently
  bars_ = bars_.unaryExpr([](double v) { return v == 0.0 ? 0.0 : v; });
  std::vector<Index> order(static_cast<std::size_t>(bars_.rows()));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    return lex_less(bars_.row(a).transpose(), bars_.row(b).transpose());
  });
  Eigen::MatrixXd sorted(bars_.rows(), dim_);
  for (Index i = 0; i < bars_.rows(); ++i) sorted.row(i) = bars_.row(order[static_cast<std::size_t>(i)]);
  bars_ = std::move(sorted);
}

std::vector<Grade> Barcode::grades() const {
  std::vector<Grade> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Index i = 0; i < size(); ++i) out.emplace_back(bar(i));
  return out;
}

Index Barcode::count_below(const Grade& x) const {
  if (x.size() != dim_) throw DimensionError("query grade dimension mismatch");
  Index n = 0;
  for (Index i = 0; i < size(); ++i) n += leq(bar(i), x) ? 1 : 0;
  return n;
}

bool operator==(const Barcode& a, const Barcode& b) {
  return a.dim_ == b.dim_ && a.bars_.rows() == b.bars_.rows() && a.bars_ == b.bars_;
}

Barcode barcode_union(const Barcode& a, const Barcode& b) {
  if (a.dim() != b.dim()) throw DimensionError("barcode_union: dimension mismatch");
  Eigen::MatrixXd all(a.size() + b.size(), a.dim());
  all << a.matrix(), b.matrix();
  return Barcode::from_rows(a.dim(), std::move(all));
}

bool barcode_eq(const Barcode& a, const Barcode& b) { return a == b; }

namespace {

// Two-pointer sweep over sorted bars; returns (a \ common, b \ common, common).
struct Split {
  std::vector<Index> only_a, only_b, common;
};

Split split_common(const Barcode& a, const Barcode& b) {
  Split s;
  Index i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (lex_less(a.bar(i), b.bar(j))) {
      s.only_a.push_back(i++);
    } else if (lex_less(b.bar(j), a.bar(i))) {
      s.only_b.push_back(j++);
    } else {
      s.common.push_back(i);
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) s.only_a.push_back(i);
  for (; j < b.size(); ++j) s.only_b.push_back(j);
  return s;
}

Barcode select_rows(const Barcode& b, const std::vector<Index>& rows) {
  Eigen::MatrixXd m(static_cast<Index>(rows.size()), b.dim());
  for (Index r = 0; r < m.rows(); ++r) m.row(r) = b.matrix().row(rows[static_cast<std::size_t>(r)]);
  return Barcode::from_rows(b.dim(), std::move(m));
}

}  // namespace

Barcode barcode_intersection(const Barcode& a, const Barcode& b) {
  if (a.dim() != b.dim()) throw DimensionError("barcode_intersection: dimension mismatch");
  return select_rows(a, split_common(a, b).common);
}

SignedBarcode::SignedBarcode(Index dim) : positive_(dim), negative_(dim) {}

SignedBarcode::SignedBarcode(Barcode positive, Barcode negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
  if (positive_.dim() != negative_.dim()) throw DimensionError("signed barcode parts have different dimensions");
}

SignedBarcode reduce_signed(const SignedBarcode& s) {
  const Split split = split_common(s.positive(), s.negative());
  return {select_rows(s.positive(), split.only_a), select_rows(s.negative(), split.only_b)};
}

}  // namespace msb
