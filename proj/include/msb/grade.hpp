#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace msb {

using Index = Eigen::Index;

/// A point of R^n. Free summand F_i is born at grade i.
using Grade = Eigen::VectorXd;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Grade make_grade(std::initializer_list<double> coords);

/// Throws ValidityError unless every coordinate is finite.
void check_finite(const Eigen::Ref<const Eigen::VectorXd>& g);

/// Componentwise order on R^n.
template <typename A, typename B>
bool leq(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return (a.array() <= b.array()).all();
}

/// Componentwise maximum (least upper bound).
template <typename A, typename B>
auto join(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.cwiseMax(b);
}

template <typename A, typename B>
bool lex_less(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  for (Index k = 0; k < a.size(); ++k) {
    if (a(k) < b(k)) return true;
    if (b(k) < a(k)) return false;
  }
  return false;
}

/// Colexicographic order: last coordinate is most significant. Any linear
/// extension of the componentwise order works for graded reduction; this is it.
template <typename A, typename B>
bool colex_less(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  for (Index k = a.size() - 1; k >= 0; --k) {
    if (a(k) < b(k)) return true;
    if (b(k) < a(k)) return false;
  }
  return false;
}

std::string to_string(const Grade& g);

/// Finite multiset of grades of one dimension. Bars are kept as the rows of a
/// matrix sorted lexicographically, so equality is plain matrix equality.
class Barcode {
 public:
  explicit Barcode(Index dim = 1);
  Barcode(Index dim, std::span<const Grade> bars);
  Barcode(Index dim, std::initializer_list<Grade> bars);
  /// Rows of `bars` are the grades; the matrix must have `dim` columns.
  static Barcode from_rows(Index dim, Eigen::MatrixXd bars);

  Index dim() const { return dim_; }
  Index size() const { return bars_.rows(); }
  bool empty() const { return bars_.rows() == 0; }

  auto bar(Index i) const { return bars_.row(i).transpose(); }
  const Eigen::MatrixXd& matrix() const { return bars_; }
  std::vector<Grade> grades() const;

  /// Number of bars b with b <= x.
  Index count_below(const Grade& x) const;

  friend bool operator==(const Barcode& a, const Barcode& b);

 private:
  void canonicalize();

  Index dim_;
  Eigen::MatrixXd bars_;
};

Barcode barcode_union(const Barcode& a, const Barcode& b);
bool barcode_eq(const Barcode& a, const Barcode& b);

/// Multiset intersection; used to check disjointness.
Barcode barcode_intersection(const Barcode& a, const Barcode& b);

/// Ordered pair (positive, negative) of barcodes of equal dimension. The two
/// parts may share bars.
class SignedBarcode {
 public:
  explicit SignedBarcode(Index dim = 1);
  SignedBarcode(Barcode positive, Barcode negative);

  Index dim() const { return positive_.dim(); }
  const Barcode& positive() const { return positive_; }
  const Barcode& negative() const { return negative_; }

  friend bool operator==(const SignedBarcode& a, const SignedBarcode& b) = default;

 private:
  Barcode positive_;
  Barcode negative_;
};

/// Cancels bars common to both parts, with multiplicity, by exact equality.
SignedBarcode reduce_signed(const SignedBarcode& s);

}  // namespace msb
