#include "msb/graded_matrix.hpp"

#include <algorithm>
#include <string>

namespace msb {

GradedMatrix::GradedMatrix(PrimeField field, Index dim) : field_(field), dim_(dim) {
  if (dim < 1) throw DimensionError("graded matrix dimension must be at least 1");
}

GradedMatrix::GradedMatrix(PrimeField field, Index dim, std::vector<Grade> row_grades, std::vector<Grade> col_grades,
                           std::vector<SparseColumn> columns)
    : GradedMatrix(field, dim) {
  row_grades_ = std::move(row_grades);
  col_grades_ = std::move(col_grades);
  columns_ = std::move(columns);
  if (columns_.size() != col_grades_.size()) throw std::invalid_argument("column count does not match column grades");
  for (const auto* grades : {&row_grades_, &col_grades_}) {
    for (const Grade& g : *grades) {
      if (g.size() != dim_) throw DimensionError("grade " + to_string(g) + " has the wrong dimension");
      check_finite(g);
    }
  }
  for (SparseColumn& col : columns_) {
    std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    SparseColumn merged;
    for (const Entry& e : col) {
      if (e.row < 0 || e.row >= rows()) throw std::out_of_range("entry row " + std::to_string(e.row) + " out of range");
      const FieldElem v = field_.reduce(e.value);
      if (!merged.empty() && merged.back().row == e.row)
        merged.back().value = field_.add(merged.back().value, v);
      else
        merged.push_back({e.row, v});
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
    col = std::move(merged);
  }
}

FieldElem GradedMatrix::coeff(Index i, Index j) const {
  const SparseColumn& col = column(j);
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, Index r) { return e.row < r; });
  return (it != col.end() && it->row == i) ? it->value : 0;
}

std::vector<FieldElem> GradedMatrix::dense_column(Index j) const {
  std::vector<FieldElem> v(static_cast<std::size_t>(rows()), 0);
  for (const Entry& e : column(j)) v[static_cast<std::size_t>(e.row)] = e.value;
  return v;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.field_ == b.field_ && a.dim_ == b.dim_ && a.row_grades_ == b.row_grades_ &&
         a.col_grades_ == b.col_grades_ && a.columns_ == b.columns_;
}

bool validate_graded(const GradedMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (const Entry& e : m.column(j))
      if (!leq(m.row_grade(e.row), m.col_grade(j))) return false;
  return true;
}

void require_graded(const GradedMatrix& m, const char* what) {
  for (Index j = 0; j < m.cols(); ++j)
    for (const Entry& e : m.column(j))
      if (!leq(m.row_grade(e.row), m.col_grade(j)))
        throw ValidityError(std::string(what) + ": entry (" + std::to_string(e.row) + ", " + std::to_string(j) +
                            ") goes from row grade " + to_string(m.row_grade(e.row)) + " to column grade " +
                            to_string(m.col_grade(j)) + ", which is not above it");
}

Presentation::Presentation(GradedMatrix relations) : rels_(std::move(relations)) {
  require_graded(rels_, "presentation");
}

Barcode Presentation::generator_barcode() const { return Barcode(dim(), rels_.row_grades()); }
Barcode Presentation::relation_barcode() const { return Barcode(dim(), rels_.col_grades()); }

GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  if (!(a.field() == b.field())) throw std::invalid_argument("multiply: fields differ");
  const PrimeField& F = a.field();
  std::vector<SparseColumn> cols(static_cast<std::size_t>(b.cols()));
  for (Index j = 0; j < b.cols(); ++j) {
    std::vector<FieldElem> acc(static_cast<std::size_t>(a.rows()), 0);
    for (const Entry& eb : b.column(j))
      for (const Entry& ea : a.column(eb.row))
        acc[static_cast<std::size_t>(ea.row)] = F.add(acc[static_cast<std::size_t>(ea.row)], F.mul(ea.value, eb.value));
    for (Index i = 0; i < a.rows(); ++i)
      if (acc[static_cast<std::size_t>(i)] != 0) cols[static_cast<std::size_t>(j)].push_back({i, acc[static_cast<std::size_t>(i)]});
  }
  return GradedMatrix(F, a.dim(), a.row_grades(), b.col_grades(), std::move(cols));
}

ChainPair::ChainPair(GradedMatrix f, GradedMatrix g) : f_(std::move(f)), g_(std::move(g)) {
  if (f_.dim() != g_.dim()) throw DimensionError("chain pair: dimension mismatch");
  if (!(f_.field() == g_.field())) throw std::invalid_argument("chain pair: fields differ");
  if (g_.cols() != f_.rows()) throw std::invalid_argument("chain pair: g must have one column per row of f");
  for (Index i = 0; i < f_.rows(); ++i)
    if (f_.row_grade(i) != g_.col_grade(i))
      throw ValidityError("chain pair: column grade " + std::to_string(i) + " of g differs from row grade of f");
  require_graded(f_, "chain pair f");
  require_graded(g_, "chain pair g");
  const GradedMatrix gf = multiply(g_, f_);
  for (Index j = 0; j < gf.cols(); ++j)
    if (!gf.column(j).empty()) throw ValidityError("chain pair: g o f is nonzero in column " + std::to_string(j));
}

}  // namespace msb
