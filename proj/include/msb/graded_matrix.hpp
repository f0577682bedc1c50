#pragma once

#include "msb/field.hpp"
#include "msb/grade.hpp"

#include <vector>

namespace msb {

struct Entry {
  Index row;
  FieldElem value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Nonzero entries of one column, sorted by row.
using SparseColumn = std::vector<Entry>;

/// Matrix over a prime field with a grade on every row and column. Column j
/// describes a map F_{col_grade(j)} -> (+)_i F_{row_grade(i)}.
class GradedMatrix {
 public:
  GradedMatrix(PrimeField field, Index dim);
  /// Entries are normalised (sorted, reduced mod p, zeros dropped, duplicate
  /// rows summed). Does not check the grade condition; see validate_graded.
  GradedMatrix(PrimeField field, Index dim, std::vector<Grade> row_grades, std::vector<Grade> col_grades,
               std::vector<SparseColumn> columns);

  const PrimeField& field() const { return field_; }
  Index dim() const { return dim_; }
  Index rows() const { return static_cast<Index>(row_grades_.size()); }
  Index cols() const { return static_cast<Index>(col_grades_.size()); }

  const Grade& row_grade(Index i) const { return row_grades_[static_cast<std::size_t>(i)]; }
  const Grade& col_grade(Index j) const { return col_grades_[static_cast<std::size_t>(j)]; }
  const std::vector<Grade>& row_grades() const { return row_grades_; }
  const std::vector<Grade>& col_grades() const { return col_grades_; }
  const SparseColumn& column(Index j) const { return columns_[static_cast<std::size_t>(j)]; }
  FieldElem coeff(Index i, Index j) const;

  /// Dense copy of column j, length rows().
  std::vector<FieldElem> dense_column(Index j) const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&);

 private:
  PrimeField field_;
  Index dim_;
  std::vector<Grade> row_grades_;
  std::vector<Grade> col_grades_;
  std::vector<SparseColumn> columns_;
};

/// True iff every nonzero entry (i, j) has row_grade(i) <= col_grade(j).
bool validate_graded(const GradedMatrix& m);

/// Throws ValidityError naming the first offending entry.
void require_graded(const GradedMatrix& m, const char* what = "matrix");

/// coker of the relation matrix: generators are the rows, relations the columns.
class Presentation {
 public:
  explicit Presentation(GradedMatrix relations);

  const GradedMatrix& relations() const { return rels_; }
  const std::vector<Grade>& generators() const { return rels_.row_grades(); }
  Index num_generators() const { return rels_.rows(); }
  Index num_relations() const { return rels_.cols(); }
  Index dim() const { return rels_.dim(); }
  const PrimeField& field() const { return rels_.field(); }

  Barcode generator_barcode() const;
  Barcode relation_barcode() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  GradedMatrix rels_;
};

/// X --f--> Y --g--> Z with g o f = 0; presents ker(g) / im(f).
class ChainPair {
 public:
  ChainPair(GradedMatrix f, GradedMatrix g);

  const GradedMatrix& f() const { return f_; }
  const GradedMatrix& g() const { return g_; }

 private:
  GradedMatrix f_;
  GradedMatrix g_;
};

/// Product a * b over the common field; grades taken from a's rows and b's columns.
GradedMatrix multiply(const GradedMatrix& a, const GradedMatrix& b);

}  // namespace msb
