#pragma once

#include "msb/graded_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace msb {

/// Raised for inputs outside the supported parameter count (n in {1, 2}).
class UnsupportedDimension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Presentation of an isomorphic module with no nonzero entry between equal
/// grades and a minimal set of relations. Generators then realise beta_0 and
/// relation grades beta_1.
Presentation minimize_presentation(const Presentation& p);

/// Minimal free generators of ker(m), as the columns of an inclusion matrix
/// whose rows are m's columns (row grades = m's column grades).
struct KernelBasis {
  GradedMatrix inclusion;

  Index size() const { return inclusion.cols(); }
  const std::vector<Grade>& grades() const { return inclusion.col_grades(); }
  Barcode generators() const { return Barcode(inclusion.dim(), inclusion.col_grades()); }
};

KernelBasis kernel_basis(const GradedMatrix& m);

/// Rank of the columns of m whose grade is <= x.
Index rank_at(const GradedMatrix& m, const Grade& x);

/// dim M(x) for M = coker of the presentation.
Index pointwise_dim(const Presentation& p, const Grade& x);

struct BettiNumbers {
  Presentation minimal;
  KernelBasis syzygies;          // ker of the minimal relation map; free for n <= 2
  std::vector<Barcode> degrees;  // beta_0 .. beta_n
  SignedBarcode signed_barcode;  // (even degrees, odd degrees)
};

BettiNumbers betti(const Presentation& p);

/// Presentation of ker(g) / im(f): generators from kernel_basis(g), relations
/// are the columns of f written in that basis.
Presentation homology_presentation(const ChainPair& c);

}  // namespace msb
