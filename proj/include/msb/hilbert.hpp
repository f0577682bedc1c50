#pragma once

#include "msb/graded_matrix.hpp"
#include "msb/grade.hpp"

#include <span>
#include <vector>

namespace msb {

/// sum over positive bars below x minus sum over negative bars below x.
long long hilbert_eval(const SignedBarcode& s, const Grade& x);

/// HB(M): the Betti signed barcode with common bars cancelled. Positive and
/// negative parts are disjoint.
SignedBarcode minimal_hilbert_decomposition(const Presentation& p);

/// Equality of the Hilbert functions, decided by comparing reduced forms.
bool hilbert_equal(const SignedBarcode& s1, const SignedBarcode& s2);

/// Signed 1-Wasserstein distance between the reduced forms.
double hilbert_distance(const SignedBarcode& s1, const SignedBarcode& s2);

/// Product of the per-axis coordinate sets of `grades`, plus one point below
/// everything. Functions determined by upsets at these grades are constant on
/// the cells of this grid, so comparing them here compares them everywhere.
std::vector<Grade> critical_grid(std::span<const Grade> grades, Index dim);

}  // namespace msb
