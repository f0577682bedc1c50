#pragma once

// Test-only oracles. Deliberately share no code with the library's reduction
// routines: ranks are computed by plain row reduction on a dense copy.

#include "msb/generators.hpp"
#include "msb/graded_matrix.hpp"
#include "msb/hilbert.hpp"

#include <cstdint>
#include <vector>

namespace msb::test {

/// Rank over Z/p of the matrix whose columns are `cols` (each of length rows).
inline Index oracle_rank(std::vector<std::vector<std::int64_t>> cols, std::int64_t p) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e > 0) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  Index rank = 0;
  std::size_t pivot_col = 0;
  for (std::size_t r = 0; r < rows && pivot_col < cols.size(); ++r) {
    std::size_t found = cols.size();
    for (std::size_t c = pivot_col; c < cols.size(); ++c)
      if (((cols[c][r] % p) + p) % p != 0) {
        found = c;
        break;
      }
    if (found == cols.size()) continue;
    std::swap(cols[found], cols[pivot_col]);
    const std::int64_t iv = inv(((cols[pivot_col][r] % p) + p) % p);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == pivot_col) continue;
      const std::int64_t f = ((cols[c][r] % p) + p) % p * iv % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < rows; ++k) cols[c][k] = ((cols[c][k] - f * cols[pivot_col][k]) % p + p) % p;
    }
    ++pivot_col;
    ++rank;
  }
  return rank;
}

inline std::vector<std::int64_t> dense(const GradedMatrix& m, Index j) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(m.rows()), 0);
  for (const Entry& e : m.column(j)) v[static_cast<std::size_t>(e.row)] = e.value;
  return v;
}

/// Rank of the columns of m with grade <= x, optionally skipping one column.
inline Index oracle_rank_at(const GradedMatrix& m, const Grade& x, Index skip = -1) {
  std::vector<std::vector<std::int64_t>> cols;
  for (Index j = 0; j < m.cols(); ++j)
    if (j != skip && leq(m.col_grade(j), x)) cols.push_back(dense(m, j));
  if (cols.empty()) return 0;
  return oracle_rank(std::move(cols), m.field().characteristic());
}

/// dim M(x) straight from the definition of a cokernel.
inline Index oracle_dim(const Presentation& p, const Grade& x) {
  Index gens = 0;
  for (const Grade& g : p.generators()) gens += leq(g, x) ? 1 : 0;
  return gens - oracle_rank_at(p.relations(), x);
}

inline std::vector<Grade> all_grades(const GradedMatrix& m) {
  std::vector<Grade> gs = m.row_grades();
  gs.insert(gs.end(), m.col_grades().begin(), m.col_grades().end());
  return gs;
}

/// Random graded matrix over Z/p: entries only where row grade <= column grade.
inline GradedMatrix random_graded_matrix(Rng& rng, Index rows, Index cols, Index grid, std::uint32_t p, Index dim = 2,
                                         double density = 0.5) {
  auto grade = [&] {
    Grade g(dim);
    for (Index k = 0; k < dim; ++k) g(k) = static_cast<double>(rng.below(static_cast<std::uint64_t>(grid)));
    return g;
  };
  std::vector<Grade> rg, cg;
  for (Index i = 0; i < rows; ++i) rg.push_back(grade());
  for (Index j = 0; j < cols; ++j) cg.push_back(grade());
  std::vector<SparseColumn> columns(static_cast<std::size_t>(cols));
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i)
      if (leq(rg[static_cast<std::size_t>(i)], cg[static_cast<std::size_t>(j)]) && rng.unit() < density)
        columns[static_cast<std::size_t>(j)].push_back({i, static_cast<FieldElem>(1 + rng.below(p - 1))});
  return GradedMatrix(PrimeField(p), dim, std::move(rg), std::move(cg), std::move(columns));
}

inline Barcode random_barcode(Rng& rng, Index size, Index grid, Index dim = 2) {
  std::vector<Grade> bars;
  for (Index i = 0; i < size; ++i) {
    Grade g(dim);
    for (Index k = 0; k < dim; ++k) g(k) = static_cast<double>(rng.below(static_cast<std::uint64_t>(grid)));
    bars.push_back(g);
  }
  return Barcode(dim, bars);
}

}  // namespace msb::test
