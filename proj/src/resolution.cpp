#include "msb/resolution.hpp"

#include "echelon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace msb {

using detail::Echelon;
using detail::Vec;

namespace {

void require_supported(Index dim, const char* what) {
  if (dim < 1 || dim > 2)
    throw UnsupportedDimension(std::string(what) + ": only 1- and 2-parameter modules are supported, got n = " +
                               std::to_string(dim));
}

std::size_t sz(Index i) { return static_cast<std::size_t>(i); }

/// Indices 0..count-1 sorted by (grade colex, index).
std::vector<Index> colex_order(const std::vector<Grade>& grades) {
  std::vector<Index> order(grades.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return colex_less(grades[sz(a)], grades[sz(b)]); });
  return order;
}

SparseColumn to_sparse(const Vec& v) {
  SparseColumn col;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) col.push_back({static_cast<Index>(i), v[i]});
  return col;
}

}  // namespace

Presentation minimize_presentation(const Presentation& p) {
  const GradedMatrix& rels = p.relations();
  const PrimeField& F = rels.field();
  const Index G = rels.rows();
  const Index R = rels.cols();

  std::vector<Vec> cols;
  cols.reserve(sz(R));
  for (Index j = 0; j < R; ++j) cols.push_back(rels.dense_column(j));
  std::vector<bool> row_alive(sz(G), true), col_alive(sz(R), true);

  // position of each row in the fixed row order (grade colex, then index)
  const std::vector<Index> row_order = colex_order(rels.row_grades());
  std::vector<Index> row_rank(sz(G));
  for (Index k = 0; k < G; ++k) row_rank[sz(row_order[sz(k)])] = k;
  const std::vector<Index> col_order = colex_order(rels.col_grades());

  // Eliminate generator/relation pairs joined by an entry between equal grades.
  for (;;) {
    Index pivot_row = -1, pivot_col = -1;
    for (Index j : col_order) {
      if (!col_alive[sz(j)]) continue;
      for (Index i = 0; i < G; ++i) {
        if (!row_alive[sz(i)] || cols[sz(j)][sz(i)] == 0) continue;
        if (rels.row_grade(i) != rels.col_grade(j)) continue;
        if (pivot_row < 0 || row_rank[sz(i)] > row_rank[sz(pivot_row)]) pivot_row = i;
      }
      if (pivot_row >= 0) {
        pivot_col = j;
        break;
      }
    }
    if (pivot_row < 0) break;

    const Vec& pc = cols[sz(pivot_col)];
    const FieldElem a = pc[sz(pivot_row)];
    for (Index j = 0; j < R; ++j) {
      if (j == pivot_col || !col_alive[sz(j)]) continue;
      const FieldElem c = cols[sz(j)][sz(pivot_row)];
      if (c == 0) continue;
      // valid: grade(pivot_col) = grade(pivot_row) <= grade(j)
      const FieldElem s = F.neg(F.div(c, a));
      for (Index i = 0; i < G; ++i)
        if (pc[sz(i)] != 0) cols[sz(j)][sz(i)] = F.add(cols[sz(j)][sz(i)], F.mul(s, pc[sz(i)]));
    }
    row_alive[sz(pivot_row)] = false;
    col_alive[sz(pivot_col)] = false;
  }

  // Keep a relation only if it is not spanned by kept relations of lower or equal grade.
  std::vector<bool> kept(sz(R), false);
  std::vector<Index> kept_in_order;
  for (Index j : col_order) {
    if (!col_alive[sz(j)]) continue;
    Echelon span(F, G);
    for (Index k : kept_in_order)
      if (leq(rels.col_grade(k), rels.col_grade(j))) span.insert(cols[sz(k)]);
    if (span.insert(cols[sz(j)])) {
      kept[sz(j)] = true;
      kept_in_order.push_back(j);
    }
  }

  std::vector<Index> new_row(sz(G), -1);
  std::vector<Grade> gens;
  for (Index i = 0; i < G; ++i) {
    if (!row_alive[sz(i)]) continue;
    new_row[sz(i)] = static_cast<Index>(gens.size());
    gens.push_back(rels.row_grade(i));
  }
  std::vector<Grade> rel_grades;
  std::vector<SparseColumn> rel_cols;
  for (Index j = 0; j < R; ++j) {
    if (!kept[sz(j)]) continue;
    SparseColumn col;
    for (Index i = 0; i < G; ++i) {
      const FieldElem v = cols[sz(j)][sz(i)];
      if (v == 0) continue;
      if (!row_alive[sz(i)]) throw std::logic_error("minimize_presentation: entry left in an eliminated row");
      col.push_back({new_row[sz(i)], v});
    }
    rel_grades.push_back(rels.col_grade(j));
    rel_cols.push_back(std::move(col));
  }
  return Presentation(GradedMatrix(F, p.dim(), std::move(gens), std::move(rel_grades), std::move(rel_cols)));
}

KernelBasis kernel_basis(const GradedMatrix& m) {
  require_graded(m, "kernel_basis");
  require_supported(m.dim(), "kernel_basis");
  const PrimeField& F = m.field();
  const Index C = m.cols();
  const bool two = m.dim() == 2;
  auto x_of = [&](Index j) { return m.col_grade(j)(0); };
  auto y_of = [&](Index j) { return two ? m.col_grade(j)(1) : 0.0; };

  std::vector<double> ys;
  for (Index j = 0; j < C; ++j) ys.push_back(y_of(j));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  struct Born {
    double x;
    Vec v;
  };
  std::vector<Born> prev;
  std::vector<Grade> gen_grades;
  std::vector<SparseColumn> gen_cols;

  for (double y : ys) {
    // Kernel of the horizontal slice at height y, as a one-parameter module in x:
    // a column that reduces to zero gives a kernel vector born at its x.
    std::vector<Index> order;
    for (Index j = 0; j < C; ++j)
      if (y_of(j) <= y) order.push_back(j);
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return x_of(a) < x_of(b); });

    Echelon reducer(F, m.rows(), C);
    std::vector<Born> cur;
    for (Index j : order) {
      Vec v = m.dense_column(j);
      Vec t(sz(C), 0);
      t[sz(j)] = 1;
      reducer.reduce(v, &t);
      if (Echelon::is_zero(v))
        cur.push_back({x_of(j), std::move(t)});
      else
        reducer.insert(std::move(v), std::move(t));
    }

    // New generators at (x, y) extend K(x-, y) + K(x, y-) to K(x, y).
    Echelon lower(F, C);
    std::size_t pi = 0, ci = 0;
    while (ci < cur.size()) {
      const double x = cur[ci].x;
      for (; pi < prev.size() && prev[pi].x <= x; ++pi) lower.insert(prev[pi].v);
      for (; ci < cur.size() && cur[ci].x == x; ++ci) {
        if (!lower.insert(cur[ci].v)) continue;
        gen_grades.push_back(two ? make_grade({x, y}) : make_grade({x}));
        gen_cols.push_back(to_sparse(cur[ci].v));
      }
    }
    prev = std::move(cur);
  }

  return {GradedMatrix(F, m.dim(), m.col_grades(), std::move(gen_grades), std::move(gen_cols))};
}

Index rank_at(const GradedMatrix& m, const Grade& x) {
  if (x.size() != m.dim()) throw DimensionError("rank_at: query grade dimension mismatch");
  Echelon span(m.field(), m.rows());
  for (Index j = 0; j < m.cols(); ++j)
    if (leq(m.col_grade(j), x)) span.insert(m.dense_column(j));
  return span.rank();
}

Index pointwise_dim(const Presentation& p, const Grade& x) {
  if (x.size() != p.dim()) throw DimensionError("pointwise_dim: query grade dimension mismatch");
  Index gens = 0;
  for (const Grade& g : p.generators()) gens += leq(g, x) ? 1 : 0;
  // columns below x only touch generators below x
  return gens - rank_at(p.relations(), x);
}

BettiNumbers betti(const Presentation& p) {
  require_supported(p.dim(), "betti");
  Presentation minimal = minimize_presentation(p);
  KernelBasis syz = kernel_basis(minimal.relations());
  const Index n = p.dim();
  if (n == 1 && syz.size() != 0) throw std::logic_error("betti: nonzero second syzygies for a one-parameter module");

  std::vector<Barcode> degrees{minimal.generator_barcode(), minimal.relation_barcode()};
  if (n == 2) degrees.push_back(syz.generators());

  Barcode even = degrees[0];
  for (std::size_t k = 2; k < degrees.size(); k += 2) even = barcode_union(even, degrees[k]);
  SignedBarcode sb(std::move(even), degrees[1]);
  return {std::move(minimal), std::move(syz), std::move(degrees), std::move(sb)};
}

Presentation homology_presentation(const ChainPair& c) {
  require_supported(c.g().dim(), "homology_presentation");
  const PrimeField& F = c.f().field();
  const KernelBasis ker = kernel_basis(c.g());
  const Index S = ker.size();
  const Index Y = c.f().rows();

  std::vector<Vec> kvecs;
  for (Index s = 0; s < S; ++s) kvecs.push_back(ker.inclusion.dense_column(s));

  std::vector<SparseColumn> rels;
  for (Index x = 0; x < c.f().cols(); ++x) {
    const Grade& gx = c.f().col_grade(x);
    Echelon basis(F, Y, S);
    for (Index s = 0; s < S; ++s) {
      if (!leq(ker.grades()[sz(s)], gx)) continue;
      Vec t(sz(S), 0);
      t[sz(s)] = 1;
      if (!basis.insert(kvecs[sz(s)], std::move(t)))
        throw std::logic_error("homology_presentation: kernel generators are dependent at grade " + to_string(gx));
    }
    Vec v = c.f().dense_column(x);
    Vec t(sz(S), 0);
    basis.reduce(v, &t);
    if (!Echelon::is_zero(v))
      throw std::logic_error("homology_presentation: boundary column " + std::to_string(x) +
                             " is not in the kernel basis at its grade");
    for (auto& coeff : t) coeff = F.neg(coeff);
    rels.push_back(to_sparse(t));
  }
  return Presentation(GradedMatrix(F, c.f().dim(), ker.grades(), c.f().col_grades(), std::move(rels)));
}

}  // namespace msb
