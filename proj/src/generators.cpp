#include "msb/generators.hpp"

#include "msb/matching.hpp"

#include <string>

namespace msb {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % n;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Presentation gen_free(const Grade& i, PrimeField field) {
  return Presentation(GradedMatrix(field, i.size(), {i}, {}, {}));
}

Presentation gen_hook(const Grade& a, const Grade& b, PrimeField field) {
  if (a.size() != b.size()) throw DimensionError("gen_hook: dimension mismatch");
  if (!leq(a, b) || a == b) throw std::invalid_argument("gen_hook: need a < b, got " + to_string(a) + " and " + to_string(b));
  return Presentation(GradedMatrix(field, a.size(), {a}, {b}, {{{0, 1}}}));
}

Presentation gen_staircase(Index k, PrimeField field) {
  if (k < 1) throw std::invalid_argument("gen_staircase: k must be positive");
  const auto kd = static_cast<double>(k);
  auto coord = [kd](Index m) { return static_cast<double>(m) / kd; };
  std::vector<Grade> gens, rels;
  std::vector<SparseColumn> cols;
  for (Index m = 0; m <= k; ++m) gens.push_back(make_grade({coord(m), 1.0 - coord(m)}));
  for (Index m = 0; m < k; ++m) {
    rels.push_back(make_grade({coord(m + 1), 1.0 - coord(m)}));
    cols.push_back({{m, 1}, {m + 1, field.neg(1)}});
  }
  return Presentation(GradedMatrix(field, 2, std::move(gens), std::move(rels), std::move(cols)));
}

Presentation gen_chain(Index m, double eps, PrimeField field) {
  if (m < 1) throw std::invalid_argument("gen_chain: m must be positive");
  if (!(eps > 0.0)) throw std::invalid_argument("gen_chain: eps must be positive");
  std::vector<Presentation> hooks;
  for (Index j = 0; j < m; ++j) {
    const double lo = static_cast<double>(j) * eps;
    const double hi = static_cast<double>(j + 1) * eps;
    hooks.push_back(gen_hook(make_grade({lo, lo}), make_grade({hi, hi}), field));
  }
  return direct_sum(hooks);
}

Presentation gen_one_param_interval(double a, double b, PrimeField field) {
  if (!(a < b)) throw std::invalid_argument("gen_one_param_interval: need a < b");
  return gen_hook(make_grade({a}), make_grade({b}), field);
}

Presentation direct_sum(std::span<const Presentation> summands) {
  if (summands.empty()) throw std::invalid_argument("direct_sum: no summands");
  const PrimeField field = summands.front().field();
  const Index dim = summands.front().dim();
  std::vector<Grade> gens, rels;
  std::vector<SparseColumn> cols;
  for (const Presentation& p : summands) {
    if (p.dim() != dim) throw DimensionError("direct_sum: dimension mismatch");
    if (!(p.field() == field)) throw std::invalid_argument("direct_sum: fields differ");
    const auto offset = static_cast<Index>(gens.size());
    gens.insert(gens.end(), p.generators().begin(), p.generators().end());
    for (Index j = 0; j < p.num_relations(); ++j) {
      SparseColumn col = p.relations().column(j);
      for (Entry& e : col) e.row += offset;
      cols.push_back(std::move(col));
      rels.push_back(p.relations().col_grade(j));
    }
  }
  return Presentation(GradedMatrix(field, dim, std::move(gens), std::move(rels), std::move(cols)));
}

Presentation gen_random(std::uint64_t seed, Index gens, Index rels, Index grid) {
  if (gens < 0 || rels < 0) throw std::invalid_argument("gen_random: counts must be nonnegative");
  if (grid < 1) throw std::invalid_argument("gen_random: grid must be positive");
  Rng rng(seed);
  const auto g = static_cast<std::uint64_t>(grid);
  std::vector<Grade> gen_grades;
  for (Index i = 0; i < gens; ++i)
    gen_grades.push_back(make_grade({static_cast<double>(rng.below(g)), static_cast<double>(rng.below(g))}));
  if (gens == 0) rels = 0;

  std::vector<Grade> rel_grades;
  std::vector<SparseColumn> cols;
  for (Index j = 0; j < rels; ++j) {
    SparseColumn col;
    for (Index i = 0; i < gens; ++i)
      if (rng.below(2) == 1) col.push_back({i, 1});
    if (col.empty()) col.push_back({static_cast<Index>(rng.below(static_cast<std::uint64_t>(gens))), 1});
    Grade grade = gen_grades[static_cast<std::size_t>(col.front().row)];
    for (const Entry& e : col) grade = join(grade, gen_grades[static_cast<std::size_t>(e.row)]);
    rel_grades.push_back(std::move(grade));
    cols.push_back(std::move(col));
  }
  return Presentation(GradedMatrix(PrimeField(2), 2, std::move(gen_grades), std::move(rel_grades), std::move(cols)));
}

Perturbed perturb(const Presentation& pr, const PerturbSpec& spec) {
  if (!(spec.delta >= 0.0)) throw std::invalid_argument("perturb: delta must be nonnegative");
  Rng rng(spec.seed);
  const GradedMatrix& m = pr.relations();
  auto shift = [&](const Grade& g) {
    Grade out = g;
    for (Index k = 0; k < out.size(); ++k) out(k) += rng.symmetric(spec.delta);
    return out;
  };
  std::vector<Grade> gens, rels;
  for (const Grade& g : m.row_grades()) gens.push_back(shift(g));
  for (Index j = 0; j < m.cols(); ++j) {
    Grade g = shift(m.col_grade(j));
    for (const Entry& e : m.column(j)) g = join(g, gens[static_cast<std::size_t>(e.row)]);
    rels.push_back(std::move(g));
  }
  std::vector<SparseColumn> cols;
  for (Index j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  Presentation out(GradedMatrix(m.field(), m.dim(), std::move(gens), std::move(rels), std::move(cols)));
  const double l1 = presentation_pair_cost(pr, out, PNorm(1.0));
  const double linf = presentation_pair_cost(pr, out, PNorm::infinity());
  return {std::move(out), l1, linf};
}

}  // namespace msb
