#include "msb/bifiltration.hpp"

#include "msb/io.hpp"
#include "msb/resolution.hpp"

#include <algorithm>
#include <map>

namespace msb {

Bifiltration::Bifiltration(PrimeField field, Index dim, std::vector<Cell> cells)
    : field_(field), dim_(dim), cells_(std::move(cells)) {
  const auto here = [](std::size_t c) { return "cell " + std::to_string(c) + ": "; };
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    Cell& cell = cells_[c];
    if (cell.grade.size() != dim_) throw DimensionError(here(c) + "grade has the wrong dimension");
    check_finite(cell.grade);
    if (cell.dim < 0) throw ValidityError(here(c) + "negative dimension");
    if (cell.dim == 0 && !cell.boundary.empty()) throw ValidityError(here(c) + "a vertex has no boundary");
    for (Entry& e : cell.boundary) {
      if (e.row < 0 || static_cast<std::size_t>(e.row) >= c)
        throw ValidityError(here(c) + "boundary refers to cell " + std::to_string(e.row) + ", which is not earlier");
      const Cell& face = cells_[static_cast<std::size_t>(e.row)];
      if (face.dim != cell.dim - 1)
        throw ValidityError(here(c) + "boundary cell " + std::to_string(e.row) + " has dimension " + std::to_string(face.dim));
      if (!leq(face.grade, cell.grade))
        throw ValidityError(here(c) + "enters at " + to_string(cell.grade) + " before its face " +
                            std::to_string(e.row) + " at " + to_string(face.grade));
      e.value = field_.reduce(e.value);
    }
    std::map<Index, FieldElem> dd;
    for (const Entry& e : cell.boundary)
      for (const Entry& f : cells_[static_cast<std::size_t>(e.row)].boundary)
        dd[f.row] = field_.add(dd[f.row], field_.mul(e.value, f.value));
    for (const auto& [idx, v] : dd)
      if (v != 0) throw ValidityError(here(c) + "boundary of boundary is nonzero");
  }
}

ChainPair boundary_pair(const Bifiltration& bf, Index degree) {
  if (degree < 0) throw std::invalid_argument("homology degree must be nonnegative");
  // local index of each cell within its dimension
  std::vector<Index> local(bf.cells().size());
  std::vector<std::vector<Grade>> grades(3);
  std::vector<std::vector<SparseColumn>> columns(3);  // boundaries of degree-1, degree, degree+1 cells
  for (std::size_t c = 0; c < bf.cells().size(); ++c) {
    const Cell& cell = bf.cells()[c];
    const Index slot = cell.dim - (degree - 1);
    if (slot < 0 || slot > 2) continue;
    auto& gs = grades[static_cast<std::size_t>(slot)];
    local[c] = static_cast<Index>(gs.size());
    gs.push_back(cell.grade);
    SparseColumn col;
    for (const Entry& e : cell.boundary) col.push_back({local[static_cast<std::size_t>(e.row)], e.value});
    columns[static_cast<std::size_t>(slot)].push_back(std::move(col));
  }
  GradedMatrix g(bf.field(), bf.dim(), grades[0], grades[1], std::move(columns[1]));
  GradedMatrix f(bf.field(), bf.dim(), grades[1], grades[2], std::move(columns[2]));
  return ChainPair(std::move(f), std::move(g));
}

Presentation chain_to_presentation(const Bifiltration& bf, Index degree) {
  return homology_presentation(boundary_pair(bf, degree));
}

Bifiltration parse_bifiltration(std::string_view text) {
  detail::LineReader in(text);
  {
    const auto& toks = in.next("mbif");
    if (toks[0].text != "mbif") in.fail(toks[0], "expected magic 'mbif'");
    in.expect_tokens(toks, 2, "mbif");
    if (toks[1].text != "1") in.fail(toks[1], "unsupported format version");
  }
  const PrimeField field = detail::parse_field(in);
  const Index dim = detail::parse_dim(in);
  const std::size_t n = in.count(in.keyword("cells"));
  const auto d = static_cast<std::size_t>(dim);
  std::vector<Cell> cells;
  for (std::size_t c = 0; c < n; ++c) {
    const auto& toks = in.next("cell");
    if (toks.size() < d + 2) in.fail(toks.back(), "cell needs a dimension, a grade and an entry count");
    Cell cell;
    const long long cd = in.integer(toks[0]);
    if (cd < 0) in.fail(toks[0], "cell dimension must be nonnegative");
    cell.dim = static_cast<Index>(cd);
    cell.grade = detail::parse_grade(in, toks, 1, dim);
    const std::size_t nnz = in.count(toks[d + 1]);
    in.expect_tokens(toks, d + 2 + nnz, "cell");
    for (std::size_t e = 0; e < nnz; ++e) {
      const auto [idx, coeff] = in.entry(toks[d + 2 + e], static_cast<Index>(c));
      cell.boundary.push_back({idx, field.reduce(coeff)});
    }
    cells.push_back(std::move(cell));
  }
  in.expect_end();
  try {
    return Bifiltration(field, dim, std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw ParseError(in.line(), 1, e.what());
  }
}

std::string serialize_bifiltration(const Bifiltration& bf) {
  std::string out = "mbif 1\nfield " + std::to_string(bf.field().characteristic()) + "\nn " + std::to_string(bf.dim()) +
                    "\ncells " + std::to_string(bf.cells().size()) + '\n';
  for (const Cell& c : bf.cells()) {
    out += std::to_string(c.dim) + ' ';
    detail::append_grade(out, c.grade);
    out += ' ' + std::to_string(c.boundary.size());
    for (const Entry& e : c.boundary) out += ' ' + std::to_string(e.row) + ':' + std::to_string(e.value);
    out += '\n';
  }
  return out;
}

}  // namespace msb
