#pragma once

#include "msb/graded_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace msb {

struct Cell {
  Index dim = 0;
  Grade grade;
  std::vector<Entry> boundary;  // faces by cell index, with coefficients
};

/// One-critical filtered cell complex: each cell enters at a single grade,
/// no earlier than its faces.
class Bifiltration {
 public:
  /// Validates monotonicity, face dimensions, index order and d o d = 0.
  Bifiltration(PrimeField field, Index dim, std::vector<Cell> cells);

  const PrimeField& field() const { return field_; }
  Index dim() const { return dim_; }
  const std::vector<Cell>& cells() const { return cells_; }

 private:
  PrimeField field_;
  Index dim_;
  std::vector<Cell> cells_;
};

Bifiltration parse_bifiltration(std::string_view text);
std::string serialize_bifiltration(const Bifiltration& bf);

/// (d_{k+1}, d_k) between the graded chain groups in degrees k+1, k, k-1.
ChainPair boundary_pair(const Bifiltration& bf, Index degree);

/// Presentation of H_degree of the sublevel-set filtration.
Presentation chain_to_presentation(const Bifiltration& bf, Index degree);

}  // namespace msb
