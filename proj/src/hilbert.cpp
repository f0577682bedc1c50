#include "msb/hilbert.hpp"

#include "msb/matching.hpp"
#include "msb/resolution.hpp"

#include <algorithm>

namespace msb {

long long hilbert_eval(const SignedBarcode& s, const Grade& x) {
  if (x.size() != s.dim()) throw DimensionError("hilbert_eval: query grade dimension mismatch");
  return static_cast<long long>(s.positive().count_below(x)) - static_cast<long long>(s.negative().count_below(x));
}

SignedBarcode minimal_hilbert_decomposition(const Presentation& p) { return reduce_signed(betti(p).signed_barcode); }

bool hilbert_equal(const SignedBarcode& s1, const SignedBarcode& s2) {
  if (s1.dim() != s2.dim()) throw DimensionError("hilbert_equal: dimension mismatch");
  return reduce_signed(s1) == reduce_signed(s2);
}

double hilbert_distance(const SignedBarcode& s1, const SignedBarcode& s2) {
  return wasserstein_signed(reduce_signed(s1), reduce_signed(s2), PNorm(1.0)).value;
}

std::vector<Grade> critical_grid(std::span<const Grade> grades, Index dim) {
  std::vector<std::vector<double>> axes(static_cast<std::size_t>(dim));
  for (const Grade& g : grades) {
    if (g.size() != dim) throw DimensionError("critical_grid: grade dimension mismatch");
    for (Index k = 0; k < dim; ++k) axes[static_cast<std::size_t>(k)].push_back(g(k));
  }
  for (auto& axis : axes) {
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
    axis.insert(axis.begin(), axis.empty() ? 0.0 : axis.front() - 1.0);
  }
  std::vector<Grade> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  for (;;) {
    Grade g(dim);
    for (Index k = 0; k < dim; ++k) g(k) = axes[static_cast<std::size_t>(k)][idx[static_cast<std::size_t>(k)]];
    out.push_back(std::move(g));
    Index k = 0;
    for (; k < dim; ++k) {
      auto& i = idx[static_cast<std::size_t>(k)];
      if (++i < axes[static_cast<std::size_t>(k)].size()) break;
      i = 0;
    }
    if (k == dim) break;
  }
  return out;
}

}  // namespace msb
