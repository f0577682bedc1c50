#pragma once

#include "msb/graded_matrix.hpp"
#include "msb/grade.hpp"

#include <limits>
#include <optional>
#include <utility>
#include <vector>

namespace msb {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

using IndexPairs = std::vector<std::pair<Index, Index>>;

/// Optimal value of a matching problem between two barcodes. `matching`
/// pairs row indices of the two (sorted) barcodes and is absent exactly when
/// the value is infinite.
struct MatchingResult {
  double value = kInfinity;
  std::optional<IndexPairs> matching;

  bool finite() const { return matching.has_value(); }
};

/// Exponent p in [1, inf] of an l_p cost.
class PNorm {
 public:
  explicit PNorm(double p);
  static PNorm infinity() { return PNorm(kInfinity); }

  double p() const { return p_; }
  bool is_infinite() const { return p_ == kInfinity; }

  /// t^(1/p), exact for p = 1.
  double root(double t) const;

 private:
  double p_;
};

/// True iff some bijection moves every bar by at most eps in l-infinity.
bool eps_bijection_exists(const Barcode& b, const Barcode& c, double eps);

/// min over bijections of the largest l-infinity displacement. The value is
/// always one of the pairwise l-infinity distances; the smallest feasible one
/// is returned.
MatchingResult bottleneck(const Barcode& b, const Barcode& c);

/// Bottleneck between s1.positive + s2.negative and s2.positive + s1.negative.
/// No cancellation is applied first.
MatchingResult bottleneck_signed(const SignedBarcode& s1, const SignedBarcode& s2);

/// (min over bijections of sum ||i - h(i)||_p^p)^(1/p); p = inf is bottleneck.
MatchingResult wasserstein(const Barcode& b, const Barcode& c, PNorm p);

MatchingResult wasserstein_signed(const SignedBarcode& s1, const SignedBarcode& s2, PNorm p);

/// The two sides matched by the signed dissimilarities.
std::pair<Barcode, Barcode> signed_sides(const SignedBarcode& s1, const SignedBarcode& s2);

inline constexpr Index kBruteForceLimit = 8;

/// Exhaustive search over all bijections; reference for the solvers above.
MatchingResult brute_force_matching(const Barcode& b, const Barcode& c, PNorm p);

/// Label displacement between two presentations with the same underlying
/// matrix: (sum over rows and columns of ||g_M - g_N||_p^p)^(1/p), or the
/// largest l-infinity displacement for p = inf.
double presentation_pair_cost(const Presentation& pm, const Presentation& pn, PNorm p);

}  // namespace msb
