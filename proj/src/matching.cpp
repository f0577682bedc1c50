#include "msb/matching.hpp"

#include "msb/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace msb {

namespace {

void require_same_dim(const Barcode& b, const Barcode& c) {
  if (b.dim() != c.dim()) throw DimensionError("barcodes have different dimensions");
}

/// For each left bar, right indices sorted by distance; a threshold graph is
/// then a prefix of each list.
struct ThresholdGraph {
  const Eigen::MatrixXd& dist;
  std::vector<std::vector<Index>> sorted;

  explicit ThresholdGraph(const Eigen::MatrixXd& d) : dist(d), sorted(static_cast<std::size_t>(d.rows())) {
    for (Index i = 0; i < d.rows(); ++i) {
      auto& row = sorted[static_cast<std::size_t>(i)];
      row.resize(static_cast<std::size_t>(d.cols()));
      std::iota(row.begin(), row.end(), Index{0});
      std::stable_sort(row.begin(), row.end(), [&](Index a, Index b) { return d(i, a) < d(i, b); });
    }
  }

  /// Mates of a perfect matching using only edges of length <= t, if one exists.
  std::optional<std::vector<Index>> perfect_matching(double t) const {
    std::vector<std::span<const Index>> adj;
    adj.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto& row = sorted[i];
      const auto end = std::partition_point(row.begin(), row.end(),
                                            [&](Index j) { return dist(static_cast<Index>(i), j) <= t; });
      adj.emplace_back(row.data(), static_cast<std::size_t>(end - row.begin()));
    }
    HopcroftKarp hk(dist.cols(), adj);
    if (hk.run() != dist.rows()) return std::nullopt;
    return hk.mate_left();
  }
};

IndexPairs to_pairs(const std::vector<Index>& mate) {
  IndexPairs out;
  out.reserve(mate.size());
  for (std::size_t i = 0; i < mate.size(); ++i) out.emplace_back(static_cast<Index>(i), mate[i]);
  return out;
}

}  // namespace

PNorm::PNorm(double p) : p_(p) {
  if (!(p >= 1.0)) throw std::invalid_argument("p must be at least 1");
}

double PNorm::root(double t) const {
  if (is_infinite() || p_ == 1.0) return t;
  if (p_ == 2.0) return std::sqrt(t);
  return std::pow(t, 1.0 / p_);
}

bool eps_bijection_exists(const Barcode& b, const Barcode& c, double eps) {
  require_same_dim(b, c);
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
  if (b.size() != c.size()) return false;
  if (b.empty()) return true;
  const Eigen::MatrixXd d = linf_distances(b.matrix(), c.matrix());
  return ThresholdGraph(d).perfect_matching(eps).has_value();
}

MatchingResult bottleneck(const Barcode& b, const Barcode& c) {
  require_same_dim(b, c);
  if (b.size() != c.size()) return {};
  if (b.empty()) return {0.0, IndexPairs{}};

  const Eigen::MatrixXd d = linf_distances(b.matrix(), c.matrix());
  std::vector<double> candidates(d.data(), d.data() + d.size());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // every bar must reach its nearest partner
  const double lower = std::max(d.rowwise().minCoeff().maxCoeff(), d.colwise().minCoeff().maxCoeff());
  std::size_t lo = static_cast<std::size_t>(std::lower_bound(candidates.begin(), candidates.end(), lower) - candidates.begin());
  std::size_t hi = candidates.size() - 1;

  const ThresholdGraph graph(d);
  std::optional<std::vector<Index>> best;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto m = graph.perfect_matching(candidates[mid])) {
      hi = mid;
      best = std::move(m);
    } else {
      lo = mid + 1;
    }
  }
  // best belongs to the last hi tested; untested only if hi never moved
  if (!best) best = graph.perfect_matching(candidates[lo]);
  if (!best) throw std::logic_error("bottleneck: no perfect matching at the largest candidate");
  return {candidates[lo], to_pairs(*best)};
}

std::pair<Barcode, Barcode> signed_sides(const SignedBarcode& s1, const SignedBarcode& s2) {
  if (s1.dim() != s2.dim()) throw DimensionError("signed barcodes have different dimensions");
  return {barcode_union(s1.positive(), s2.negative()), barcode_union(s2.positive(), s1.negative())};
}

MatchingResult bottleneck_signed(const SignedBarcode& s1, const SignedBarcode& s2) {
  const auto [left, right] = signed_sides(s1, s2);
  return bottleneck(left, right);
}

MatchingResult wasserstein(const Barcode& b, const Barcode& c, PNorm p) {
  require_same_dim(b, c);
  if (p.is_infinite()) return bottleneck(b, c);
  if (b.size() != c.size()) return {};
  if (b.empty()) return {0.0, IndexPairs{}};

  const Eigen::MatrixXd cost = lp_power_distances(b.matrix(), c.matrix(), p.p());
  const std::vector<Index> assignment = min_cost_assignment(cost);
  double total = 0.0;
  for (Index i = 0; i < cost.rows(); ++i) total += cost(i, assignment[static_cast<std::size_t>(i)]);
  return {p.root(total), to_pairs(assignment)};
}

MatchingResult wasserstein_signed(const SignedBarcode& s1, const SignedBarcode& s2, PNorm p) {
  const auto [left, right] = signed_sides(s1, s2);
  return wasserstein(left, right, p);
}

MatchingResult brute_force_matching(const Barcode& b, const Barcode& c, PNorm p) {
  require_same_dim(b, c);
  if (b.size() != c.size()) return {};
  if (b.size() > kBruteForceLimit)
    throw std::length_error("brute_force_matching: at most " + std::to_string(kBruteForceLimit) + " bars per side");

  const Eigen::MatrixXd cost = p.is_infinite() ? linf_distances(b.matrix(), c.matrix())
                                               : lp_power_distances(b.matrix(), c.matrix(), p.p());
  std::vector<Index> perm(static_cast<std::size_t>(b.size()));
  std::iota(perm.begin(), perm.end(), Index{0});
  double best = kInfinity;
  std::vector<Index> best_perm = perm;
  do {
    double v = 0.0;
    for (Index i = 0; i < cost.rows(); ++i) {
      const double e = cost(i, perm[static_cast<std::size_t>(i)]);
      v = p.is_infinite() ? std::max(v, e) : v + e;
    }
    if (v < best) {
      best = v;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (b.empty()) best = 0.0;
  return {p.root(best), to_pairs(best_perm)};
}

double presentation_pair_cost(const Presentation& pm, const Presentation& pn, PNorm p) {
  const GradedMatrix& a = pm.relations();
  const GradedMatrix& b = pn.relations();
  if (a.dim() != b.dim()) throw DimensionError("presentation_pair_cost: dimension mismatch");
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("presentation_pair_cost: presentations have different shapes");
  for (Index j = 0; j < a.cols(); ++j)
    if (a.column(j) != b.column(j))
      throw std::invalid_argument("presentation_pair_cost: underlying matrices differ in column " + std::to_string(j));

  double total = 0.0;
  auto accumulate = [&](const std::vector<Grade>& x, const std::vector<Grade>& y) {
    for (std::size_t k = 0; k < x.size(); ++k) {
      const Eigen::ArrayXd diff = (x[k] - y[k]).cwiseAbs().array();
      if (p.is_infinite())
        total = std::max(total, diff.maxCoeff());
      else if (p.p() == 1.0)
        total += diff.sum();
      else
        total += diff.pow(p.p()).sum();
    }
  };
  accumulate(a.row_grades(), b.row_grades());
  accumulate(a.col_grades(), b.col_grades());
  return p.root(total);
}

}  // namespace msb
