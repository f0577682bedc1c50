#pragma once

#include "msb/grade.hpp"

#include <cstdint>
#include <vector>

namespace msb {

/// Fuzzing of the two stability bounds on random two-parameter presentations:
///   bottleneck_signed(bb(M), bb(N))        <= 3 * c_inf
///   wasserstein_signed(HB(M), HB(N), p=1)  <= 2 * c_1
/// where N is a perturbation of M sharing its matrix, and c_inf, c_1 are the
/// realised label displacements (upper bounds on the module distances).
struct StabilityConfig {
  Index trials = 200;
  std::vector<double> deltas{0.05};  // trial t uses deltas[t % size]
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: MSB_THREADS or hardware concurrency
  Index max_gens = 6;
  Index max_rels = 6;
  Index grid = 8;
  double tolerance = 1e-9;
};

struct StabilityTrial {
  double delta;
  double cost_l1;
  double cost_linf;
  double bottleneck;
  double wasserstein;
  double bottleneck_ratio;   // bottleneck / (3 c_inf), 0 when both vanish
  double wasserstein_ratio;  // wasserstein / (2 c_1)
  bool bottleneck_ok;
  bool wasserstein_ok;
};

struct StabilityReport {
  std::vector<StabilityTrial> trials;
  double max_bottleneck_ratio = 0.0;
  double max_wasserstein_ratio = 0.0;
  Index bottleneck_violations = 0;
  Index wasserstein_violations = 0;

  bool passed() const { return bottleneck_violations == 0 && wasserstein_violations == 0; }
};

/// Trials are independent and seeded per index, so the report does not depend
/// on the number of worker threads.
StabilityReport check_stability(const StabilityConfig& cfg);

/// Worker count: `requested` if nonzero, else MSB_THREADS, else the hardware
/// concurrency; never more than `jobs`, never less than 1.
unsigned worker_count(unsigned requested, std::size_t jobs);

}  // namespace msb
