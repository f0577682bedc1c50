#include "msb/stability.hpp"

#include "msb/generators.hpp"
#include "msb/matching.hpp"
#include "msb/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace msb {

namespace {

double ratio(double d, double bound) {
  if (bound > 0.0) return d / bound;
  return d == 0.0 ? 0.0 : kInfinity;
}

StabilityTrial run_trial(const StabilityConfig& cfg, Index t) {
  Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
  const auto gens = static_cast<Index>(1 + rng.below(static_cast<std::uint64_t>(cfg.max_gens)));
  const auto rels = static_cast<Index>(rng.below(static_cast<std::uint64_t>(cfg.max_rels + 1)));
  const Presentation base = gen_random(rng.next(), gens, rels, cfg.grid);
  const double delta = cfg.deltas[static_cast<std::size_t>(t) % cfg.deltas.size()];
  const Perturbed moved = perturb(base, {delta, rng.next()});

  const BettiNumbers bm = betti(base);
  const BettiNumbers bn = betti(moved.presentation);
  StabilityTrial tr{};
  tr.delta = delta;
  tr.cost_l1 = moved.cost_l1;
  tr.cost_linf = moved.cost_linf;
  tr.bottleneck = bottleneck_signed(bm.signed_barcode, bn.signed_barcode).value;
  tr.wasserstein =
      wasserstein_signed(reduce_signed(bm.signed_barcode), reduce_signed(bn.signed_barcode), PNorm(1.0)).value;
  tr.bottleneck_ratio = ratio(tr.bottleneck, 3.0 * tr.cost_linf);
  tr.wasserstein_ratio = ratio(tr.wasserstein, 2.0 * tr.cost_l1);
  tr.bottleneck_ok = tr.bottleneck <= 3.0 * tr.cost_linf + cfg.tolerance;
  tr.wasserstein_ok = tr.wasserstein <= 2.0 * tr.cost_l1 + cfg.tolerance;
  return tr;
}

}  // namespace

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("MSB_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::size_t>(n, 1, std::max<std::size_t>(jobs, 1)));
}

StabilityReport check_stability(const StabilityConfig& cfg) {
  if (cfg.deltas.empty()) throw std::invalid_argument("check_stability: no deltas");
  for (double d : cfg.deltas)
    if (!(d >= 0.0)) throw std::invalid_argument("check_stability: deltas must be nonnegative");
  if (cfg.trials < 0 || cfg.max_gens < 1 || cfg.max_rels < 0)
    throw std::invalid_argument("check_stability: bad trial parameters");

  StabilityReport report;
  report.trials.resize(static_cast<std::size_t>(cfg.trials));
  std::atomic<Index> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto work = [&] {
    for (Index t = next++; t < cfg.trials; t = next++) {
      try {
        report.trials[static_cast<std::size_t>(t)] = run_trial(cfg, t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned workers = worker_count(cfg.threads, report.trials.size());
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  for (const StabilityTrial& tr : report.trials) {
    report.max_bottleneck_ratio = std::max(report.max_bottleneck_ratio, tr.bottleneck_ratio);
    report.max_wasserstein_ratio = std::max(report.max_wasserstein_ratio, tr.wasserstein_ratio);
    report.bottleneck_violations += tr.bottleneck_ok ? 0 : 1;
    report.wasserstein_violations += tr.wasserstein_ok ? 0 : 1;
  }
  return report;
}

}  // namespace msb
