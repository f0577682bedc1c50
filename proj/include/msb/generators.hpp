#pragma once

#include "msb/graded_matrix.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace msb {

/// Deterministic source of integers and reals built on std::mt19937_64, whose
/// output sequence is fixed by the C++ standard. Distributions are derived by
/// hand so results agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on {0, ..., n-1}, by rejection.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform on [-r, r].
  double symmetric(double r) { return (2.0 * unit() - 1.0) * r; }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// F_i: one generator at i, no relations.
Presentation gen_free(const Grade& i, PrimeField field = PrimeField());

/// L_{a,b}: generator at a killed at b; requires a <= b and a != b.
Presentation gen_hook(const Grade& a, const Grade& b, PrimeField field = PrimeField());

/// A_k: generators (m/k, 1 - m/k), 0 <= m <= k, with consecutive generators
/// identified at ((m+1)/k, 1 - m/k).
Presentation gen_staircase(Index k, PrimeField field = PrimeField());

/// Direct sum of m hooks L_{(j eps, j eps), ((j+1) eps, (j+1) eps)}.
Presentation gen_chain(Index m, double eps, PrimeField field = PrimeField());

/// One-parameter interval module k_[a, b).
Presentation gen_one_param_interval(double a, double b, PrimeField field = PrimeField());

/// Block-diagonal sum; all summands must share field and dimension.
Presentation direct_sum(std::span<const Presentation> summands);

/// Random presentation over F_2 with generator grades on {0..grid-1}^2 and
/// each relation at the join of a random nonempty subset of generators.
Presentation gen_random(std::uint64_t seed, Index gens, Index rels, Index grid);

struct PerturbSpec {
  double delta = 0.0;  // l-infinity budget per grade
  std::uint64_t seed = 0;
};

struct Perturbed {
  Presentation presentation;
  double cost_l1;    // realised presentation_pair_cost with p = 1
  double cost_linf;  // realised presentation_pair_cost with p = inf
};

/// Shifts every grade by an independent uniform vector in [-delta, delta]^n,
/// then raises each relation grade to the join of its rows' grades. The
/// underlying matrix is unchanged.
Perturbed perturb(const Presentation& pr, const PerturbSpec& spec);

}  // namespace msb
