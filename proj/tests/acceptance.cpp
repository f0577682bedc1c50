// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "msb/generators.hpp"
#include "msb/hilbert.hpp"
#include "msb/io.hpp"
#include "msb/matching.hpp"
#include "msb/resolution.hpp"
#include "msb/stability.hpp"
#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

using namespace msb;

namespace {

Grade g2(double x, double y) { return make_grade({x, y}); }

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("[%s] %2d %s: %s\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) { return format_double(v); }

SignedBarcode random_signed(Rng& rng, Index max_side, Index grid) {
  const auto a = static_cast<Index>(rng.below(static_cast<std::uint64_t>(max_side + 1)));
  const auto b = static_cast<Index>(rng.below(static_cast<std::uint64_t>(max_side + 1)));
  return SignedBarcode(test::random_barcode(rng, a, grid), test::random_barcode(rng, b, grid));
}

Outcome two_generators() {
  const auto t0 = Clock::now();
  const double e = 1.0;
  const Presentation m = gen_free(g2(0, 0));
  const Presentation n(GradedMatrix(PrimeField(2), 2, {g2(e, 0), g2(0, e)}, {g2(e, e)}, {{{0, 1}, {1, 1}}}));
  const BettiNumbers bm = betti(m), bn = betti(n);
  bool ok = bm.degrees[0] == Barcode(2, {g2(0, 0)}) && bm.degrees[1].empty() && bm.degrees[2].empty();
  ok = ok && bn.degrees[0] == Barcode(2, {g2(e, 0), g2(0, e)}) && bn.degrees[1] == Barcode(2, {g2(e, e)}) &&
       bn.degrees[2].empty();
  const double db = bottleneck_signed(bm.signed_barcode, bn.signed_barcode).value;
  const double dw = wasserstein_signed(bm.signed_barcode, bn.signed_barcode, PNorm(1)).value;
  const auto [l, r] = signed_sides(bm.signed_barcode, bn.signed_barcode);
  const double ob = brute_force_matching(l, r, PNorm::infinity()).value;
  const double ow = brute_force_matching(l, r, PNorm(1)).value;
  const double ms = seconds_since(t0) * 1e3;
  ok = ok && db == 1.0 && dw == 2.0 && ob == db && ow == dw && ms < 10.0;
  return {ok, "bottleneck " + fmt(db) + ", W1 " + fmt(dw) + ", oracle " + fmt(ob) + "/" + fmt(ow) + ", " +
                  fmt(std::round(ms * 1000) / 1000) + " ms"};
}

Outcome staircase() {
  const SignedBarcode f01 = betti(gen_free(g2(0, 1))).signed_barcode;
  const SignedBarcode f10 = betti(gen_free(g2(1, 0))).signed_barcode;
  const double direct = bottleneck_signed(f01, f10).value;
  bool ok = direct == 1.0;
  std::string bad;
  for (Index k = 2; k <= 10; ++k) {
    const SignedBarcode ak = betti(gen_staircase(k)).signed_barcode;
    const double d = bottleneck_signed(f01, ak).value;
    const double expected = 1.0 / static_cast<double>(k);
    if (d != expected) {
      ok = false;
      bad += " k=" + std::to_string(k) + ":" + fmt(d) + "!=" + fmt(expected);
    }
    if (k <= 4) {
      const auto [l, r] = signed_sides(f01, ak);
      if (brute_force_matching(l, r, PNorm::infinity()).value != d) {
        ok = false;
        bad += " oracle k=" + std::to_string(k);
      }
    }
    if (k >= 3) {
      const double legs = d + bottleneck_signed(ak, f10).value;
      if (!(legs < direct)) {
        ok = false;
        bad += " triangle k=" + std::to_string(k);
      }
    }
  }
  return {ok, "d(F01,F10) = " + fmt(direct) + (bad.empty() ? ", all k exact" : ";" + bad)};
}

Outcome chain() {
  bool ok = true;
  std::string detail;
  const SignedBarcode zero(2);
  for (Index m : {1, 2, 3, 5}) {
    const SignedBarcode bb = betti(gen_chain(m, 1.0)).signed_barcode;
    const SignedBarcode hb = minimal_hilbert_decomposition(gen_chain(m, 1.0));
    const double md = static_cast<double>(m);
    const double b_hb = bottleneck_signed(hb, zero).value;
    const double b_bb = bottleneck_signed(bb, zero).value;
    const double w_hb = wasserstein_signed(hb, zero, PNorm(1)).value;
    const double w_bb = wasserstein_signed(bb, zero, PNorm(1)).value;
    ok = ok && b_hb == md && b_bb == 1.0 && w_hb == 2 * md && w_bb == 2 * md;
    detail += " m=" + std::to_string(m) + ":" + fmt(b_hb) + "/" + fmt(b_bb) + "/" + fmt(w_hb) + "/" + fmt(w_bb);
  }
  return {ok, "HB bottleneck/BB bottleneck/HB W1/BB W1" + detail};
}

Outcome oracle() {
  const auto t0 = Clock::now();
  Rng rng(derive_seed(4, 0));
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<Index>(rng.below(7));
    const Barcode b = test::random_barcode(rng, k, 8), c = test::random_barcode(rng, k, 8);
    if (bottleneck(b, c).value != brute_force_matching(b, c, PNorm::infinity()).value) ++mismatches;
    if (wasserstein(b, c, PNorm(1)).value != brute_force_matching(b, c, PNorm(1)).value) ++mismatches;
    if (std::abs(wasserstein(b, c, PNorm(2)).value - brute_force_matching(b, c, PNorm(2)).value) > 1e-12) ++mismatches;
  }
  const double s = seconds_since(t0);
  return {mismatches == 0 && s < 5.0, std::to_string(mismatches) + " mismatches, " + fmt(std::round(s * 1e3) / 1e3) + " s"};
}

std::vector<Presentation> corpus() {
  std::vector<Presentation> out;
  Rng rng(derive_seed(5, 0));
  for (int i = 0; i < 100; ++i) {
    const auto gens = static_cast<Index>(1 + rng.below(8));
    const auto rels = static_cast<Index>(rng.below(9));
    out.push_back(gen_random(rng.next(), gens, rels, 8));
  }
  return out;
}

Outcome hilbert_identity(const std::vector<Presentation>& presentations) {
  const auto t0 = Clock::now();
  long long points = 0, bad = 0;
  for (const Presentation& p : presentations) {
    const SignedBarcode s = betti(p).signed_barcode;
    // joins of all subsets of grades lie on the coordinate product grid
    for (const Grade& x : critical_grid(test::all_grades(p.relations()), 2)) {
      ++points;
      if (hilbert_eval(s, x) != pointwise_dim(p, x)) ++bad;
    }
  }
  const double s = seconds_since(t0);
  return {bad == 0 && s < 10.0, std::to_string(points) + " points, " + std::to_string(bad) + " mismatches, " +
                                    fmt(std::round(s * 1e3) / 1e3) + " s"};
}

Outcome syzygy_bound(const std::vector<Presentation>& presentations) {
  Index nonempty = 0;
  for (const Presentation& p : presentations)
    if (kernel_basis(betti(p).syzygies.inclusion).size() != 0) ++nonempty;
  return {nonempty == 0, std::to_string(nonempty) + " of " + std::to_string(presentations.size()) + " with beta3 != 0"};
}

StabilityReport stability_run() {
  StabilityConfig cfg;
  cfg.trials = 200;
  cfg.deltas = {0.01, 0.05, 0.1};
  cfg.seed = 7;
  return check_stability(cfg);
}

Outcome prop63() {
  Rng rng(derive_seed(9, 0));
  int triples = 0, violations = 0;
  while (triples < 200) {
    const SignedBarcode s1 = random_signed(rng, 5, 6), s2 = random_signed(rng, 5, 6), s3 = random_signed(rng, 5, 6);
    auto net = [](const SignedBarcode& s) { return s.positive().size() - s.negative().size(); };
    if (net(s1) != net(s2) || net(s2) != net(s3)) continue;
    ++triples;
    const PNorm p1(1);
    const double d12 = wasserstein_signed(s1, s2, p1).value;
    const double d23 = wasserstein_signed(s2, s3, p1).value;
    const double d13 = wasserstein_signed(s1, s3, p1).value;
    if (!(d13 <= d12 + d23 + 1e-9)) ++violations;
    if ((d12 == 0.0) != (reduce_signed(s1) == reduce_signed(s2))) ++violations;
    if (std::abs(wasserstein_signed(reduce_signed(s1), reduce_signed(s2), p1).value - d12) > 1e-9) ++violations;
    // a shared bar on both sides is invisible too
    const SignedBarcode padded(barcode_union(s1.positive(), Barcode(2, {g2(1, 2)})),
                               barcode_union(s1.negative(), Barcode(2, {g2(1, 2)})));
    if (wasserstein_signed(padded, s1, p1).value != 0.0) ++violations;
  }
  return {violations == 0, std::to_string(triples) + " triples, " + std::to_string(violations) + " violations"};
}

Outcome remark53() {
  const Presentation m = direct_sum(std::vector{gen_one_param_interval(0, 2), gen_one_param_interval(1, 3)});
  const Presentation n = direct_sum(std::vector{gen_one_param_interval(0, 3), gen_one_param_interval(1, 2)});
  const SignedBarcode bm = betti(m).signed_barcode, bn = betti(n).signed_barcode;
  const double d = bottleneck_signed(bm, bn).value;
  // distinct modules: k_[0,2) + k_[1,3) has no bar [0,3)
  const bool distinct = !(minimize_presentation(m).relations() == minimize_presentation(n).relations());
  bool ok = d == 0.0 && hilbert_equal(bm, bn) && distinct;
  Rng rng(derive_seed(10, 0));
  int agree = 0, zero = 0;
  for (int i = 0; i < 50; ++i) {
    const Presentation a = gen_random(rng.next(), 1 + static_cast<Index>(rng.below(4)), static_cast<Index>(rng.below(4)), 3);
    // every other pair shares its Hilbert function by construction
    const Presentation b = i % 2 == 0 ? gen_random(rng.next(), 1 + static_cast<Index>(rng.below(4)),
                                                   static_cast<Index>(rng.below(4)), 3)
                                      : minimize_presentation(a);
    const SignedBarcode sa = betti(a).signed_barcode, sb = betti(b).signed_barcode;
    const bool dz = bottleneck_signed(sa, sb).value == 0.0;
    zero += dz ? 1 : 0;
    agree += dz == hilbert_equal(sa, sb) ? 1 : 0;
  }
  ok = ok && agree == 50;
  return {ok, "pair distance " + fmt(d) + (distinct ? ", modules distinct" : ", modules equal?") + "; " +
                  std::to_string(agree) + "/50 random pairs agree (" + std::to_string(zero) + " at distance 0)"};
}

Outcome scale() {
  Rng rng(derive_seed(11, 0));
  auto uniform = [&](Index k) {
    Eigen::MatrixXd m(k, 2);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < 2; ++j) m(i, j) = rng.unit() * 100.0;
    return Barcode::from_rows(2, m);
  };
  const Barcode b = uniform(2000), c = uniform(2000);
  auto t0 = Clock::now();
  const double db = bottleneck(b, c).value;
  const double sb = seconds_since(t0);
  const Barcode w1 = uniform(500), w2 = uniform(500);
  t0 = Clock::now();
  const double dw = wasserstein(w1, w2, PNorm(1)).value;
  const double sw = seconds_since(t0);
  return {std::isfinite(db) && std::isfinite(dw) && sb < 10.0 && sw < 10.0,
          "bottleneck 2000 bars " + fmt(std::round(sb * 1e3) / 1e3) + " s, W1 500 bars " +
              fmt(std::round(sw * 1e3) / 1e3) + " s"};
}

}  // namespace

int main() {
  report(1, "free module vs. two generators joined at (1,1)", two_generators);
  report(2, "staircase A_k: exact 1/k and triangle failure", staircase);
  report(3, "hook chain: HB vs Betti signed barcode", chain);
  report(4, "solvers match exhaustive search", oracle);
  const std::vector<Presentation> presentations = corpus();
  report(5, "Hilbert function identity", [&] { return hilbert_identity(presentations); });
  report(6, "resolution length at most 2", [&] { return syzygy_bound(presentations); });

  std::optional<StabilityReport> stab;
  double stab_seconds = 0.0;
  auto run_stability = [&] {
    if (!stab) {
      const auto t0 = Clock::now();
      stab = stability_run();
      stab_seconds = seconds_since(t0);
    }
  };
  report(7, "bottleneck stability fuzz", [&] {
    run_stability();
    return Outcome{stab->bottleneck_violations == 0 && stab_seconds < 60.0,
                   std::to_string(stab->trials.size()) + " trials, " + std::to_string(stab->bottleneck_violations) +
                       " violations, max ratio " + fmt(stab->max_bottleneck_ratio) + ", " +
                       fmt(std::round(stab_seconds * 1e3) / 1e3) + " s"};
  });
  report(8, "signed 1-Wasserstein stability fuzz", [&] {
    run_stability();
    return Outcome{stab->wasserstein_violations == 0,
                   std::to_string(stab->trials.size()) + " trials, " + std::to_string(stab->wasserstein_violations) +
                       " violations, max ratio " + fmt(stab->max_wasserstein_ratio)};
  });
  report(9, "signed 1-Wasserstein metric properties", prop63);
  report(10, "zero distance iff equal Hilbert functions", remark53);
  report(11, "scale smoke test", scale);

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
