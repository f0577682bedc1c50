#include "msb/grade.hpp"
#include "msb/hilbert.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace msb;

namespace {
Grade g2(double x, double y) { return make_grade({x, y}); }
}  // namespace

TEST_CASE("barcode_union adds multiplicities") {
  const Barcode a(2, {g2(0, 0)});
  CHECK(barcode_union(a, a) == Barcode(2, {g2(0, 0), g2(0, 0)}));
  CHECK(barcode_union(a, Barcode(2)) == a);
  CHECK(barcode_union(Barcode(2, {g2(1, 0)}), Barcode(2, {g2(0, 1)})) == Barcode(2, {g2(1, 0), g2(0, 1)}));
  CHECK_THROWS_AS(barcode_union(a, Barcode(1)), DimensionError);
}

TEST_CASE("barcode_eq is multiset equality") {
  CHECK(barcode_eq(Barcode(2, {g2(0, 0), g2(1, 1)}), Barcode(2, {g2(1, 1), g2(0, 0)})));
  CHECK_FALSE(barcode_eq(Barcode(2, {g2(0, 0)}), Barcode(2, {g2(0, 0), g2(0, 0)})));
  // even Betti numbers of k[0,2) + k[1,3) and of k[0,3) + k[1,2) are both {0, 1}
  CHECK(barcode_eq(Barcode(1, {make_grade({0}), make_grade({1})}), Barcode(1, {make_grade({1}), make_grade({0})})));
}

TEST_CASE("negative zero is canonicalised") {
  CHECK(Barcode(1, {make_grade({-0.0})}) == Barcode(1, {make_grade({0.0})}));
  CHECK(std::signbit(Barcode(1, {make_grade({-0.0})}).bar(0)(0)) == false);
}

TEST_CASE("non-finite coordinates are rejected") {
  CHECK_THROWS_AS(make_grade({0.0, std::numeric_limits<double>::quiet_NaN()}), ValidityError);
  CHECK_THROWS_AS(Barcode(1, {Grade::Constant(1, std::numeric_limits<double>::infinity())}), ValidityError);
}

TEST_CASE("reduce_signed cancels common bars with multiplicity") {
  const Grade a = g2(0.5, 0.25);
  CHECK(reduce_signed(SignedBarcode(Barcode(2, {a}), Barcode(2, {a}))) == SignedBarcode(2));
  const SignedBarcode s(Barcode(2, {g2(0, 0), g2(1, 1), g2(1, 1)}), Barcode(2, {g2(1, 1)}));
  CHECK(reduce_signed(s) == SignedBarcode(Barcode(2, {g2(0, 0), g2(1, 1)}), Barcode(2)));

  // staircase A_3: generators and relations are disjoint, nothing cancels
  std::vector<Grade> pos, neg;
  for (int m = 0; m <= 3; ++m) pos.push_back(g2(m / 3.0, 1.0 - m / 3.0));
  for (int m = 0; m < 3; ++m) neg.push_back(g2((m + 1) / 3.0, 1.0 - m / 3.0));
  const SignedBarcode ak(Barcode(2, pos), Barcode(2, neg));
  CHECK(reduce_signed(ak) == ak);
}

TEST_CASE("reduce_signed properties on random signed barcodes") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedBarcode s(test::random_barcode(rng, static_cast<Index>(rng.below(7)), 3),
                          test::random_barcode(rng, static_cast<Index>(rng.below(7)), 3));
    const SignedBarcode r = reduce_signed(s);
    CHECK(reduce_signed(r) == r);
    CHECK(barcode_intersection(r.positive(), r.negative()).empty());
    // what was removed is the same on both sides
    CHECK(s.positive().size() - r.positive().size() == s.negative().size() - r.negative().size());
    for (const Grade& x : critical_grid(barcode_union(s.positive(), s.negative()).grades(), 2))
      CHECK(hilbert_eval(s, x) == hilbert_eval(r, x));
  }
}

TEST_CASE("barcode_union is commutative and associative") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Barcode a = test::random_barcode(rng, static_cast<Index>(rng.below(5)), 4);
    const Barcode b = test::random_barcode(rng, static_cast<Index>(rng.below(5)), 4);
    const Barcode c = test::random_barcode(rng, static_cast<Index>(rng.below(5)), 4);
    CHECK(barcode_union(a, b) == barcode_union(b, a));
    CHECK(barcode_union(barcode_union(a, b), c) == barcode_union(a, barcode_union(b, c)));
    CHECK(barcode_union(a, b).size() == a.size() + b.size());
  }
}

TEST_CASE("componentwise order is a partial order") {
  Rng rng(3);
  auto pick = [&] { return g2(static_cast<double>(rng.below(3)), static_cast<double>(rng.below(3))); };
  for (int trial = 0; trial < 500; ++trial) {
    const Grade a = pick(), b = pick(), c = pick();
    CHECK(leq(a, a));
    if (leq(a, b) && leq(b, a)) CHECK(a == b);
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    // colex extends the order
    if (leq(a, b) && a != b) CHECK(colex_less(a, b));
  }
}
