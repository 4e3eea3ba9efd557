#include <doctest.h>

#include <random>

#include "laumon/series.hpp"

using namespace laumon;

namespace {
Scalar x(int i) { return Scalar::x(i); }
}

TEST_CASE("geometric expansion of 1/(u-a)") {
  Scalar a = x(1);
  RationalU f(UPoly(Scalar(Q(1))), UPoly::linear(a));
  SeriesU s = expand_in_u(f, 3);
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(1) == Scalar(Q(1)));
  CHECK(s.coeff(2) == a);
  CHECK(s.coeff(3) == a * a);
}

TEST_CASE("telescoped ratio (u+1-p)/(u-p)") {
  Scalar p = x(2) / Scalar::h();
  UPoly num = UPoly::linear(p - Scalar(Q(1)));
  RationalU f(num, UPoly::linear(p));
  SeriesU s = expand_in_u(f, 1);
  CHECK(s.coeff(0) == Scalar(Q(1)));
  CHECK(s.coeff(1) == Scalar(Q(1)));
}

TEST_CASE("polynomial part: u^2/(u-1)") {
  UPoly num;
  num.set_coeff(2, Scalar(Q(1)));
  RationalU f(num, UPoly::linear(Scalar(Q(1))));
  SeriesU s = expand_in_u(f, 2);
  CHECK(s.coeff(-1) == Scalar(Q(1)));  // u
  CHECK(s.coeff(0) == Scalar(Q(1)));   // 1
  CHECK(s.coeff(1) == Scalar(Q(1)));   // u^-1
  CHECK(s.coeff(2) == Scalar(Q(1)));   // u^-2
}

TEST_CASE("remultiplication reproduces the numerator to the stated order") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 10; ++t) {
    UPoly num, den;
    int dn = 1 + int(rng() % 3), dd = 1 + int(rng() % 3);
    for (int k = 0; k <= dn; ++k)
      num.set_coeff(k, Scalar(Q(int(rng() % 7) - 3)));
    for (int k = 0; k < dd; ++k)
      den.set_coeff(k, Scalar(Q(int(rng() % 7) - 3)) * x(1 + int(rng() % 2)));
    den.set_coeff(dd, Scalar(Q(1)));  // monic
    if (num.is_zero()) num.set_coeff(0, Scalar(Q(1)));
    int R = 4;
    RationalU f(num, den, false);
    SeriesU s = expand_in_u(f, R);
    SeriesU back = s * SeriesU::from_upoly(den, R + dd + 1);
    // compare with num on the common window
    SeriesU numser = SeriesU::from_upoly(num, back.order());
    CHECK(back == numser);
  }
}

TEST_CASE("undefined coefficients beyond the order throw") {
  RationalU f(UPoly(Scalar(Q(1))), UPoly::linear(x(1)));
  SeriesU s = expand_in_u(f, 2);
  CHECK_THROWS_AS((void)s.coeff(3), std::out_of_range);
}

TEST_CASE("truncation tracking through multiplication") {
  SeriesU a(3), b(5);
  a.set(1, Scalar(Q(1)));
  b.set(0, Scalar(Q(1)));
  b.set(2, x(1));
  SeriesU c = a * b;
  // a = u^-1 + O(u^-4) and b starts at u^0, so the product is known to u^-3
  CHECK(c.order() == 3);
  CHECK(c.coeff(1) == Scalar(Q(1)));
  CHECK(c.coeff(3) == x(1));
}

TEST_CASE("factored rational functions compare by canonical factors") {
  FactoredRatU f;
  f.add_zero(x(1));
  f.add_zero(x(2));
  f.add_pole(x(2));
  FactoredRatU g;
  g.add_zero(x(1));
  CHECK(f == g);
  FactoredRatU h = f.shift(Scalar::h());  // zero moves to x1 - h
  CHECK(h != g);
  CHECK(h.inverse() * h == FactoredRatU());
}
