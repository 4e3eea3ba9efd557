#include <doctest.h>

#include <random>

#include "laumon/scalar.hpp"

using namespace laumon;

namespace {

Scalar x(int i) { return Scalar::x(i); }

// independent oracle: plain polynomial long division
Poly poly_divide_oracle(const Poly& num, const Poly& den) {
  auto q = num.try_divide(den);
  REQUIRE(q.has_value());
  return *q;
}

Scalar random_scalar(std::mt19937_64& rng) {
  auto rnd = [&](int m) { return int(rng() % m); };
  auto lin = [&]() {
    Poly p(Q(rnd(5) - 2));
    p += Poly::var(rnd(5)).mul_q(Q(rnd(7) - 3));
    p += Poly::var(rnd(5)).mul_q(Q(rnd(7) - 3));
    if (p.is_zero()) p = Poly::var(kVarH);
    return p;
  };
  Scalar s(lin());
  for (int k = rnd(3); k > 0; --k) s = s * Scalar(lin());
  for (int k = rnd(3); k > 0; --k) s = s / Scalar(lin());
  return s;
}

}  // namespace

TEST_CASE("field examples") {
  Scalar h = Scalar::h();
  CHECK(((x(1) - x(2)) / h + (x(2) - x(1)) / h).is_zero());
  CHECK((x(1) / h) * h == x(1));
  // division via the long-division oracle
  Scalar lhs = (x(1) * x(1) - x(2) * x(2)) / (x(1) - x(2));
  Poly expect = poly_divide_oracle(x(1).num() * x(1).num() - x(2).num() * x(2).num(),
                                   x(1).num() - x(2).num());
  CHECK(lhs == Scalar(expect));
  CHECK(lhs.is_polynomial());
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(x(1) / Scalar(), std::domain_error);
  CHECK_THROWS_AS(Scalar(Q(1)).operator/(Scalar(Q(0))), std::domain_error);
}

TEST_CASE("canonical form is unique: a - a = 0 structurally") {
  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 60; ++t) {
    Scalar a = random_scalar(rng);
    Scalar b = a * Scalar(Q(1));  // copy through arithmetic
    CHECK((a - b).is_zero());
    CHECK(a == b);
  }
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 25; ++t) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) * c == a * c + b * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
    CHECK(a + (b + c) == (a + b) + c);
    CHECK(a * (b * c) == (a * b) * c);
  }
}

TEST_CASE("denominator stays reduced against the numerator") {
  // (x1^2 - x2^2) h / (x1 - x2) must cancel to (x1 + x2) h
  Scalar v = Scalar(Poly::var(0)) * Scalar(Poly::var(0)) -
             Scalar(Poly::var(1)) * Scalar(Poly::var(1));
  Scalar r = v * Scalar::h() / (x(1) - x(2));
  CHECK(r.is_polynomial());
  CHECK(r == (x(1) + x(2)) * Scalar::h());
  // composite denominator partially cancelling
  Scalar w = (x(1) - x(2)) * Scalar::h() /
             ((x(1) * x(1) - x(2) * x(2)) * (x(1) + Scalar::h()));
  CHECK(w == Scalar::h() / ((x(1) + x(2)) * (x(1) + Scalar::h())));
}

TEST_CASE("canonical text form") {
  Scalar s = (x(1) - x(2) + Scalar::h()) / Scalar::h();
  CHECK(s.to_string() == "(x1 - x2 + h) / h");
  CHECK((-Scalar::h().inverse()).to_string() == "-1 / h");
  CHECK(Scalar().to_string() == "0");
  // denominator leading coefficient is normalized to 1
  Scalar t = x(1) / (Scalar(Q(2)) * Scalar::h());
  CHECK(t.to_string() == "1/2*x1 / h");
}

TEST_CASE("substitution hp -> c h") {
  Scalar s = (Scalar::hp() + Scalar(Q(3)) * Scalar::h()) / Scalar::h();
  CHECK(s.subst_hp(Q(-3)).is_zero());
  CHECK(s.subst_hp(Q(1)) == Scalar(Q(4)));
  Scalar bad = Scalar(Q(1)) / (Scalar::hp() + Scalar(Q(3)) * Scalar::h());
  CHECK_THROWS_AS(bad.subst_hp(Q(-3)), std::domain_error);
}
