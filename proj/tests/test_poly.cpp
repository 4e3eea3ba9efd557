#include <doctest.h>

#include "laumon/poly.hpp"

using namespace laumon;

namespace {
Poly X(int i) { return Poly::var(i - 1); }
Poly H() { return Poly::var(kVarH); }
Poly HP() { return Poly::var(kVarHp); }
}  // namespace

TEST_CASE("monomial order is graded lex with x1 < ... < h < hp") {
  Mono x1 = mono_of_var(0), x2 = mono_of_var(1), h = mono_of_var(kVarH);
  CHECK(mono_less(x1, x2));
  CHECK(mono_less(x2, h));
  CHECK(mono_less(h, mono_of_var(kVarHp)));
  // degree dominates
  CHECK(mono_less(h, mono_mul(x1, x1)));
  CHECK(mono_less(mono_mul(x1, x2), mono_mul(x2, x2)));
}

TEST_CASE("arithmetic and canonical form") {
  Poly p = (X(1) + X(2)) * (X(1) - X(2));
  CHECK(p == X(1) * X(1) - X(2) * X(2));
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "x1^2 - x2^2");
  Poly q = X(1) - X(2) + H();
  CHECK(q.to_string() == "x1 - x2 + h");
  CHECK(q.leading().mono == mono_of_var(kVarH));
}

TEST_CASE("exact division") {
  Poly p = X(1) * X(1) - X(2) * X(2);
  auto q = p.try_divide(X(1) - X(2));
  REQUIRE(q.has_value());
  CHECK(*q == X(1) + X(2));
  CHECK(!p.try_divide(X(1) - HP()).has_value());
}

TEST_CASE("gcd of structured products") {
  Poly a = (X(1) - X(2) + H()) * (X(1) + X(3)) * H();
  Poly b = (X(1) - X(2) + H()) * HP();
  Poly g = Poly::gcd(a, b);
  CHECK(g == X(1) - X(2) + H());

  Poly c = (X(1) + X(2)) * (X(1) + X(2)) * (X(2) + H());
  Poly d = (X(1) + X(2)) * (X(2) - H());
  CHECK(Poly::gcd(c, d) == X(1) + X(2));

  CHECK(Poly::gcd(X(1) * X(2), X(3) * H()).is_one());
}

TEST_CASE("gcd with rational coefficients normalizes the leading term") {
  Poly a = (X(1) + X(2)).mul_q(Q(3, 2)) * (X(1) - X(3));
  Poly b = (X(1) + X(2)).mul_q(Q(-5)) * H();
  Poly g = Poly::gcd(a, b);
  CHECK(g == X(1) + X(2));
}

TEST_CASE("evaluation and substitution") {
  Poly p = X(1) * X(2) + H() * H() - HP();
  std::array<Q, kNumSlots> v{};
  v[0] = 2;
  v[1] = 3;
  v[kVarH] = 1;
  v[kVarHp] = 5;
  CHECK(p.eval(v) == Q(2));
  // hp -> -3 h
  Poly s = p.subst_var(kVarHp, Q(-3), kVarH);
  CHECK(s == X(1) * X(2) + H() * H() + H().mul_q(Q(3)));
}
