#include <doctest.h>

#include <random>

#include "laumon/charpoly.hpp"

using namespace laumon;

TEST_CASE("exact division in the character ring") {
  CharPoly qp = CharPoly::qp_pow(1);
  CharPoly d = qp - CharPoly::one();
  // (q'^2 - 1)/(q' - 1) = q' + 1
  auto r = (CharPoly::qp_pow(2) - CharPoly::one()).try_divide(d);
  REQUIRE(r.has_value());
  CHECK(*r == qp + CharPoly::one());
  // 0 / (q'-1) = 0
  auto z = CharPoly().try_divide(d);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  // (q'+1)/(q'-1) fails with a remainder
  CharPoly rem;
  CHECK(!(qp + CharPoly::one()).try_divide(d, &rem).has_value());
  CHECK(!rem.is_zero());
}

TEST_CASE("division round-trips on random characters") {
  std::mt19937_64 rng(4242);
  auto rnd = [&](int bound) { return int(rng() % bound) - bound / 2; };
  for (int t = 0; t < 40; ++t) {
    CharPoly a, b;
    for (int k = 0; k < 4; ++k) {
      CharKey key;
      key.q2 = 2 * rnd(4);
      key.qp = rnd(4);
      key.t[rng() % 3] = rnd(3);
      a += CharPoly::monomial(key, rnd(7));
      CharKey kb;
      kb.q2 = 2 * rnd(3);
      kb.qp = rnd(3);
      b += CharPoly::monomial(kb, rnd(5));
    }
    if (b.is_zero()) b = CharPoly::one();
    CharPoly prod = a * b;
    auto q = prod.try_divide(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("q brackets are the exact geometric sums") {
  // (q^3-1)/(q-1) = 1 + q + q^2
  CHECK(CharPoly::q_bracket(3) ==
        CharPoly::one() + CharPoly::q_pow2(2) + CharPoly::q_pow2(4));
  // (q^{-1}-1)/(q-1) = -q^{-1}
  CHECK(CharPoly::q_bracket(-1) == -CharPoly::q_pow2(-2));
  CHECK(CharPoly::q_bracket(0).is_zero());
}

TEST_CASE("characters to weight multisets") {
  // 2 q t1^2 + q'^{-1} -> {h + x1, h + x1, -hp}
  CharPoly c = CharPoly::monomial({}, 2) * CharPoly::q_pow2(2) *
                   CharPoly::t2_pow(1, 1) +
               CharPoly::qp_pow(-1);
  auto ws = c.to_weights();
  Z total = 0;
  bool found_hx = false, found_hp = false;
  for (auto& w : ws) {
    total += w.multiplicity;
    if (w.value == Scalar::h() + Scalar::x(1)) {
      CHECK(w.multiplicity == 2);
      found_hx = true;
    }
    if (w.value == -Scalar::hp()) {
      CHECK(w.multiplicity == 1);
      found_hp = true;
    }
  }
  CHECK(found_hx);
  CHECK(found_hp);
  CHECK(total == c.eval_all_one());

  CHECK(CharPoly().to_weights().empty());
  CHECK_THROWS_AS((CharPoly::q_pow2(2) - CharPoly::one()).to_weights(),
                  std::domain_error);
  // half-integral q-exponent
  CHECK_THROWS_AS(CharPoly::q_pow2(1).to_weights(), std::domain_error);
}
