#include <doctest.h>

#include <random>

#include "laumon/finite_module.hpp"

using namespace laumon;
using namespace laumon::finite;

namespace {

FinitePattern fp(int n, std::vector<std::vector<int>> rows) {
  FinitePattern p;
  p.n = n;
  p.rows = std::move(rows);
  REQUIRE(p.is_valid());
  return p;
}

Scalar X(int i) { return Scalar::x(i); }
Scalar H() { return Scalar::h(); }

}  // namespace

TEST_CASE("Chevalley action on small vectors") {
  FinitePattern vac = FinitePattern::vacuum(3);
  FinitePattern box = fp(3, {{1}, {0, 0}});

  VectorV ev = apply_e(vac, 1);
  REQUIRE(ev.terms().size() == 1);
  CHECK(ev.coeff(box) == -H().inverse());

  VectorV fv = apply_f(box, 1);
  REQUIRE(fv.terms().size() == 1);
  CHECK(fv.coeff(vac) == X(2) - X(1) + H());

  // [e_1, f_1] = h_1 on the vacuum: e(f(vac)) = 0, f(e(vac)) = -h_1 vac
  VectorV fe;
  for (const auto& [p, c] : ev.terms()) fe = fe + apply_f(p, 1).mul_scalar(c);
  Scalar comm = -fe.coeff(vac);  // [e,f] = ef - fe = -fe here
  CHECK(comm == eigen_h_chevalley(vac, 1));
  CHECK(comm == (X(2) - X(1)) / H() + Scalar(Q(1)));
}

TEST_CASE("diagonal operators") {
  FinitePattern vac = FinitePattern::vacuum(3);
  CHECK(eigen_E(vac, 1) == X(1) / H());
  CHECK(eigen_E(vac, 2) == X(2) / H() + Scalar(Q(1)));
  CHECK(eigen_h_chevalley(vac, 1) == (X(2) - X(1)) / H() + Scalar(Q(1)));
  // sum of E_ii eigenvalues is central: degree terms cancel
  FinitePattern p = fp(3, {{2}, {1, 1}});
  Scalar sum;
  for (int i = 1; i <= 3; ++i) sum += eigen_E(p, i);
  Scalar expect = (X(1) + X(2) + X(3)) / H() + Scalar(Q(3));
  CHECK(sum == expect);
}

TEST_CASE("a_m eigenvalues") {
  FinitePattern vac = FinitePattern::vacuum(3);
  CHECK(eigen_a(vac, 0) == FactoredRatU());  // a_0 = 1
  FactoredRatU a2 = eigen_a(vac, 2);
  FactoredRatU expect;
  expect.add_zero(-X(1) / H());
  expect.add_zero(-X(2) / H());
  CHECK(a2 == expect);

  FinitePattern box = fp(3, {{1}, {0, 0}});
  FactoredRatU a1 = eigen_a(box, 1);
  FactoredRatU e1;
  e1.add_zero(-X(1) / H() + Scalar(Q(1)));  // root of u + x1/h - 1
  CHECK(a1 == e1);
}

TEST_CASE("h_k series on the vacuum") {
  FinitePattern vac = FinitePattern::vacuum(3);
  FactoredRatU h1 = eigen_h_series(vac, 1);
  // (u + 1 + x2/h) / (u + x1/h)
  FactoredRatU expect;
  expect.add_zero(-X(2) / H() - Scalar(Q(1)));
  expect.add_pole(-X(1) / H());
  CHECK(h1 == expect);
  // u^{-1} coefficient is the Chevalley eigenvalue
  CHECK(h_generator_eigen(vac, 1, 0) == eigen_h_chevalley(vac, 1));
}

TEST_CASE("series coefficient matches the diagonal eigenvalue everywhere") {
  for (const auto& p : enumerate_finite_upto(3, 3))
    for (int k = 1; k <= 2; ++k)
      CHECK(h_generator_eigen(p, k, 0) == eigen_h_chevalley(p, k));
}

TEST_CASE("h_k is independent of the quotient base row") {
  std::mt19937_64 rng(123);
  auto all = enumerate_finite_upto(4, 4);
  for (int t = 0; t < 20; ++t) {
    const FinitePattern& p = all[rng() % all.size()];
    for (int k = 1; k <= 3; ++k)
      for (int m = 1; m < k; ++m)
        CHECK(eigen_h_series(p, k, m) == eigen_h_series(p, k, 0));
  }
}

TEST_CASE("x_{k,0} specializes to the Chevalley operators") {
  for (const auto& p : enumerate_finite_upto(3, 2))
    for (int k = 1; k <= 2; ++k) {
      CHECK((apply_xminus(p, k, 0) - apply_e(p, k)).is_zero());
      CHECK((apply_xplus(p, k, 0) - apply_f(p, k)).is_zero());
    }
}

TEST_CASE("grading of the operators") {
  for (const auto& p : enumerate_finite_upto(3, 2))
    for (int k = 1; k <= 2; ++k) {
      auto expect_shift = [&](const VectorV& v, int dir) {
        for (const auto& [q, c] : v.terms()) {
          auto da = p.degree(), db = q.degree();
          da[k - 1] += dir;
          CHECK(da == db);
        }
      };
      expect_shift(apply_e(p, k), +1);
      expect_shift(apply_xminus(p, k, 2), +1);
      expect_shift(apply_f(p, k), -1);
      expect_shift(apply_xplus(p, k, 1), -1);
    }
}

TEST_CASE("only valid moves appear") {
  FinitePattern p = fp(3, {{1}, {1, 0}});
  // incrementing d_{21} needs d_{11} >= 2: invalid, so e_2 only hits d_{22}
  VectorV v = apply_e(p, 2);
  REQUIRE(!v.is_zero());
  for (const auto& [q, c] : v.terms()) CHECK(q.d(2, 2) == 1);
}
