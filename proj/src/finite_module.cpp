#include "laumon/finite_module.hpp"

#include <stdexcept>

namespace laumon::finite {

namespace {

int deg_slot(const FinitePattern& p, int i) {
  // d_0 = d_n = 0
  if (i <= 0 || i >= p.n) return 0;
  int s = 0;
  for (int j = 1; j <= i; ++j) s += p.d(i, j);
  return s;
}

}  // namespace

Scalar eigen_E(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n) throw std::out_of_range("E_ii index");
  return Scalar::x(i) / Scalar::h() +
         Scalar(Q(deg_slot(p, i - 1) - deg_slot(p, i) + i - 1));
}

Scalar eigen_h_chevalley(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("h_i index");
  return (Scalar::x(i + 1) - Scalar::x(i)) / Scalar::h() +
         Scalar(Q(2 * deg_slot(p, i) - deg_slot(p, i - 1) - deg_slot(p, i + 1) + 1));
}

namespace {

// factors of Theorem 2.12-type coefficients
Scalar e_coefficient(const FinitePattern& p, int i, int j) {
  Scalar c = -Scalar::h().inverse();
  int dij = p.d(i, j);
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    Scalar f = Scalar::x(j) - Scalar::x(k) +
               Scalar(Q(p.d(i, k) - dij)) * Scalar::h();
    c = c / f;
  }
  for (int k = 1; k <= i - 1; ++k) {
    Scalar f = Scalar::x(j) - Scalar::x(k) +
               Scalar(Q(p.d(i - 1, k) - dij)) * Scalar::h();
    c = c * f;
  }
  return c;
}

Scalar f_coefficient(const FinitePattern& p, int i, int j) {
  Scalar c = Scalar::h().inverse();
  int dij = p.d(i, j);
  for (int k = 1; k <= i; ++k) {
    if (k == j) continue;
    Scalar f = Scalar::x(k) - Scalar::x(j) +
               Scalar(Q(dij - p.d(i, k))) * Scalar::h();
    c = c / f;
  }
  for (int k = 1; k <= i + 1; ++k) {
    Scalar f = Scalar::x(k) - Scalar::x(j) +
               Scalar(Q(dij - p.d(i + 1, k))) * Scalar::h();
    c = c * f;
  }
  return c;
}

}  // namespace

VectorV apply_e(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("e_i index");
  VectorV out;
  for (int j = 1; j <= i; ++j) {
    auto q = p.add_box(i, j);
    if (!q) continue;
    out.add_term(*q, e_coefficient(p, i, j));
  }
  return out;
}

VectorV apply_f(const FinitePattern& p, int i) {
  if (i < 1 || i > p.n - 1) throw std::out_of_range("f_i index");
  VectorV out;
  for (int j = 1; j <= i; ++j) {
    auto q = p.remove_box(i, j);
    if (!q) continue;
    out.add_term(*q, f_coefficient(p, i, j));
  }
  return out;
}

VectorV apply_xminus(const FinitePattern& p, int k, int r) {
  VectorV out;
  for (int j = 1; j <= k; ++j) {
    auto q = p.add_box(k, j);
    if (!q) continue;
    Scalar w = -Scalar::x(j) +
               (Scalar(Q(p.d(k, j))) + Scalar(Q(1 - k, 2))) * Scalar::h();
    out.add_term(*q, w.pow(r) * e_coefficient(p, k, j));
  }
  return out;
}

VectorV apply_xplus(const FinitePattern& p, int k, int r) {
  VectorV out;
  for (int j = 1; j <= k; ++j) {
    auto q = p.remove_box(k, j);
    if (!q) continue;
    Scalar w = -Scalar::x(j) +
               (Scalar(Q(p.d(k, j) - 1)) + Scalar(Q(1 - k, 2))) * Scalar::h();
    out.add_term(*q, w.pow(r) * f_coefficient(p, k, j));
  }
  return out;
}

namespace {

// -x_j/h + d_{ij}, the dimensionless weight of the finite case
Scalar p_hat(const FinitePattern& p, int i, int j) {
  return -Scalar::x(j) / Scalar::h() + Scalar(Q(p.d(i, j)));
}

}  // namespace

FactoredRatU eigen_a(const FinitePattern& p, int m) {
  if (m < 0 || m > p.n) throw std::out_of_range("a_m index");
  FactoredRatU f;
  for (int j = 1; j <= m; ++j) f.add_zero(p_hat(p, m, j));
  return f;
}

FactoredRatU eigen_a_mi(const FinitePattern& p, int m, int i) {
  if (m > i) throw std::out_of_range("a_{mi} needs m <= i");
  return eigen_a(p, i) * eigen_a(p, m).inverse();
}

FactoredRatU eigen_h_series(const FinitePattern& p, int k, int via_m) {
  if (k < 1 || k > p.n - 1) throw std::out_of_range("h_k index");
  if (via_m >= k || via_m < 0) throw std::out_of_range("via_m must satisfy m < k");
  Scalar c1 = Scalar(Q(k + 1, 2)), c0 = Scalar(Q(k - 1, 2));
  FactoredRatU h = eigen_a_mi(p, via_m, k).shift(c1).inverse() *
                   eigen_a_mi(p, via_m, k).shift(c0).inverse() *
                   eigen_a_mi(p, via_m, k - 1).shift(c0) *
                   eigen_a_mi(p, via_m, k + 1).shift(c1);
  h.canonicalize();
  return h;
}

Scalar h_generator_eigen(const FinitePattern& p, int k, int r) {
  SeriesU s = expand_in_u(eigen_h_series(p, k), r + 1);
  return s.coeff(r + 1) * Scalar::h().pow(r);
}

}  // namespace laumon::finite
