#include "laumon/affine_module.hpp"

#include <stdexcept>

namespace laumon::affine {

namespace {

// column index j = i - m for box slot m in lambda^{res(i-m)}
struct BoxSlot {
  int l;   // partition index, 1..n
  int m;   // part slot, 0-based
  long j;  // column
};

std::vector<BoxSlot> slots(const AffinePattern& p, long i, bool adding) {
  // all slots that could host a valid move: m ranges over 0..max_len()
  std::vector<BoxSlot> out;
  int hi = p.max_len() + (adding ? 0 : -1);
  for (int m = 0; m <= hi; ++m) {
    int l = AffinePattern::residue(i - m, p.n);
    out.push_back({l, m, i - m});
  }
  return out;
}

Scalar e_coefficient(const AffinePattern& p, long i, long j) {
  Scalar c = -Scalar::h().inverse();
  Scalar pij = p.weight_p(i, j);
  if (j != i) {
    // (p_{i-1,j} - p_{ij}) / (p_{ii} - p_{ij}); for j = i the factor is 1
    c = c * (p.weight_p(i - 1, j) - pij) / (p.weight_p(i, i) - pij);
  }
  long lo = i - 1 - p.max_len();
  for (long k = lo; k <= i - 1; ++k) {
    if (k == j) continue;
    if (p.d(i - 1, k) == p.d(i, k)) continue;  // factor equals 1
    c = c * (p.weight_p(i - 1, k) - pij) / (p.weight_p(i, k) - pij);
  }
  return c;
}

Scalar f_coefficient(const AffinePattern& p, long i, long j) {
  Scalar pij = p.weight_p(i, j);
  Scalar c = Scalar::h().inverse() * (p.weight_p(i + 1, j) - pij) *
             (p.weight_p(i + 1, i + 1) - pij);
  long lo = i - p.max_len();
  for (long k = lo; k <= i; ++k) {
    if (k == j) continue;
    if (p.d(i + 1, k) == p.d(i, k)) continue;
    c = c * (p.weight_p(i + 1, k) - pij) / (p.weight_p(i, k) - pij);
  }
  return c;
}

}  // namespace

Scalar eigen_h_diag(const AffinePattern& p, long i) {
  int n = p.n;
  auto deg = p.degree();
  auto dslot = [&](long k) { return deg[AffinePattern::residue(k, n) - 1]; };
  Scalar v = (Scalar::x(AffinePattern::residue(i + 1, n)) -
              Scalar::x(AffinePattern::residue(i, n))) /
             Scalar::h();
  if (AffinePattern::residue(i, n) == n) v += Scalar::hp() / Scalar::h();
  v += Scalar(Q(2 * dslot(i) - dslot(i - 1) - dslot(i + 1) + 1));
  return v;
}

VectorM apply_e(const AffinePattern& p, long i) {
  VectorM out;
  for (const auto& s : slots(p, i, true)) {
    auto q = p.add_box(s.l, s.m);
    if (!q) continue;
    out.add_term(*q, e_coefficient(p, i, s.j));
  }
  return out;
}

VectorM apply_f(const AffinePattern& p, long i) {
  VectorM out;
  for (const auto& s : slots(p, i, false)) {
    auto q = p.remove_box(s.l, s.m);
    if (!q) continue;
    out.add_term(*q, f_coefficient(p, i, s.j));
  }
  return out;
}

VectorM apply_xminus(const AffinePattern& p, long i, int r) {
  VectorM out;
  for (const auto& s : slots(p, i, true)) {
    auto q = p.add_box(s.l, s.m);
    if (!q) continue;
    Scalar w = p.weight_p_hat(i, s.j) + Scalar(Q(1 - i, 2));
    out.add_term(*q, w.pow(r) * e_coefficient(p, i, s.j));
  }
  return out;
}

VectorM apply_xplus(const AffinePattern& p, long i, int r) {
  VectorM out;
  for (const auto& s : slots(p, i, false)) {
    auto q = p.remove_box(s.l, s.m);
    if (!q) continue;
    Scalar w = p.weight_p_hat(i, s.j) - Scalar(Q(1 + i, 2));
    out.add_term(*q, w.pow(r) * f_coefficient(p, i, s.j));
  }
  return out;
}

FactoredRatU eigen_a_mi(const AffinePattern& p, long m, long i) {
  if (m > i) throw std::out_of_range("a_{mi} needs m <= i");
  FactoredRatU f;
  for (long j = m + 1; j <= i; ++j) f.add_zero(p.weight_p_hat(i, j));
  long lo = m - p.max_len();
  for (long j = lo; j <= m; ++j) {
    if (p.d(i, j) == p.d(m, j)) continue;
    f.add_zero(p.weight_p_hat(i, j));
    f.add_pole(p.weight_p_hat(m, j));
  }
  f.canonicalize();
  return f;
}

FactoredRatU eigen_h_series(const AffinePattern& p, long i) {
  Scalar c1 = Scalar(Q(i + 1, 2)), c0 = Scalar(Q(i - 1, 2));
  FactoredRatU f;
  f.add_zero(p.weight_p_hat(i + 1, i + 1) - c1);
  f.add_pole(p.weight_p_hat(i, i) - c0);
  long lo = i - p.max_len() - 1;
  for (long j = lo; j <= i; ++j) {
    if (p.d(i + 1, j) == p.d(i, j)) continue;
    f.add_zero(p.weight_p_hat(i + 1, j) - c1);
    f.add_pole(p.weight_p_hat(i, j) - c1);
  }
  for (long j = lo; j <= i - 1; ++j) {
    if (p.d(i - 1, j) == p.d(i, j)) continue;
    f.add_zero(p.weight_p_hat(i - 1, j) - c0);
    f.add_pole(p.weight_p_hat(i, j) - c0);
  }
  f.canonicalize();
  return f;
}

FactoredRatU eigen_h_series_via(const AffinePattern& p, long i, long m) {
  if (m >= i) throw std::out_of_range("via base row must satisfy m < i");
  Scalar c1 = Scalar(Q(i + 1, 2)), c0 = Scalar(Q(i - 1, 2));
  FactoredRatU h = eigen_a_mi(p, m, i).shift(c0).inverse() *
                   eigen_a_mi(p, m, i).shift(c1).inverse() *
                   eigen_a_mi(p, m, i - 1).shift(c0) *
                   eigen_a_mi(p, m, i + 1).shift(c1);
  h.canonicalize();
  return h;
}

FactoredRatU eigen_a0n_product(const AffinePattern& p) {
  // N = least j with d_{0j} != 0, read from the stored partitions; when the
  // pattern is the vacuum any N <= 0 works and the denominator range is empty.
  long N = 1;
  for (long j = 0; j >= -long(p.n) * (p.max_len() + 1); --j)
    if (p.d(0, j) != 0) N = j;
  FactoredRatU f;
  Scalar H = Scalar::hp() / Scalar::h();
  for (long j = N - p.n; j <= 0; ++j) f.add_zero(p.weight_p_hat(0, j) - H);
  for (long j = N; j <= 0; ++j) f.add_pole(p.weight_p_hat(0, j));
  f.canonicalize();
  return f;
}

SeriesU phi_series_hat(const AffinePattern& p, int order) {
  return log_derivative_series(eigen_a_mi(p, 0, p.n), order);
}

Scalar phi_coeff(const AffinePattern& p, int r) {
  SeriesU s = phi_series_hat(p, r + 1);
  return s.coeff(r + 1) * Scalar::h().pow(r);
}

Scalar h_hat_eigen(const AffinePattern& p, long i, int r) {
  SeriesU s = expand_in_u(eigen_h_series(p, i), r + 1);
  return s.coeff(r + 1);
}

}  // namespace laumon::affine
