#include "laumon/localization.hpp"

#include <stdexcept>

#include "laumon/affine_module.hpp"

namespace laumon::loc {

namespace {

int res(long j, int n) { return AffinePattern::residue(j, n); }

// t_l^2 / t_{l'}^2 with indices mod n
CharPoly t_ratio(long l, long lp, int n) {
  return CharPoly::t2_pow(res(l, n), 1) * CharPoly::t2_pow(res(lp, n), -1);
}

}  // namespace

std::vector<FixedEdge> edges_from(const AffinePattern& p) {
  std::vector<FixedEdge> out;
  for (int i = 1; i <= p.n; ++i)
    for (int m = 0; m <= p.max_len(); ++m) {
      int l = res(i - m, p.n);
      auto q = p.add_box(l, m);
      if (!q) continue;
      out.push_back({p, *q, i, m});
    }
  return out;
}

CharPoly char_chi_rank1(const Partition& ls, const Partition& lt, int alpha,
                        int beta) {
  const CharPoly q1 = CharPoly::q_pow2(2);   // q
  CharPoly total;
  int tlen_s = ls.length(), tlen_t = lt.length();
  // -sum_{i,i'} q^{beta+1} (q^{ls_{i'}}-1)(q^{-lt_i}-1)/(q-1)
  //    q'^{alpha+i'-i} (q'-1)
  for (int i = 0; i <= tlen_t; ++i)
    for (int ip = 0; ip <= tlen_s; ++ip) {
      if (lt.part(i) == 0 || ls.part(ip) == 0) continue;
      CharPoly term = q1 * CharPoly::q_pow2(2 * beta) *
                      CharPoly::q_bracket(ls.part(ip)) *
                      (CharPoly::q_pow2(-2 * lt.part(i)) - CharPoly::one()) *
                      CharPoly::qp_pow(alpha + ip - i) *
                      (CharPoly::qp_pow(1) - CharPoly::one());
      total -= term;
    }
  // +sum_i q^{beta+1} (q^{-lt_i}-1)/(q-1) q'^{alpha-i};
  // note (q^{-a}-1)/(q-1) = q_bracket(-a)
  for (int i = 0; i <= tlen_t; ++i) {
    if (lt.part(i) == 0) continue;
    total += q1 * CharPoly::q_pow2(2 * beta) * CharPoly::q_bracket(-lt.part(i)) *
             CharPoly::qp_pow(alpha - i);
  }
  // -sum_{i'} q^{beta+1} (q^{ls_{i'}}-1)/(q-1) q'^{alpha+i'+1}
  for (int ip = 0; ip <= tlen_s; ++ip) {
    if (ls.part(ip) == 0) continue;
    total -= q1 * CharPoly::q_pow2(2 * beta) * CharPoly::q_bracket(ls.part(ip)) *
             CharPoly::qp_pow(alpha + ip + 1);
  }
  // + q q' (q^beta - 1)/(q-1) (q'^alpha - 1)/(q'-1)
  total += q1 * CharPoly::qp_pow(1) * CharPoly::q_bracket(beta) *
           CharPoly::qp_bracket(alpha);
  return total;
}

namespace {

// the four structural sums of the diagonal-bundle character; d from p,
// d' from pp
CharPoly e_char_sums(const AffinePattern& p, const AffinePattern& pp) {
  int n = p.n;
  int len = p.max_len(), lenp = pp.max_len();
  CharPoly total;
  const CharPoly q1 = CharPoly::q_pow2(2);
  for (int k = 1; k <= n; ++k) {
    // S1: + sum_{l<=k, l'<=k-1} (t_l/t_l')^2 q br(d'_{(k-1)l'}) (q^{-d_{kl}}-1)
    //       q'^{fl(l')-fl(l)}
    for (long l = k - len; l <= k; ++l) {
      int dkl = p.d(k, l);
      if (dkl == 0) continue;
      for (long lp = k - 1 - lenp; lp <= k - 1; ++lp) {
        int dp = pp.d(k - 1, lp);
        if (dp == 0) continue;
        total += t_ratio(l, lp, n) * q1 * CharPoly::q_bracket(dp) *
                 (CharPoly::q_pow2(-2 * dkl) - CharPoly::one()) *
                 CharPoly::qp_pow(int(floor_div(-lp, n) - floor_div(-l, n)));
      }
    }
    // S2: + sum_{l'<=k-1} (t_k/t_l')^2 q br(d'_{(k-1)l'}) q'^{fl(l')-fl(k)}
    for (long lp = k - 1 - lenp; lp <= k - 1; ++lp) {
      int dp = pp.d(k - 1, lp);
      if (dp == 0) continue;
      total += t_ratio(k, lp, n) * q1 * CharPoly::q_bracket(dp) *
               CharPoly::qp_pow(int(floor_div(-lp, n) - floor_div(-k, n)));
    }
    // S3: - sum_{l<=k, l'<=k} (t_l/t_l')^2 q br(d'_{kl'}) (q^{-d_{kl}}-1)
    for (long l = k - len; l <= k; ++l) {
      int dkl = p.d(k, l);
      if (dkl == 0) continue;
      for (long lp = k - lenp; lp <= k; ++lp) {
        int dp = pp.d(k, lp);
        if (dp == 0) continue;
        total -= t_ratio(l, lp, n) * q1 * CharPoly::q_bracket(dp) *
                 (CharPoly::q_pow2(-2 * dkl) - CharPoly::one()) *
                 CharPoly::qp_pow(int(floor_div(-lp, n) - floor_div(-l, n)));
      }
    }
    // S4: - sum_{l<=k} (t_l/t_k)^2 q (q^{-d_{kl}}-1)/(q-1) q'^{fl(k)-fl(l)}
    for (long l = k - len; l <= k; ++l) {
      int dkl = p.d(k, l);
      if (dkl == 0) continue;
      total -= t_ratio(l, k, n) * q1 * CharPoly::q_bracket(-dkl) *
               CharPoly::qp_pow(int(floor_div(-k, n) - floor_div(-l, n)));
    }
  }
  return total;
}

}  // namespace

CharPoly char_E(const AffinePattern& p, const AffinePattern& pp) {
  return e_char_sums(p, pp);
}

CharPoly char_tangent(const AffinePattern& p) { return e_char_sums(p, p); }

CharPoly char_corr_tangent(const FixedEdge& e) {
  const AffinePattern& p = e.source;
  int n = p.n;
  long i = e.i, j = e.j();
  CharPoly total = char_tangent(p);
  int dij = p.d(i, j);
  // extra terms of the correspondence tangent space; for j = i the two
  // mirror terms of the removed-factor rule cancel against each other
  total += CharPoly::q_pow2(2);
  if (j != i) {
    total -= CharPoly::q_pow2(2 * (p.d(i - 1, j) - dij));
    total += t_ratio(j, i, n) * CharPoly::q_pow2(2 * (p.d(i, i) - dij)) *
             CharPoly::qp_pow(int(floor_div(-i, n) - floor_div(-j, n)));
  }
  long lo = i - 1 - p.max_len() - 1;
  for (long k = lo; k <= i - 1; ++k) {
    if (k == j) continue;
    int dik = p.d(i, k), dimk = p.d(i - 1, k);
    if (dik == dimk) continue;
    total += t_ratio(j, k, n) *
             (CharPoly::q_pow2(2 * (dik - dij)) -
              CharPoly::q_pow2(2 * (dimk - dij))) *
             CharPoly::qp_pow(int(floor_div(-k, n) - floor_div(-j, n)));
  }
  return total;
}

CharPoly char_chi_parabolic(int k, const AffinePattern& p,
                            const AffinePattern& pp, ChiVariant v) {
  int n = p.n;
  int len = p.max_len(), lenp = pp.max_len();
  const CharPoly q1 = CharPoly::q_pow2(2);
  CharPoly total;
  int row_p = v == ChiVariant::same ? k : k - 1;  // row of the primed entries
  // first sum: -(t_l/t_l')^2 q br(d'_{row,l'}) (q^{-d_{kl}}-1) q'^{...} (q'-1)
  for (long l = k - len; l <= k; ++l) {
    int dkl = p.d(k, l);
    if (dkl == 0) continue;
    for (long lp = row_p - lenp; lp <= row_p; ++lp) {
      int dp = pp.d(row_p, lp);
      if (dp == 0) continue;
      total -= t_ratio(l, lp, n) * q1 * CharPoly::q_bracket(dp) *
               (CharPoly::q_pow2(-2 * dkl) - CharPoly::one()) *
               CharPoly::qp_pow(int(floor_div(-lp, n) - floor_div(-l, n))) *
               (CharPoly::qp_pow(1) - CharPoly::one());
    }
  }
  // second sum: + sum_{l'=1..n} sum_{l<=k} (t_l/t_l')^2 q (q^{-d_{kl}}-1)/(q-1)
  //             q'^{floor((l'-k)/n) - floor(-l/n)}   [same: floor((l'-k-1)/n)]
  for (int lp = 1; lp <= n; ++lp)
    for (long l = k - len; l <= k; ++l) {
      int dkl = p.d(k, l);
      if (dkl == 0) continue;
      long fl = v == ChiVariant::same ? floor_div(lp - k - 1, n)
                                      : floor_div(lp - k, n);
      total += t_ratio(l, lp, n) * q1 * CharPoly::q_bracket(-dkl) *
               CharPoly::qp_pow(int(fl - floor_div(-l, n)));
    }
  // third sum: - sum_{l=1..n} sum_{l'<=row} (t_l/t_l')^2 q br(d'_{row,l'})
  //             q'^{floor(-l'/n) - floor((l-k-1)/n) + 1}
  for (int l = 1; l <= n; ++l)
    for (long lp = row_p - lenp; lp <= row_p; ++lp) {
      int dp = pp.d(row_p, lp);
      if (dp == 0) continue;
      total -= t_ratio(l, lp, n) * q1 * CharPoly::q_bracket(dp) *
               CharPoly::qp_pow(
                   int(floor_div(-lp, n) - floor_div(l - k - 1, n) + 1));
    }
  return total;
}

CharPoly char_E_via_cover(const AffinePattern& p, const AffinePattern& pp) {
  // E = -Inv_G[ sum_{l,l'} (t_l/t_l')^2 chi(J_{lambda'^{l'}},
  //            J_{lambda^l}(-D_inf + (l'-l) D_0)) ], where Inv_G keeps
  // q'-exponents divisible by n and divides them by n.
  int n = p.n;
  CharPoly acc;
  for (int l = 1; l <= n; ++l)
    for (int lp = 1; lp <= n; ++lp) {
      CharPoly chi =
          char_chi_rank1(pp.lambdas[lp - 1], p.lambdas[l - 1], lp - l, 0);
      acc += t_ratio(l, lp, n) * chi;
    }
  CharPoly inv;
  for (const auto& [key, coeff] : acc.terms()) {
    if (key.qp % n != 0) continue;
    CharKey k2 = key;
    k2.qp = key.qp / n;
    inv += CharPoly::monomial(k2, coeff);
  }
  return -inv;
}

KIdentityResult verify_K_identity(const AffinePattern& p,
                                  const AffinePattern& pp) {
  CharPoly rhs_num;
  for (int k = 1; k <= p.n; ++k) {
    rhs_num += char_chi_parabolic(k, p, pp, ChiVariant::same);
    rhs_num -= char_chi_parabolic(k, p, pp, ChiVariant::shifted);
  }
  CharPoly qp_minus_1 = CharPoly::qp_pow(1) - CharPoly::one();
  CharPoly rem;
  auto quot = rhs_num.try_divide(qp_minus_1, &rem);
  if (!quot)
    return {false, "numerator not divisible by q'-1, remainder " +
                       rem.to_string()};
  CharPoly lhs = char_E(p, pp);
  if (!(lhs == *quot))
    return {false, "mismatch: E = " + lhs.to_string() +
                       " vs RHS = " + quot->to_string()};
  return {true, ""};
}

Scalar weight_product(const CharPoly& c) {
  Scalar prod{Q(1)};
  for (const auto& w : c.to_weights()) {
    if (w.value.is_zero())
      throw std::domain_error("zero weight in character " + c.to_string());
    for (Z k = 0; k < w.multiplicity; ++k) prod *= w.value;
  }
  return prod;
}

Scalar localized_coeff(const FixedEdge& e, CoeffKind kind) {
  Scalar corr = weight_product(char_corr_tangent(e));
  if (kind == CoeffKind::e)
    return -weight_product(char_tangent(e.source)) / corr;
  return weight_product(char_tangent(e.target)) / corr;
}

Scalar closed_form_coeff(const FixedEdge& e, CoeffKind kind) {
  if (kind == CoeffKind::e)
    return affine::apply_e(e.source, e.i).coeff(e.target);
  return affine::apply_f(e.target, e.i).coeff(e.source);
}

KunnethComponents kunneth_solve(const Scalar& e00, const Scalar& e0i,
                                const Scalar& ei0, const Scalar& eii) {
  Scalar quarter{Q(1, 4)};
  KunnethComponents c;
  c.cj = (e00 + e0i + ei0 + eii) * quarter;
  c.cj1 = (eii + ei0 - e0i - e00) * quarter / Scalar::h();
  c.cj1p = (eii - ei0 + e0i - e00) * quarter / Scalar::hp();
  c.cj2 = (eii - ei0 - e0i + e00) * quarter / (Scalar::h() * Scalar::hp());
  return c;
}

std::pair<Scalar, Scalar> kunneth_solve_curve(const Scalar& e0,
                                              const Scalar& einf) {
  Scalar half{Q(1, 2)};
  return {(einf + e0) * half, (einf - e0) * half / Scalar::h()};
}

CharPoly corner_char_F0(const AffinePattern& p, Corner c) {
  bool at_c0 = c == Corner::c0x0 || c == Corner::c0xi;
  bool at_x0 = c == Corner::c0x0 || c == Corner::cix0;
  DiagramCollection coll = convert_to_collection(p);
  CharPoly total;
  for (int l = 1; l <= p.n; ++l) {
    const Partition& lam = coll[p.n - 1][l - 1];  // lambda^{nl}
    int t = lam.length();
    CharPoly fib;
    // resolution O(-(i+1)D0 - lam_i D1) -> O(-i D0 - lam_i D1) -> J_lam;
    // the D0-part contributes q'^{-i} at x = 0, the D1-part q^{-lam_i} at
    // c = 0, and both trivialize at infinity.
    for (int i = 0; i <= t; ++i) {
      CharKey k;
      if (at_x0) k.qp = -i;
      if (at_c0) k.q2 = -2 * lam.part(i);
      fib += CharPoly::monomial(k, 1);
    }
    for (int i = 0; i <= t - 1; ++i) {
      CharKey k;
      if (at_x0) k.qp = -(i + 1);
      if (at_c0) k.q2 = -2 * lam.part(i);
      fib -= CharPoly::monomial(k, 1);
    }
    total += CharPoly::t2_pow(l, 1) * fib;
  }
  return total;
}

FactoredRatU char_to_rational(const CharPoly& c) {
  FactoredRatU f;
  for (const auto& [key, coeff] : c.terms()) {
    if (key.q2 % 2 != 0)
      throw std::domain_error("half-integral q-exponent in character");
    // dual weight, dimensionless: -(b + c hp/h + sum a_i x_i / h)
    Scalar w = Scalar(Q(key.q2 / 2)) +
               Scalar(Q(key.qp)) * Scalar::hp() / Scalar::h();
    for (int i = 0; i < kMaxXVars; ++i)
      if (key.t[i] != 0)
        w += Scalar(Q(key.t[i])) * Scalar::x(i + 1) / Scalar::h();
    Scalar root = -w;
    long mult = coeff.get_si();
    if (mult > 0)
      for (long k = 0; k < mult; ++k) f.add_zero(root);
    else
      for (long k = 0; k < -mult; ++k) f.add_pole(root);
  }
  f.canonicalize();
  return f;
}

}  // namespace laumon::loc
