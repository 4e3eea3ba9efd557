#include "laumon/integrable.hpp"

#include "laumon/affine_module.hpp"

namespace laumon::integrable {

std::array<Q, kNumSlots> specialization_point(const DominantWeight& w) {
  std::array<Q, kNumSlots> vals{};
  for (int j = 1; j <= w.n && j <= kMaxXVars; ++j)
    vals[j - 1] = Q(w.mu_tilde(j) - j + 1);
  vals[kVarH] = Q(1);
  vals[kVarHp] = Q(-w.K - w.n);
  return vals;
}

Q specialize(const Scalar& s, const DominantWeight& w) {
  return s.eval(specialization_point(w));
}

Scalar renorm_C(const AffinePattern& p) {
  return loc::weight_product(loc::char_tangent(p));
}

namespace {

Scalar box_weight_pow(const loc::FixedEdge& e, int r, bool raising) {
  // source-pattern entry; raising multiplies by (p^_{ij} + (1-i)/2)^r, the
  // lowering side acts from the target and uses its own entry d_{ij}
  if (raising) {
    Scalar w = e.source.weight_p_hat(e.i, e.j()) + Scalar(Q(1 - e.i, 2));
    return w.pow(r);
  }
  Scalar w = e.target.weight_p_hat(e.i, e.j()) - Scalar(Q(1 + e.i, 2));
  return w.pow(r);
}

}  // namespace

Scalar renorm_e_coeff(const loc::FixedEdge& e, int r) {
  // e<p,p'> = e[p,p'] C_{p'} / C_p = -f[p',p]
  Scalar f = loc::closed_form_coeff(e, loc::CoeffKind::f);
  return -box_weight_pow(e, r, true) * f;
}

Scalar renorm_f_coeff(const loc::FixedEdge& e, int r) {
  // f<p',p> = f[p',p] C_p / C_{p'} = -e[p,p']
  Scalar ec = loc::closed_form_coeff(e, loc::CoeffKind::e);
  return -box_weight_pow(e, r, false) * ec;
}

TruncationReport check_truncation(int n, const DominantWeight& w, int D,
                                  int rmax) {
  TruncationReport report;
  auto vals = specialization_point(w);
  auto check_coeff = [&](const Scalar& c, bool target_inside,
                         const std::string& edge, const std::string& kind) {
    TruncationResult res;
    res.edge = edge;
    res.kind = kind;
    Q den = c.eval_den(vals);
    if (laumon::is_zero(den)) {
      res.pass = false;
      res.detail = "denominator vanishes";
    } else if (!target_inside) {
      Q num = c.eval_num(vals);
      res.pass = laumon::is_zero(num);
      if (!res.pass) res.detail = "numerator = " + num.get_str() + ", nonzero";
    } else {
      res.pass = true;
    }
    report.results.push_back(std::move(res));
  };

  for (const auto& p : enumerate_affine_upto(n, D)) {
    if (!in_Dmu(p, w)) continue;
    for (const auto& e : loc::edges_from(p)) {
      bool inside = in_Dmu(e.target, w);
      std::string edge = p.to_string() + " -> " + e.target.to_string() +
                         " (i=" + std::to_string(e.i) + ")";
      for (int r = 0; r <= rmax; ++r) {
        // raising coefficients out of p
        check_coeff(renorm_e_coeff(e, r), inside, edge,
                    "x-,r=" + std::to_string(r));
        // lowering coefficients out of p: edges p' -> p with p' = p + box are
        // exactly the same edge set traversed backwards; a lowering move out
        // of p itself has source pattern p as the bigger end.
      }
    }
    // lowering moves out of p: enumerate boxes of p
    for (int i = 1; i <= n; ++i)
      for (int m = 0; m + 1 <= p.max_len(); ++m) {
        int l = AffinePattern::residue(i - m, n);
        auto q = p.remove_box(l, m);
        if (!q) continue;
        loc::FixedEdge e{*q, p, i, m};
        bool inside = in_Dmu(*q, w);
        std::string edge = p.to_string() + " -> " + q->to_string() +
                           " (i=" + std::to_string(i) + ")";
        for (int r = 0; r <= rmax; ++r)
          check_coeff(renorm_f_coeff(e, r), inside, edge,
                      "x+,r=" + std::to_string(r));
      }
  }
  return report;
}

std::map<std::vector<int>, long> dmu_counts(int n, const DominantWeight& w,
                                            int cutoff) {
  std::map<std::vector<int>, long> counts;
  for (const auto& p : enumerate_affine_upto(n, cutoff))
    if (in_Dmu(p, w)) counts[p.degree()]++;
  return counts;
}

}  // namespace laumon::integrable
