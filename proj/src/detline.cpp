#include "laumon/detline.hpp"

#include "laumon/affine_module.hpp"

namespace laumon::detline {

namespace {

// nonzero entries d_{0j}, j <= 0, as (j, d_{0j}); finitely many
std::vector<std::pair<long, int>> row0_support(const AffinePattern& p) {
  std::vector<std::pair<long, int>> out;
  for (long j = 0; j >= -long(p.max_len()); --j) {
    int v = p.d(0, j);
    if (v != 0) out.emplace_back(j, v);
  }
  return out;
}

}  // namespace

Scalar char_D0(const AffinePattern& p) {
  int n = p.n;
  auto supp = row0_support(p);
  // per-residue box counts sum_{k = j mod n} d_{0k}
  std::vector<long> res_count(n, 0);
  for (auto& [j, v] : supp) res_count[AffinePattern::residue(j, n) - 1] += v;
  Scalar total;
  for (int j = 1; j <= n; ++j)
    total += Scalar(Q(1 - res_count[j - 1])) * Scalar::x(j);
  Q quad(0), lin_hp(0);
  for (auto& [j, v] : supp) {
    quad += Q(v) * Q(v - 1) / 2;
    lin_hp += Q(v) * Q(floor_div(-j, p.n));
  }
  total += Scalar(quad) * Scalar::h() + Scalar(lin_hp) * Scalar::hp();
  return total;
}

Scalar c1_via_phi(const AffinePattern& p) {
  Scalar phi2 = affine::phi_coeff(p, 2);
  Scalar phi3 = affine::phi_coeff(p, 3);
  Scalar sum_x, sum2, sum3;
  for (int j = 1; j <= p.n; ++j) {
    Scalar xh = Scalar::x(j) + Scalar::hp();
    sum_x += Scalar::x(j);
    sum2 += xh * xh;
    sum3 += xh * xh * xh;
  }
  Scalar hmhp = Scalar::h() - Scalar::hp();
  Scalar inner = Scalar(Q(-2)) * phi3 + Scalar(Q(3)) * hmhp * phi2 -
                 Scalar(Q(2)) * sum3 - Scalar(Q(3)) * hmhp * sum2;
  return Scalar(Q(1, 12)) * inner / (Scalar::h() * Scalar::hp()) + sum_x;
}

Scalar phi1_closed(const AffinePattern& p) {
  Scalar s;
  for (int j = 1; j <= p.n; ++j) s -= Scalar::x(j);
  return s - Scalar(Q(p.n)) * Scalar::hp();
}

Scalar phi2_closed(const AffinePattern& p) {
  Scalar s;
  for (int j = 1; j <= p.n; ++j) {
    Scalar xh = Scalar::x(j) + Scalar::hp();
    s += xh * xh;
  }
  long boxes = 0;
  for (auto& [j, v] : row0_support(p)) boxes += v;
  return s - Scalar(Q(2 * boxes)) * Scalar::h() * Scalar::hp();
}

Scalar phi3_closed(const AffinePattern& p) {
  int n = p.n;
  Scalar s;
  for (int j = 1; j <= n; ++j) {
    Scalar xh = Scalar::x(j) + Scalar::hp();
    s -= xh * xh * xh;
  }
  auto supp = row0_support(p);
  std::vector<long> res_count(n, 0);
  for (auto& [j, v] : supp) res_count[AffinePattern::residue(j, n) - 1] += v;
  Scalar bracket;
  for (int j = 1; j <= n; ++j)
    bracket += Scalar(Q(2 * res_count[j - 1])) * Scalar::x(j);
  Q sq(0), flo(0);
  for (auto& [j, v] : supp) {
    sq += Q(v) * Q(v);
    flo += Q(v) * Q(2 * floor_div(-j, n) - 1);
  }
  bracket -= Scalar(sq) * Scalar::h();
  bracket -= Scalar(flo) * Scalar::hp();
  return s + Scalar(Q(3)) * Scalar::h() * Scalar::hp() * bracket;
}

XviReport verify_xvi(int n, int D, bool diagonal_only) {
  XviReport report;
  auto check = [&](const AffinePattern& p) {
    auto deg = p.degree();
    bool diag = true;
    for (int k = 1; k < n; ++k)
      if (deg[k] != deg[0]) diag = false;
    if (diagonal_only && !diag) return;
    bool pass = char_D0(p) == c1_via_phi(p);
    report.results.push_back({p.to_string(), diag, pass});
  };
  if (diagonal_only) {
    for (int d = 0; d <= D; ++d)
      for (const auto& p : enumerate_affine(n, std::vector<int>(n, d)))
        check(p);
  } else {
    for (const auto& p : enumerate_affine_upto(n, D)) check(p);
  }
  return report;
}

}  // namespace laumon::detline
