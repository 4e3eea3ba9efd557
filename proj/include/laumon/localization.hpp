#pragma once

#include "laumon/charpoly.hpp"
#include "laumon/patterns.hpp"
#include "laumon/upoly.hpp"

namespace laumon::loc {

// One-box correspondence between fixed points: target = source + box on row i
// (column j = i - m).
struct FixedEdge {
  AffinePattern source, target;
  long i;  // row of the added box, canonical representative in 1..n
  int m;   // part slot inside lambda^{res(i-m)}
  long j() const { return i - m; }
};

// All edges out of p (every row 1..n, every valid box slot).
std::vector<FixedEdge> edges_from(const AffinePattern& p);

// chi(J_{lambda_src}, J_{lambda_tgt}(-D_inf + alpha D_0 + beta D_1)) as a
// character of the two-torus (no t variables).
CharPoly char_chi_rank1(const Partition& lambda_src, const Partition& lambda_tgt,
                        int alpha, int beta);

// Character of the diagonal bundle E at the fixed pair (p, p_primed).
CharPoly char_E(const AffinePattern& p, const AffinePattern& p_primed);
// Character of the tangent space at p: char_E(p, p).
CharPoly char_tangent(const AffinePattern& p);
// Character of the tangent space to the one-box correspondence at the edge.
CharPoly char_corr_tangent(const FixedEdge& e);

// chi(F'_{k-n}, F_{k-n}(-D_inf)) ["same"] and chi(F'_{k-1-n}, F_{k-n}(-D_inf))
// ["shifted"] at the fixed pair; k in 1..n.
enum class ChiVariant { same, shifted };
CharPoly char_chi_parabolic(int k, const AffinePattern& p,
                            const AffinePattern& p_primed, ChiVariant v);

// Oracle via the independent cover computation: assembles char_E from the
// rank-1 characters of the n-fold cover and the invariant-part extraction.
CharPoly char_E_via_cover(const AffinePattern& p, const AffinePattern& p_primed);

struct KIdentityResult {
  bool pass = false;
  std::string detail;
};
// [E] (q'-1) = sum_k chi_same_k - chi_shifted_k, exactly.
KIdentityResult verify_K_identity(const AffinePattern& p,
                                  const AffinePattern& p_primed);

// Product of the torus weights of a character (all multiplicities expanded).
// Throws if a weight vanishes or the character has negative coefficients.
Scalar weight_product(const CharPoly& c);

// Localization formula coefficients for the edge:
//   e: -(tangent weights at source) / (correspondence weights)
//   f: +(tangent weights at target) / (correspondence weights)
enum class CoeffKind { e, f };
Scalar localized_coeff(const FixedEdge& e, CoeffKind kind);

// Closed-form matrix coefficients for the same edge, for cross-checking.
Scalar closed_form_coeff(const FixedEdge& e, CoeffKind kind);

// Kunneth components from corner eigenvalue data:
//   e^{0,0} = c0 - h c1 - hp c1' + h hp c2, and the three sign variants.
struct KunnethComponents {
  Scalar cj, cj1, cj1p, cj2;
};
KunnethComponents kunneth_solve(const Scalar& e00, const Scalar& e0i,
                                const Scalar& ei0, const Scalar& eii);
// curve case: c^{(j)} = (e_inf + e_0)/2, c^{(j-1)} = (e_inf - e_0)/(2h)
std::pair<Scalar, Scalar> kunneth_solve_curve(const Scalar& e0,
                                              const Scalar& einf);

// Fiber character of the tautological sheaf F_0 at the four corners of the
// surface over the fixed point p; corners are (c, x) with 0 = the origin.
enum class Corner { c0x0, c0xi, cix0, cixi };
CharPoly corner_char_F0(const AffinePattern& p, Corner c);

// Characteristic rational function of a virtual character under the
// dual-weight convention: each monomial q^b q'^c prod t^{2a} of coefficient
// m contributes (u + b + c hp/h + sum a_i x_i/h)^m.
FactoredRatU char_to_rational(const CharPoly& c);

}  // namespace laumon::loc
