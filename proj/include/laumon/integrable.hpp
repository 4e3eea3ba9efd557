#pragma once

#include <map>

#include "laumon/localization.hpp"
#include "laumon/patterns.hpp"

namespace laumon::integrable {

// Specialization h = 1, hp = -K - n, x_j = mu~_j - j + 1.
std::array<Q, kNumSlots> specialization_point(const DominantWeight& w);
// Exact rational value; throws std::domain_error naming a vanishing factor.
Q specialize(const Scalar& s, const DominantWeight& w);

// Renormalization constant C_p: product of the tangent weights at p.
Scalar renorm_C(const AffinePattern& p);

// Renormalized matrix coefficients <.|.>:  e<p,p'> = -f[p',p] and
// f<p',p> = -e[p,p'] for the edge p -> p' = p + box.
Scalar renorm_e_coeff(const loc::FixedEdge& e, int r);  // x^-_{i,r} side
Scalar renorm_f_coeff(const loc::FixedEdge& e, int r);  // x^+_{i,r} side

struct TruncationResult {
  std::string edge;
  std::string kind;  // "x-,r=1" style tag
  bool pass;
  std::string detail;
};
struct TruncationReport {
  std::vector<TruncationResult> results;
  size_t failures() const {
    size_t f = 0;
    for (auto& r : results)
      if (!r.pass) ++f;
    return f;
  }
  bool all_pass() const { return failures() == 0; }
};

// For every p in D(mu) with |d| <= D and r <= rmax:
//  (a) denominators of the renormalized coefficients specialize to nonzero,
//  (b) edges leaving D(mu) have numerators specializing to zero.
TruncationReport check_truncation(int n, const DominantWeight& w, int D,
                                  int rmax);

// Graded count of D(mu): degree vector -> number of patterns.
std::map<std::vector<int>, long> dmu_counts(int n, const DominantWeight& w,
                                            int cutoff);

}  // namespace laumon::integrable
