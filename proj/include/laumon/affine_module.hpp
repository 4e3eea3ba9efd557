#pragma once

#include "laumon/modulevec.hpp"
#include "laumon/patterns.hpp"
#include "laumon/series.hpp"

namespace laumon::affine {

using VectorM = ModuleVec<AffinePattern>;

// Diagonal Chevalley eigenvalue (the Kac-Moody h_i), i taken modulo n.
Scalar eigen_h_diag(const AffinePattern& p, long i);

// e_i adds one box on row i (any integer; rows repeat modulo n up to the
// hp-shift), f_i removes one.  Coefficients are the fixed-point matrix
// coefficients; invalid moves contribute nothing.
VectorM apply_e(const AffinePattern& p, long i);
VectorM apply_f(const AffinePattern& p, long i);

// Current coefficients in the dimensionless normalization: the e-side
// coefficient times (p_{ij}/h + (1-i)/2)^r, respectively the f-side times
// (p_{ij}/h - (1+i)/2)^r.
VectorM apply_xminus(const AffinePattern& p, long i, int r);
VectorM apply_xplus(const AffinePattern& p, long i, int r);

// a_{mi}(u) eigenvalue, m <= i arbitrary integers: the telescoped value of
// prod_{j<=i}(u - p_{ij}/h) / prod_{k<=m}(u - p_{mk}/h).
FactoredRatU eigen_a_mi(const AffinePattern& p, long m, long i);

// h_i(u) eigenvalue, telescoped closed form.
FactoredRatU eigen_h_series(const AffinePattern& p, long i);
// the same through the quotient-bundle combination with base row m < i
FactoredRatU eigen_h_series_via(const AffinePattern& p, long i, long m);

// a_{0,n}(u) by the explicit product prod_{N-n<=j<=0}(u - p_{0j}/h + hp/h)
// over prod_{N<=j<=0}(u - p_{0j}/h); equals eigen_a_mi(p, 0, n).
FactoredRatU eigen_a0n_product(const AffinePattern& p);

// Phi_n(u) = d/du log a_{0n}(u): dimensionless series (um = u/h variable).
SeriesU phi_series_hat(const AffinePattern& p, int order);
// Dimensionful coefficient Phi_{n,r} of Phi_n(u) = sum Phi_{n,r} u^{-r-1}.
Scalar phi_coeff(const AffinePattern& p, int r);

// Dimensionless series coefficient of h_i(u) = 1 + sum_r c_r u^{-r-1}.
Scalar h_hat_eigen(const AffinePattern& p, long i, int r);

}  // namespace laumon::affine
