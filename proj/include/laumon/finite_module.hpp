#pragma once

#include "laumon/modulevec.hpp"
#include "laumon/patterns.hpp"
#include "laumon/series.hpp"

namespace laumon::finite {

using VectorV = ModuleVec<FinitePattern>;

// diagonal operators
Scalar eigen_E(const FinitePattern& p, int i);       // E_ii, 1 <= i <= n
Scalar eigen_h_chevalley(const FinitePattern& p, int i);  // h_i, 1 <= i <= n-1

// Chevalley operators on a basis vector; e raises d_i, f lowers it.
VectorV apply_e(const FinitePattern& p, int i);
VectorV apply_f(const FinitePattern& p, int i);

// Yangian currents evaluated on a basis vector.  xminus_{k,r} follows the
// e-side with the fiber weight (-x_j + (d_{kj} + (1-k)/2) h)^r; xplus_{k,r}
// follows the f-side with (-x_j + (d_{kj} - 1 + (1-k)/2) h)^r, d read in the
// source pattern.
VectorV apply_xminus(const FinitePattern& p, int k, int r);
VectorV apply_xplus(const FinitePattern& p, int k, int r);

// a_m(u) eigenvalue: prod_{j<=m} (u - (-x_j/h + d_{mj})); row n reads 0.
FactoredRatU eigen_a(const FinitePattern& p, int m);
// quotient-bundle variant a_{mi}(u) = a_i(u) / a_m(u), 0 <= m <= i <= n
FactoredRatU eigen_a_mi(const FinitePattern& p, int m, int i);
// h_k(u) as the four-factor combination through a_{m,.}; any m < k gives the
// same function. via_m = 0 is the tautological-bundle form.
FactoredRatU eigen_h_series(const FinitePattern& p, int k, int via_m = 0);

// Series coefficient h_{k,r} of h_k(u) = 1 + sum_r h_{k,r} h^{-r} u^{-r-1};
// returned in the dimensionful normalization (multiplied by h^r).
Scalar h_generator_eigen(const FinitePattern& p, int k, int r);

}  // namespace laumon::finite
