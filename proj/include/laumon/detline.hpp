#pragma once

#include "laumon/patterns.hpp"

namespace laumon::detline {

// Fiber character of the determinant line bundle D_0 at the fixed point:
// sum_j x_j (1 - sum_{k = j mod n} d_{0k}) + (1/2) sum_{j<=0} d_{0j}(d_{0j}-1) h
//   + sum_{j<=0} d_{0j} floor(-j/n) hp.
Scalar char_D0(const AffinePattern& p);

// Right-hand side of the Chern-class formula:
// (1/12) h^{-1} hp^{-1} (-2 Phi_{n,3} + 3(h-hp) Phi_{n,2}
//   - 2 sum (x_j+hp)^3 - 3(h-hp) sum (x_j+hp)^2) + sum x_j.
Scalar c1_via_phi(const AffinePattern& p);

// Closed forms of the first power-sum coefficients, for cross-checking the
// series expansion.
Scalar phi1_closed(const AffinePattern& p);
Scalar phi2_closed(const AffinePattern& p);
Scalar phi3_closed(const AffinePattern& p);

struct XviResult {
  std::string pattern;
  bool diagonal_degree;
  bool pass;
};
struct XviReport {
  std::vector<XviResult> results;
  size_t diagonal_failures() const {
    size_t f = 0;
    for (auto& r : results)
      if (r.diagonal_degree && !r.pass) ++f;
    return f;
  }
  size_t general_failures() const {
    size_t f = 0;
    for (auto& r : results)
      if (!r.pass) ++f;
    return f;
  }
};

// Compares char_D0 with the Phi expression on every fixed point of total
// degree <= D (mode "all") or on equal-component degree vectors (d,...,d)
// with d <= D (mode "diagonal").
XviReport verify_xvi(int n, int D, bool diagonal_only);

}  // namespace laumon::detline
