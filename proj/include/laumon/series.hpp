#pragma once

#include <map>

#include "laumon/upoly.hpp"

namespace laumon {

// Truncated Laurent series in 1/u.  Index r holds the coefficient of u^{-r};
// negative indices are honest powers of u.  Coefficients with index beyond
// `order` are undefined, never silently zero, and arithmetic tracks how far
// the result is still trustworthy.
class SeriesU {
 public:
  explicit SeriesU(int order) : order_(order) {}
  static SeriesU constant(const Scalar& c, int order);
  static SeriesU from_upoly(const UPoly& p, int order);

  int order() const { return order_; }
  // smallest index carrying a nonzero coefficient; order+1 if none
  int low() const;
  bool known(int r) const { return r <= order_; }
  Scalar coeff(int r) const;
  void set(int r, Scalar v);

  SeriesU operator+(const SeriesU& o) const;
  SeriesU operator-(const SeriesU& o) const;
  SeriesU operator*(const SeriesU& o) const;
  SeriesU mul_scalar(const Scalar& s) const;
  SeriesU inverse() const;
  SeriesU derivative_u() const;  // d/du
  SeriesU truncated(int order) const;
  bool is_zero_to_order() const;

  bool operator==(const SeriesU& o) const;  // on the common known window

  std::string to_string() const;

 private:
  int order_;
  std::map<int, Scalar> c_;  // only nonzero entries with index <= order_
};

// Expansion of a rational function at u = infinity, to the given order.
SeriesU expand_in_u(const RationalU& f, int order);
SeriesU expand_in_u(const FactoredRatU& f, int order);

// d/du log f as a series, computed from the factorization:
// sum over zeros of 1/(u-z) minus sum over poles.
SeriesU log_derivative_series(const FactoredRatU& f, int order);

}  // namespace laumon
