#pragma once

#include <vector>

#include "laumon/scalar.hpp"

namespace laumon {

// Dense polynomial in u with Scalar coefficients; c_[k] is the u^k term.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Scalar c) : c_{std::move(c)} { trim(); }
  static UPoly u();
  static UPoly linear(const Scalar& root);  // u - root

  bool is_zero() const { return c_.empty(); }
  int deg() const { return int(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  Scalar coeff(int k) const {
    return k >= 0 && k < int(c_.size()) ? c_[k] : Scalar();
  }
  void set_coeff(int k, Scalar v);

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly mul_scalar(const Scalar& s) const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  // substitute u -> u + s
  UPoly shift(const Scalar& s) const;
  UPoly derivative() const;
  UPoly monic() const;

  // division over the coefficient field
  static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  static UPoly gcd(UPoly a, UPoly b);  // monic

  std::string to_string() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Rational function in u, reduced, denominator monic in u.
class RationalU {
 public:
  RationalU() : num_(Scalar(Q(0))), den_(Scalar(Q(1))) {}
  RationalU(UPoly num, UPoly den, bool reduce_now = true);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }

  RationalU operator*(const RationalU& o) const;
  RationalU operator/(const RationalU& o) const;
  RationalU operator+(const RationalU& o) const;
  RationalU operator-(const RationalU& o) const;
  RationalU shift(const Scalar& s) const;
  RationalU derivative() const;

  // exact equality as rational functions (cross multiplication)
  bool operator==(const RationalU& o) const;
  bool operator!=(const RationalU& o) const { return !(*this == o); }

  void reduce();
  std::string to_string() const;

 private:
  UPoly num_, den_;
};

// Product of monic linear factors times a Scalar prefactor.  All series
// eigenvalues in the engine have this shape, so identities between them are
// decided by comparing canonical factor multisets, with no polynomial gcd.
class FactoredRatU {
 public:
  FactoredRatU() : pref_(Q(1)) {}
  explicit FactoredRatU(Scalar pref) : pref_(std::move(pref)) {}

  void add_zero(Scalar root) { zeros_.push_back(std::move(root)); }
  void add_pole(Scalar root) { poles_.push_back(std::move(root)); }

  const Scalar& pref() const { return pref_; }
  const std::vector<Scalar>& zeros() const { return zeros_; }
  const std::vector<Scalar>& poles() const { return poles_; }

  FactoredRatU operator*(const FactoredRatU& o) const;
  FactoredRatU inverse() const;
  FactoredRatU shift(const Scalar& s) const;  // u -> u + s
  FactoredRatU pow(int e) const;              // any integer e

  void canonicalize();  // sorts and cancels equal zero/pole pairs
  bool operator==(const FactoredRatU& o) const;
  bool operator!=(const FactoredRatU& o) const { return !(*this == o); }

  RationalU expand() const;

  std::string to_string() const { return expand().to_string(); }

 private:
  Scalar pref_;
  std::vector<Scalar> zeros_, poles_;
};

}  // namespace laumon
