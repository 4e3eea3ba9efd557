#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "laumon/poly.hpp"

namespace laumon {

// Element of Q(x1..xn, h, hp): a reduced fraction num/den.
//
// The denominator is kept as a list of normalized factors (leading
// coefficient 1 in graded lex) with positive exponents.  Every factor is
// coprime to the numerator, so the pair is canonical: equal values have
// identical representations up to factor splitting, and the expanded
// denominator has leading coefficient 1.  Matrix coefficients only ever
// introduce low-degree factors, so cancellation is a divisibility test
// instead of a general gcd.
class Scalar {
 public:
  struct Factor {
    Poly poly;
    int exp;
  };

  Scalar() = default;
  /*implicit*/ Scalar(const Q& c) : num_(c) {}
  /*implicit*/ Scalar(long c) : num_(Q(c)) {}
  explicit Scalar(Poly p) : num_(std::move(p)) {}

  static Scalar x(int i) { return Scalar(Poly::var(i - 1)); }  // x_i, 1-based
  static Scalar h() { return Scalar(Poly::var(kVarH)); }
  static Scalar hp() { return Scalar(Poly::var(kVarHp)); }
  static Scalar ratio(const Poly& num, const Poly& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  const Poly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  Poly den_poly() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(int e) const;  // e >= 0

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;  // canonical order for containers

  // hp -> c * h;  throws if a denominator factor collapses to zero.
  Scalar subst_hp(const Q& c) const;

  // Full evaluation; throws std::domain_error naming the vanishing factor.
  Q eval(const std::array<Q, kNumSlots>& vals) const;
  // Evaluation of numerator and denominator separately.
  Q eval_num(const std::array<Q, kNumSlots>& vals) const;
  Q eval_den(const std::array<Q, kNumSlots>& vals) const;

  std::string to_string() const;  // canonical "num / den"

 private:
  void reduce();
  void push_den(Poly p, int exp);  // normalizes and records a factor
  Poly num_;
  std::vector<Factor> den_;
};

}  // namespace laumon
