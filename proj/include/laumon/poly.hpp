#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "laumon/rational.hpp"

namespace laumon {

// Sparse multivariate polynomials over Q in x1..x6, h, hp.
//
// A monomial is packed into a uint64: eight 8-bit exponent slots, x1 in the
// lowest byte, then x2..x6, h, hp in the highest byte.  The monomial order is
// graded lexicographic with x1 < x2 < ... < x6 < h < hp, which for equal total
// degree is exactly the integer order on the packed value.

constexpr int kMaxXVars = 6;
constexpr int kVarH = 6;
constexpr int kVarHp = 7;
constexpr int kNumSlots = 8;

using Mono = std::uint64_t;

inline int mono_exp(Mono m, int var) { return int((m >> (8 * var)) & 0xff); }

inline Mono mono_of_var(int var, int e = 1) {
  return Mono(std::uint64_t(e) << (8 * var));
}

inline int mono_total_deg(Mono m) {
  int d = 0;
  for (int v = 0; v < kNumSlots; ++v) d += mono_exp(m, v);
  return d;
}

// Throws on per-slot overflow (exponent >= 256).
Mono mono_mul(Mono a, Mono b);
bool mono_divides(Mono a, Mono b);        // a | b slot-wise
inline Mono mono_div(Mono b, Mono a) { return b - a; }  // requires a | b
Mono mono_gcd(Mono a, Mono b);

// true iff a < b in graded lex.
inline bool mono_less(Mono a, Mono b) {
  int da = mono_total_deg(a), db = mono_total_deg(b);
  if (da != db) return da < db;
  return a < b;
}

struct Term {
  Mono mono = 0;
  Q coeff;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Q& c);
  static Poly var(int v, int e = 1);
  static Poly term(Mono m, const Q& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  int total_deg() const;
  int deg_in(int var) const;
  size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading() const { return terms_.front(); }  // grlex max

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const { return cmp(o) == 0; }
  bool operator!=(const Poly& o) const { return cmp(o) != 0; }
  bool operator<(const Poly& o) const { return cmp(o) < 0; }

  Poly mul_term(Mono m, const Q& c) const;
  Poly mul_q(const Q& c) const;

  // Exact division: returns quotient iff *this == q * d exactly.
  std::optional<Poly> try_divide(const Poly& d) const;

  // gcd over Q[x..], normalized so the grlex-leading coefficient is 1.
  static Poly gcd(const Poly& a, const Poly& b);

  Mono mono_content() const;
  Q rational_content() const;  // gcd of coefficients (positive), 0 for zero

  // Coefficient of v^k when viewed as a univariate polynomial in v.
  Poly coeff_in_var(int var, int k) const;

  Q eval(const std::array<Q, kNumSlots>& vals) const;
  // Substitutes var -> c * target (target < 0 means the constant c).
  Poly subst_var(int var, const Q& c, int target) const;

  // Canonical text, terms in ascending graded-lex order.
  std::string to_string() const;

  // Builds from unsorted term list (merges duplicates, drops zeros).
  static Poly from_terms(std::vector<Term> ts);

 private:
  int cmp(const Poly& o) const;
  // terms sorted descending in grlex, no zero coefficients.
  std::vector<Term> terms_;
};

Poly operator*(const Q& c, const Poly& p);

// Pseudo-remainder of f by g viewed as univariate polynomials in var.
Poly pseudo_rem(const Poly& f, const Poly& g, int var);

extern const char* const kVarNames[kNumSlots];

}  // namespace laumon
