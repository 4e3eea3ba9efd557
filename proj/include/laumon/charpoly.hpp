#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laumon/scalar.hpp"

namespace laumon {

// Laurent polynomial in t_1^2..t_n^2, q^{1/2}, q' with integer coefficients.
// The q exponent is stored doubled so half-integral twists stay exact; the
// t exponents are exponents of t_i^2.
struct CharKey {
  int q2 = 0;  // doubled exponent of q
  int qp = 0;
  std::array<int, kMaxXVars> t{};  // exponents of t_i^2

  auto operator<=>(const CharKey&) const = default;
};

class CharPoly {
 public:
  CharPoly() = default;
  static CharPoly monomial(const CharKey& k, Z coeff);
  static CharPoly one() { return monomial(CharKey{}, 1); }
  // q^{b2/2}, q'^c, t_i^{2a}
  static CharPoly q_pow2(int b2);
  static CharPoly qp_pow(int c);
  static CharPoly t2_pow(int i, int a);  // i is 1-based

  bool is_zero() const { return c_.empty(); }
  size_t size() const { return c_.size(); }
  const std::map<CharKey, Z>& terms() const { return c_; }

  CharPoly operator-() const;
  CharPoly operator+(const CharPoly& o) const;
  CharPoly operator-(const CharPoly& o) const;
  CharPoly operator*(const CharPoly& o) const;
  CharPoly& operator+=(const CharPoly& o) { return *this = *this + o; }
  CharPoly& operator-=(const CharPoly& o) { return *this = *this - o; }
  bool operator==(const CharPoly& o) const { return c_ == o.c_; }

  // q^a geometric bracket (q^a - 1)/(q - 1), exact for any integer a:
  //   a > 0: 1 + q + ... + q^{a-1};  a = 0: 0;  a < 0: -(q^a + ... + q^{-1}).
  static CharPoly q_bracket(int a);
  static CharPoly qp_bracket(int a);  // same in q'

  // Exact division; nullopt if not divisible (remainder returned if asked).
  std::optional<CharPoly> try_divide(const CharPoly& d,
                                     CharPoly* remainder = nullptr) const;

  Z eval_all_one() const;  // value at q = q' = t = 1

  struct Weight {
    Scalar value;
    Z multiplicity;
  };
  // Replaces each monomial q^b q'^c prod t_i^{2 a_i} (coefficient m >= 0)
  // by the weight b*h + c*hp + sum a_i x_i with multiplicity m.
  // Throws if a coefficient is negative or a q-exponent is half-integral.
  std::vector<Weight> to_weights() const;

  std::string to_string() const;

 private:
  std::map<CharKey, Z> c_;
};

}  // namespace laumon
