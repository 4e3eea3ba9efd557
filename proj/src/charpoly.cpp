#include "laumon/charpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace laumon {

CharPoly CharPoly::monomial(const CharKey& k, Z coeff) {
  CharPoly p;
  if (coeff != 0) p.c_[k] = std::move(coeff);
  return p;
}

CharPoly CharPoly::q_pow2(int b2) {
  CharKey k;
  k.q2 = b2;
  return monomial(k, 1);
}

CharPoly CharPoly::qp_pow(int c) {
  CharKey k;
  k.qp = c;
  return monomial(k, 1);
}

CharPoly CharPoly::t2_pow(int i, int a) {
  CharKey k;
  k.t[i - 1] = a;
  return monomial(k, 1);
}

CharPoly CharPoly::operator-() const {
  CharPoly r = *this;
  for (auto& [k, v] : r.c_) v = -v;
  return r;
}

CharPoly CharPoly::operator+(const CharPoly& o) const {
  CharPoly r = *this;
  for (const auto& [k, v] : o.c_) {
    auto it = r.c_.find(k);
    if (it == r.c_.end()) {
      r.c_[k] = v;
    } else {
      it->second += v;
      if (it->second == 0) r.c_.erase(it);
    }
  }
  return r;
}

CharPoly CharPoly::operator-(const CharPoly& o) const { return *this + (-o); }

namespace {
CharKey key_mul(const CharKey& a, const CharKey& b) {
  CharKey k;
  k.q2 = a.q2 + b.q2;
  k.qp = a.qp + b.qp;
  for (int i = 0; i < kMaxXVars; ++i) k.t[i] = a.t[i] + b.t[i];
  return k;
}
}  // namespace

CharPoly CharPoly::operator*(const CharPoly& o) const {
  CharPoly r;
  for (const auto& [ka, va] : c_)
    for (const auto& [kb, vb] : o.c_) {
      CharKey k = key_mul(ka, kb);
      auto it = r.c_.find(k);
      if (it == r.c_.end()) {
        Z v = va * vb;
        if (v != 0) r.c_[k] = std::move(v);
      } else {
        it->second += va * vb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

CharPoly CharPoly::q_bracket(int a) {
  CharPoly r;
  if (a > 0)
    for (int k = 0; k < a; ++k) r += q_pow2(2 * k);
  else
    for (int k = a; k < 0; ++k) r -= q_pow2(2 * k);
  return r;
}

CharPoly CharPoly::qp_bracket(int a) {
  CharPoly r;
  if (a > 0)
    for (int k = 0; k < a; ++k) r += qp_pow(k);
  else
    for (int k = a; k < 0; ++k) r -= qp_pow(k);
  return r;
}

namespace {

// minimal exponents per slot; monomials are units in the Laurent ring, so
// dividing both operands by them reduces to polynomial division
CharKey min_key(const CharPoly& p) {
  CharKey m;
  bool first = true;
  for (const auto& [k, v] : p.terms()) {
    if (first) {
      m = k;
      first = false;
      continue;
    }
    m.q2 = std::min(m.q2, k.q2);
    m.qp = std::min(m.qp, k.qp);
    for (int i = 0; i < kMaxXVars; ++i) m.t[i] = std::min(m.t[i], k.t[i]);
  }
  return m;
}

CharKey key_sub(const CharKey& a, const CharKey& b) {
  CharKey k;
  k.q2 = a.q2 - b.q2;
  k.qp = a.qp - b.qp;
  for (int i = 0; i < kMaxXVars; ++i) k.t[i] = a.t[i] - b.t[i];
  return k;
}

bool key_nonneg(const CharKey& k) {
  if (k.q2 < 0 || k.qp < 0) return false;
  for (int i = 0; i < kMaxXVars; ++i)
    if (k.t[i] < 0) return false;
  return true;
}

}  // namespace

std::optional<CharPoly> CharPoly::try_divide(const CharPoly& d,
                                             CharPoly* remainder) const {
  if (d.is_zero()) throw std::domain_error("character division by zero");
  if (is_zero()) {
    if (remainder) *remainder = CharPoly();
    return CharPoly();
  }
  // normalize away the monomial units so all exponents are nonnegative;
  // lexicographic order on the shifted keys is then a well-order and plain
  // leading-term division decides exact divisibility
  CharKey sa = min_key(*this), sd = min_key(d);
  CharPoly a = *this * monomial(key_sub(CharKey{}, sa), 1);
  CharPoly b = d * monomial(key_sub(CharKey{}, sd), 1);
  CharPoly rem = a, quot;
  const auto& dl = *b.c_.rbegin();
  while (!rem.is_zero()) {
    const auto& rl = *rem.c_.rbegin();
    CharKey k = key_sub(rl.first, dl.first);
    if (!key_nonneg(k) || rl.second % dl.second != 0) {
      if (remainder)
        *remainder = rem * monomial(sa, 1);
      return std::nullopt;
    }
    CharPoly t = monomial(k, rl.second / dl.second);
    quot += t;
    rem = rem - b * t;
  }
  if (remainder) *remainder = CharPoly();
  return quot * monomial(key_sub(sa, sd), 1);
}

Z CharPoly::eval_all_one() const {
  Z s = 0;
  for (const auto& [k, v] : c_) s += v;
  return s;
}

std::vector<CharPoly::Weight> CharPoly::to_weights() const {
  std::vector<Weight> ws;
  for (const auto& [k, v] : c_) {
    if (v < 0)
      throw std::domain_error(
          "character has a negative coefficient, not a representation: " +
          to_string());
    if (k.q2 % 2 != 0)
      throw std::domain_error("character has a half-integral q-exponent: " +
                              to_string());
    Scalar w = Scalar(Q(k.q2 / 2)) * Scalar::h() + Scalar(Q(k.qp)) * Scalar::hp();
    for (int i = 0; i < kMaxXVars; ++i)
      if (k.t[i] != 0) w += Scalar(Q(k.t[i])) * Scalar::x(i + 1);
    ws.push_back({std::move(w), v});
  }
  return ws;
}

std::string CharPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    Z mag = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    std::string vars;
    if (k.q2 != 0) {
      vars += "q^";
      if (k.q2 % 2 == 0)
        vars += std::to_string(k.q2 / 2);
      else
        vars += "(" + std::to_string(k.q2) + "/2)";
    }
    if (k.qp != 0) {
      if (!vars.empty()) vars += "*";
      vars += "qp^" + std::to_string(k.qp);
    }
    for (int i = 0; i < kMaxXVars; ++i)
      if (k.t[i] != 0) {
        if (!vars.empty()) vars += "*";
        vars += "t" + std::to_string(i + 1) + "^" + std::to_string(2 * k.t[i]);
      }
    if (vars.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << vars;
    }
  }
  return os.str();
}

}  // namespace laumon
