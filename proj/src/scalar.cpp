#include "laumon/scalar.hpp"

#include <algorithm>

namespace laumon {

namespace {

bool factor_less(const Scalar::Factor& a, const Scalar::Factor& b) {
  return a.poly < b.poly;
}

}  // namespace

void Scalar::push_den(Poly p, int exp) {
  if (exp == 0) return;
  if (p.is_zero()) throw std::domain_error("division by zero");
  if (p.is_constant()) {
    // constant factors fold into the numerator
    Q c = p.leading().coeff;
    Q scale(1);
    for (int k = 0; k < exp; ++k) scale /= c;
    num_ = num_.mul_q(scale);
    return;
  }
  Q lc = p.leading().coeff;
  if (lc != 1) {
    p = p.mul_q(Q(1) / lc);
    Q scale(1);
    for (int k = 0; k < exp; ++k) scale /= lc;
    num_ = num_.mul_q(scale);
  }
  for (auto& f : den_) {
    if (f.poly == p) {
      f.exp += exp;
      return;
    }
  }
  den_.push_back({std::move(p), exp});
}

Scalar Scalar::ratio(const Poly& num, const Poly& den) {
  Scalar s(num);
  s.push_den(den, 1);
  s.reduce();
  return s;
}

Poly Scalar::den_poly() const {
  Poly d{Q(1)};
  for (const auto& f : den_)
    for (int k = 0; k < f.exp; ++k) d = d * f.poly;
  return d;
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  std::vector<Factor> work = std::move(den_);
  den_.clear();
  while (!work.empty()) {
    Factor f = std::move(work.back());
    work.pop_back();
    while (f.exp > 0) {
      if (auto q = num_.try_divide(f.poly)) {
        num_ = std::move(*q);
        --f.exp;
        continue;
      }
      if (f.poly.total_deg() > 1) {
        // composite factors may share a proper divisor with the numerator
        Poly g = Poly::gcd(num_, f.poly);
        if (!g.is_constant()) {
          Poly rest = *f.poly.try_divide(g);
          work.push_back({std::move(g), f.exp});
          if (!rest.is_constant()) {
            work.push_back({rest, f.exp});
          } else {
            Q c = rest.leading().coeff;
            Q scale(1);
            for (int k = 0; k < f.exp; ++k) scale /= c;
            num_ = num_.mul_q(scale);
          }
          f.exp = 0;
          continue;
        }
      }
      break;
    }
    if (f.exp > 0) {
      bool merged = false;
      for (auto& g : den_)
        if (g.poly == f.poly) {
          g.exp += f.exp;
          merged = true;
          break;
        }
      if (!merged) den_.push_back(std::move(f));
    }
  }
  std::sort(den_.begin(), den_.end(), factor_less);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // lcm of the two factored denominators
  Scalar r;
  Poly na = num_, nb = o.num_;
  std::vector<Factor> merged;
  size_t i = 0, j = 0;
  auto scale = [](Poly& p, const Poly& f, int e) {
    for (int k = 0; k < e; ++k) p = p * f;
  };
  // denominator factor lists are kept sorted by reduce()
  const std::vector<Factor>&a = den_, &b = o.den_;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].poly < b[j].poly)) {
      merged.push_back(a[i]);
      scale(nb, a[i].poly, a[i].exp);
      ++i;
    } else if (i == a.size() || b[j].poly < a[i].poly) {
      merged.push_back(b[j]);
      scale(na, b[j].poly, b[j].exp);
      ++j;
    } else {
      int e = std::max(a[i].exp, b[j].exp);
      merged.push_back({a[i].poly, e});
      scale(na, a[i].poly, e - a[i].exp);
      scale(nb, b[j].poly, e - b[j].exp);
      ++i, ++j;
    }
  }
  r.num_ = na + nb;
  r.den_ = std::move(merged);
  r.reduce();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  Scalar r;
  r.num_ = num_ * o.num_;
  r.den_ = den_;
  for (const auto& f : o.den_) {
    bool merged = false;
    for (auto& g : r.den_)
      if (g.poly == f.poly) {
        g.exp += f.exp;
        merged = true;
        break;
      }
    if (!merged) r.den_.push_back(f);
  }
  r.reduce();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r;
  r.num_ = den_poly();
  r.push_den(num_, 1);
  r.reduce();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::pow(int e) const {
  Scalar r{Q(1)};
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (num_.is_zero()) return o.num_.is_zero();
  if (o.num_.is_zero()) return false;
  // canonical forms are unique up to factor splitting of the denominator
  return num_ == o.num_ && den_poly() == o.den_poly();
}

bool Scalar::operator<(const Scalar& o) const {
  if (num_ != o.num_) return num_ < o.num_;
  Poly da = den_poly(), db = o.den_poly();
  return da < db;
}

Scalar Scalar::subst_hp(const Q& c) const {
  Scalar r(num_.subst_var(kVarHp, c, kVarH));
  for (const auto& f : den_) {
    Poly p = f.poly.subst_var(kVarHp, c, kVarH);
    if (p.is_zero())
      throw std::domain_error("denominator factor vanishes under hp -> " +
                              c.get_str() + "*h: " + f.poly.to_string());
    r.push_den(std::move(p), f.exp);
  }
  r.reduce();
  return r;
}

Q Scalar::eval_num(const std::array<Q, kNumSlots>& vals) const {
  return num_.eval(vals);
}

Q Scalar::eval_den(const std::array<Q, kNumSlots>& vals) const {
  Q d(1);
  for (const auto& f : den_) {
    Q v = f.poly.eval(vals);
    for (int k = 0; k < f.exp; ++k) d *= v;
  }
  return d;
}

Q Scalar::eval(const std::array<Q, kNumSlots>& vals) const {
  Q d(1);
  for (const auto& f : den_) {
    Q v = f.poly.eval(vals);
    if (laumon::is_zero(v))
      throw std::domain_error("denominator factor vanishes at substitution: " +
                              f.poly.to_string());
    for (int k = 0; k < f.exp; ++k) d *= v;
  }
  return num_.eval(vals) / d;
}

std::string Scalar::to_string() const {
  auto wrap = [](const Poly& p) {
    std::string s = p.to_string();
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  if (den_.empty()) return num_.to_string();
  return wrap(num_) + " / " + wrap(den_poly());
}

}  // namespace laumon
