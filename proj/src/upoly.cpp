#include "laumon/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace laumon {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::u() {
  UPoly p;
  p.c_ = {Scalar(Q(0)), Scalar(Q(1))};
  return p;
}

UPoly UPoly::linear(const Scalar& root) {
  UPoly p;
  p.c_ = {-root, Scalar(Q(1))};
  return p;
}

void UPoly::set_coeff(int k, Scalar v) {
  if (k >= int(c_.size())) c_.resize(k + 1);
  c_[k] = std::move(v);
  trim();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] = coeff(int(k)) + o.coeff(int(k));
  r.trim();
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  UPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Scalar());
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

UPoly UPoly::mul_scalar(const Scalar& s) const {
  UPoly r = *this;
  for (auto& c : r.c_) c = c * s;
  r.trim();
  return r;
}

UPoly UPoly::shift(const Scalar& s) const {
  // Horner in (u + s)
  UPoly r;
  UPoly base = u() + UPoly(s);
  for (int k = deg(); k >= 0; --k) {
    r = r * base;
    r = r + UPoly(c_[k]);
  }
  return r;
}

UPoly UPoly::derivative() const {
  UPoly r;
  for (int k = 1; k <= deg(); ++k)
    r.set_coeff(k - 1, c_[k] * Scalar(Q(k)));
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(leading().inverse());
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.is_zero()) throw std::domain_error("UPoly division by zero");
  q = UPoly();
  r = a;
  Scalar inv_lead = b.leading().inverse();
  while (!r.is_zero() && r.deg() >= b.deg()) {
    int k = r.deg() - b.deg();
    Scalar c = r.leading() * inv_lead;
    UPoly t;
    t.set_coeff(k, c);
    q = q + t;
    r = r - b * t;
  }
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[k].to_string() << ")";
    if (k == 1) os << "*u";
    if (k > 1) os << "*u^" << k;
  }
  return os.str();
}

RationalU::RationalU(UPoly num, UPoly den, bool reduce_now)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalU with zero denominator");
  if (reduce_now) reduce();
}

void RationalU::reduce() {
  UPoly g = UPoly::gcd(num_, den_);
  if (g.deg() > 0) {
    UPoly q, r;
    UPoly::divmod(num_, g, q, r);
    num_ = q;
    UPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  // denominator monic in u
  Scalar lc = den_.leading();
  if (!(lc == Scalar(Q(1)))) {
    Scalar inv = lc.inverse();
    num_ = num_.mul_scalar(inv);
    den_ = den_.mul_scalar(inv);
  }
}

RationalU RationalU::operator*(const RationalU& o) const {
  return RationalU(num_ * o.num_, den_ * o.den_);
}

RationalU RationalU::operator/(const RationalU& o) const {
  if (o.num_.is_zero()) throw std::domain_error("RationalU division by zero");
  return RationalU(num_ * o.den_, den_ * o.num_);
}

RationalU RationalU::operator+(const RationalU& o) const {
  return RationalU(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalU RationalU::operator-(const RationalU& o) const {
  return RationalU(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalU RationalU::shift(const Scalar& s) const {
  return RationalU(num_.shift(s), den_.shift(s), false);
}

RationalU RationalU::derivative() const {
  return RationalU(num_.derivative() * den_ - num_ * den_.derivative(),
                   den_ * den_, false);
}

bool RationalU::operator==(const RationalU& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

std::string RationalU::to_string() const {
  return "[" + num_.to_string() + "] / [" + den_.to_string() + "]";
}

FactoredRatU FactoredRatU::operator*(const FactoredRatU& o) const {
  FactoredRatU r(pref_ * o.pref_);
  r.zeros_ = zeros_;
  r.zeros_.insert(r.zeros_.end(), o.zeros_.begin(), o.zeros_.end());
  r.poles_ = poles_;
  r.poles_.insert(r.poles_.end(), o.poles_.begin(), o.poles_.end());
  return r;
}

FactoredRatU FactoredRatU::inverse() const {
  FactoredRatU r(pref_.inverse());
  r.zeros_ = poles_;
  r.poles_ = zeros_;
  return r;
}

FactoredRatU FactoredRatU::shift(const Scalar& s) const {
  // (u + s) - root = u - (root - s)
  FactoredRatU r(pref_);
  for (const auto& z : zeros_) r.zeros_.push_back(z - s);
  for (const auto& p : poles_) r.poles_.push_back(p - s);
  return r;
}

FactoredRatU FactoredRatU::pow(int e) const {
  FactoredRatU base = e >= 0 ? *this : inverse();
  int k = e >= 0 ? e : -e;
  FactoredRatU r;
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

void FactoredRatU::canonicalize() {
  std::sort(zeros_.begin(), zeros_.end());
  std::sort(poles_.begin(), poles_.end());
  std::vector<Scalar> z2, p2;
  size_t i = 0, j = 0;
  while (i < zeros_.size() && j < poles_.size()) {
    if (zeros_[i] == poles_[j]) {
      ++i, ++j;
    } else if (zeros_[i] < poles_[j]) {
      z2.push_back(zeros_[i++]);
    } else {
      p2.push_back(poles_[j++]);
    }
  }
  z2.insert(z2.end(), zeros_.begin() + i, zeros_.end());
  p2.insert(p2.end(), poles_.begin() + j, poles_.end());
  zeros_ = std::move(z2);
  poles_ = std::move(p2);
}

bool FactoredRatU::operator==(const FactoredRatU& o) const {
  FactoredRatU a = *this, b = o;
  a.canonicalize();
  b.canonicalize();
  return a.pref_ == b.pref_ && a.zeros_ == b.zeros_ && a.poles_ == b.poles_;
}

RationalU FactoredRatU::expand() const {
  FactoredRatU c = *this;
  c.canonicalize();
  UPoly num(Scalar(c.pref_));
  for (const auto& z : c.zeros_) num = num * UPoly::linear(z);
  UPoly den{Scalar(Q(1))};
  for (const auto& p : c.poles_) den = den * UPoly::linear(p);
  return RationalU(std::move(num), std::move(den), false);
}

}  // namespace laumon
