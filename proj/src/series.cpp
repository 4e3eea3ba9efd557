#include "laumon/series.hpp"

#include <sstream>
#include <stdexcept>

namespace laumon {

SeriesU SeriesU::constant(const Scalar& c, int order) {
  SeriesU s(order);
  s.set(0, c);
  return s;
}

SeriesU SeriesU::from_upoly(const UPoly& p, int order) {
  SeriesU s(order);
  for (int k = 0; k <= p.deg(); ++k) s.set(-k, p.coeff(k));
  return s;
}

int SeriesU::low() const {
  return c_.empty() ? order_ + 1 : c_.begin()->first;
}

Scalar SeriesU::coeff(int r) const {
  if (r > order_)
    throw std::out_of_range("series coefficient beyond truncation order");
  auto it = c_.find(r);
  return it == c_.end() ? Scalar() : it->second;
}

void SeriesU::set(int r, Scalar v) {
  if (r > order_) return;
  if (v.is_zero())
    c_.erase(r);
  else
    c_[r] = std::move(v);
}

SeriesU SeriesU::operator+(const SeriesU& o) const {
  SeriesU r(std::min(order_, o.order_));
  for (const auto& [k, v] : c_)
    if (k <= r.order_) r.c_[k] = v;
  for (const auto& [k, v] : o.c_) {
    if (k > r.order_) continue;
    auto it = r.c_.find(k);
    if (it == r.c_.end())
      r.c_[k] = v;
    else {
      it->second += v;
      if (it->second.is_zero()) r.c_.erase(it);
    }
  }
  return r;
}

SeriesU SeriesU::operator-(const SeriesU& o) const {
  return *this + o.mul_scalar(Scalar(Q(-1)));
}

SeriesU SeriesU::mul_scalar(const Scalar& s) const {
  SeriesU r(order_);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : c_) r.c_[k] = v * s;
  return r;
}

SeriesU SeriesU::operator*(const SeriesU& o) const {
  // error term of a is O(u^{-ordA-1}); multiplied by the lowest power of b
  // it pollutes indices from ordA + low(b) + 1 on, and symmetrically.
  int ord = std::min(order_ + o.low(), o.order_ + low());
  SeriesU r(ord);
  for (const auto& [i, a] : c_)
    for (const auto& [j, b] : o.c_) {
      if (i + j > ord) continue;
      auto it = r.c_.find(i + j);
      if (it == r.c_.end())
        r.c_[i + j] = a * b;
      else {
        it->second += a * b;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
  return r;
}

SeriesU SeriesU::inverse() const {
  if (c_.empty()) throw std::domain_error("inverse of zero series");
  int l = low();
  const Scalar lead = coeff(l);
  // f = lead * u^{-l} (1 + t), relative precision order_ - l
  int rel = order_ - l;
  SeriesU t(rel);
  for (const auto& [k, v] : c_) {
    if (k == l) continue;
    if (k - l <= rel) t.set(k - l, v / lead);
  }
  SeriesU geom = SeriesU::constant(Scalar(Q(1)), rel);
  SeriesU acc = SeriesU::constant(Scalar(Q(1)), rel);
  for (int k = 1; k <= rel && !t.is_zero_to_order(); ++k) {
    acc = acc * t;
    acc = acc.truncated(rel);
    if (acc.is_zero_to_order()) break;
    geom = (k % 2 == 1) ? geom - acc : geom + acc;
  }
  // f^{-1} = lead^{-1} u^{l} * geom
  SeriesU r(rel - l);
  Scalar inv_lead = lead.inverse();
  for (int k = std::max(geom.low(), 0); k <= geom.order(); ++k) {
    Scalar v = geom.coeff(k);
    if (!v.is_zero()) r.set(k - l, v * inv_lead);
  }
  return r;
}

SeriesU SeriesU::derivative_u() const {
  // d/du u^{-r} = -r u^{-r-1}
  SeriesU r(order_ + 1);
  for (const auto& [k, v] : c_)
    if (k != 0) r.set(k + 1, v * Scalar(Q(-k)));
  return r;
}

SeriesU SeriesU::truncated(int order) const {
  SeriesU r(std::min(order, order_));
  for (const auto& [k, v] : c_)
    if (k <= r.order_) r.c_[k] = v;
  return r;
}

bool SeriesU::is_zero_to_order() const { return c_.empty(); }

bool SeriesU::operator==(const SeriesU& o) const {
  int ord = std::min(order_, o.order_);
  for (const auto& [k, v] : c_)
    if (k <= ord && !(v == o.coeff(k))) return false;
  for (const auto& [k, v] : o.c_)
    if (k <= ord && c_.find(k) == c_.end() && !v.is_zero()) return false;
  return true;
}

std::string SeriesU::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << v.to_string() << ")";
    if (k > 0) os << "*u^-" << k;
    if (k < 0) os << "*u^" << -k;
  }
  if (first) os << "0";
  os << " + O(u^-" << order_ + 1 << ")";
  return os.str();
}

SeriesU expand_in_u(const RationalU& f, int order) {
  int slack = order + f.den().deg() + std::max(f.num().deg(), 0) + 2;
  SeriesU num = SeriesU::from_upoly(f.num(), slack);
  SeriesU den = SeriesU::from_upoly(f.den(), slack);
  return (num * den.inverse()).truncated(order);
}

SeriesU expand_in_u(const FactoredRatU& f, int order) {
  return expand_in_u(f.expand(), order);
}

SeriesU log_derivative_series(const FactoredRatU& f, int order) {
  // 1/(u-a) = sum_{r>=0} a^r u^{-r-1}
  SeriesU r(order);
  std::vector<Scalar> zpow(f.zeros().size(), Scalar(Q(1)));
  std::vector<Scalar> ppow(f.poles().size(), Scalar(Q(1)));
  for (int k = 0; k + 1 <= order; ++k) {
    Scalar c;
    for (size_t i = 0; i < zpow.size(); ++i) c += zpow[i];
    for (size_t i = 0; i < ppow.size(); ++i) c -= ppow[i];
    r.set(k + 1, c);
    for (size_t i = 0; i < zpow.size(); ++i) zpow[i] *= f.zeros()[i];
    for (size_t i = 0; i < ppow.size(); ++i) ppow[i] *= f.poles()[i];
  }
  return r;
}

}  // namespace laumon
