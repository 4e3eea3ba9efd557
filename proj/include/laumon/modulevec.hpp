#pragma once

#include <map>

#include "laumon/scalar.hpp"

namespace laumon {

// Finite formal linear combination of basis patterns with Scalar
// coefficients.  Zero coefficients are never stored.
template <class P>
class ModuleVec {
 public:
  ModuleVec() = default;
  static ModuleVec basis(const P& p) {
    ModuleVec v;
    v.terms_[p] = Scalar(Q(1));
    return v;
  }

  void add_term(const P& p, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_[p] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const std::map<P, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const P& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Scalar() : it->second;
  }

  ModuleVec operator+(const ModuleVec& o) const {
    ModuleVec r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
  }
  ModuleVec operator-(const ModuleVec& o) const {
    ModuleVec r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, -c);
    return r;
  }
  ModuleVec mul_scalar(const Scalar& s) const {
    ModuleVec r;
    if (s.is_zero()) return r;
    for (const auto& [p, c] : terms_) r.terms_[p] = c * s;
    return r;
  }
  bool operator==(const ModuleVec& o) const { return (*this - o).is_zero(); }

  std::string to_string() const {
    std::string s;
    for (const auto& [p, c] : terms_) {
      if (!s.empty()) s += "  +  ";
      s += "(" + c.to_string() + ") " + p.to_string();
    }
    return s.empty() ? "0" : s;
  }

 private:
  std::map<P, Scalar> terms_;
};

}  // namespace laumon
