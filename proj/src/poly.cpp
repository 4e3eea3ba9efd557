#include "laumon/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace laumon {

const char* const kVarNames[kNumSlots] = {"x1", "x2", "x3", "x4",
                                          "x5", "x6", "h",  "hp"};

Mono mono_mul(Mono a, Mono b) {
  Mono r = 0;
  for (int v = 0; v < kNumSlots; ++v) {
    int e = mono_exp(a, v) + mono_exp(b, v);
    if (e > 0xff) throw std::overflow_error("monomial exponent overflow");
    r |= Mono(std::uint64_t(e) << (8 * v));
  }
  return r;
}

bool mono_divides(Mono a, Mono b) {
  for (int v = 0; v < kNumSlots; ++v)
    if (mono_exp(a, v) > mono_exp(b, v)) return false;
  return true;
}

Mono mono_gcd(Mono a, Mono b) {
  Mono r = 0;
  for (int v = 0; v < kNumSlots; ++v)
    r |= mono_of_var(v, std::min(mono_exp(a, v), mono_exp(b, v)));
  return r;
}

Poly::Poly(const Q& c) {
  if (!laumon::is_zero(c)) terms_.push_back({0, c});
}

Poly Poly::var(int v, int e) { return term(mono_of_var(v, e), Q(1)); }

Poly Poly::term(Mono m, const Q& c) {
  Poly p;
  if (!laumon::is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == 0 && terms_[0].coeff == 1;
}

int Poly::total_deg() const {
  return terms_.empty() ? -1 : mono_total_deg(terms_.front().mono);
}

int Poly::deg_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, mono_exp(t.mono, var));
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() && b != o.terms_.end()) {
    if (a->mono == b->mono) {
      Q c = a->coeff + b->coeff;
      if (!laumon::is_zero(c)) r.terms_.push_back({a->mono, c});
      ++a, ++b;
    } else if (mono_less(b->mono, a->mono)) {
      r.terms_.push_back(*a++);
    } else {
      r.terms_.push_back(*b++);
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, o.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(Mono m, const Q& c) const {
  Poly r;
  if (laumon::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coeff * c});
  return r;
}

Poly Poly::mul_q(const Q& c) const { return mul_term(0, c); }

Poly operator*(const Q& c, const Poly& p) { return p.mul_q(c); }

namespace {

// sort key: total degree in the top bits would overflow the packed value, so
// keep (deg, mono) pairs explicitly
struct KeyedTerm {
  int deg;
  Mono mono;
  Q coeff;
};

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::vector<KeyedTerm> ts;
  ts.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Mono m = mono_mul(a.mono, b.mono);
      ts.push_back({mono_total_deg(m), m, a.coeff * b.coeff});
    }
  std::sort(ts.begin(), ts.end(), [](const KeyedTerm& a, const KeyedTerm& b) {
    return a.deg != b.deg ? a.deg > b.deg : a.mono > b.mono;
  });
  Poly r;
  r.terms_.reserve(ts.size());
  for (auto& t : ts) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
      if (laumon::is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
    } else {
      r.terms_.push_back({t.mono, std::move(t.coeff)});
    }
  }
  return r;
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
    return mono_less(b.mono, a.mono);
  });
  Poly r;
  for (auto& t : ts) {
    if (laumon::is_zero(t.coeff)) continue;
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
      if (laumon::is_zero(r.terms_.back().coeff)) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

int Poly::cmp(const Poly& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (terms_[i].mono != o.terms_[i].mono)
      return mono_less(terms_[i].mono, o.terms_[i].mono) ? -1 : 1;
    int c = ::cmp(terms_[i].coeff, o.terms_[i].coeff);
    if (c != 0) return c;
  }
  if (terms_.size() != o.terms_.size())
    return terms_.size() < o.terms_.size() ? -1 : 1;
  return 0;
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  std::vector<Term> qt;
  const Term& dl = d.leading();
  while (!rem.is_zero()) {
    const Term& rl = rem.leading();
    if (!mono_divides(dl.mono, rl.mono)) return std::nullopt;
    Term t{mono_div(rl.mono, dl.mono), rl.coeff / dl.coeff};
    qt.push_back(t);
    rem = rem - d.mul_term(t.mono, t.coeff);
  }
  return from_terms(std::move(qt));
}

Mono Poly::mono_content() const {
  if (terms_.empty()) return 0;
  Mono g = terms_[0].mono;
  for (const auto& t : terms_) {
    g = mono_gcd(g, t.mono);
    if (g == 0) break;
  }
  return g;
}

Q Poly::rational_content() const {
  Z num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Q c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Poly Poly::coeff_in_var(int var, int k) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (mono_exp(t.mono, var) == k)
      ts.push_back({t.mono - mono_of_var(var, k), t.coeff});
  return from_terms(std::move(ts));
}

Poly pseudo_rem(const Poly& f, const Poly& g, int var) {
  int dg = g.deg_in(var);
  if (g.is_zero()) throw std::domain_error("pseudo_rem by zero");
  Poly lc_g = g.coeff_in_var(var, dg);
  Poly r = f;
  int dr = r.deg_in(var);
  while (!r.is_zero() && (dr = r.deg_in(var)) >= dg) {
    Poly lc_r = r.coeff_in_var(var, dr);
    r = r * lc_g - g * lc_r.mul_term(mono_of_var(var, dr - dg), Q(1));
    if (!r.is_zero() && r.deg_in(var) >= dr && dr >= dg) {
      // degree must strictly drop; guards against a logic error
      throw std::logic_error("pseudo_rem failed to reduce degree");
    }
  }
  return r;
}

namespace {

// primitive part w.r.t. var: divides out the gcd of the var-coefficients
Poly primitive_part(const Poly& f, int var) {
  int d = f.deg_in(var);
  Poly cont;
  for (int k = 0; k <= d; ++k) {
    Poly c = f.coeff_in_var(var, k);
    if (!c.is_zero()) cont = Poly::gcd(cont, c);
    if (cont.is_one()) return f;
  }
  auto q = f.try_divide(cont);
  if (!q) throw std::logic_error("content does not divide polynomial");
  return *q;
}

Poly content_in_var(const Poly& f, int var) {
  int d = f.deg_in(var);
  Poly cont;
  for (int k = 0; k <= d; ++k) {
    Poly c = f.coeff_in_var(var, k);
    if (!c.is_zero()) cont = Poly::gcd(cont, c);
    if (cont.is_one()) break;
  }
  return cont;
}

Poly normalize_leading(const Poly& p) {
  if (p.is_zero()) return p;
  return p.mul_q(Q(1) / p.leading().coeff);
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  Mono mc = mono_gcd(a.mono_content(), b.mono_content());
  Poly f = *a.try_divide(Poly::term(a.mono_content(), Q(1)));
  Poly g = *b.try_divide(Poly::term(b.mono_content(), Q(1)));
  Poly mono_part = Poly::term(mc, Q(1));
  if (f.is_constant() || g.is_constant()) return mono_part;

  // cheap wins: one divides the other
  if (f.try_divide(g)) return normalize_leading(mono_part * g);
  if (g.try_divide(f)) return normalize_leading(mono_part * f);

  // main variable: common variable of least maximum degree
  int var = -1, best = 1 << 30;
  for (int v = 0; v < kNumSlots; ++v) {
    int df = f.deg_in(v), dg = g.deg_in(v);
    if (df > 0 && dg > 0 && std::max(df, dg) < best) {
      best = std::max(df, dg);
      var = v;
    }
  }
  if (var < 0) return mono_part;  // no common variable

  Poly cf = content_in_var(f, var), cg = content_in_var(g, var);
  Poly fp = *f.try_divide(cf), gp = *g.try_divide(cg);
  if (fp.deg_in(var) < gp.deg_in(var)) std::swap(fp, gp);
  // primitive PRS
  while (true) {
    Poly r = pseudo_rem(fp, gp, var);
    if (r.is_zero()) break;
    if (r.deg_in(var) == 0) {
      gp = Poly(Q(1));
      break;
    }
    r = primitive_part(r, var);
    fp = std::move(gp);
    gp = std::move(r);
  }
  Poly result = mono_part * Poly::gcd(cf, cg);
  if (!gp.is_constant()) result = result * primitive_part(gp, var);
  return normalize_leading(result);
}

Q Poly::eval(const std::array<Q, kNumSlots>& vals) const {
  Q acc(0);
  for (const auto& t : terms_) {
    Q m = t.coeff;
    for (int v = 0; v < kNumSlots; ++v) {
      int e = mono_exp(t.mono, v);
      for (int k = 0; k < e; ++k) m *= vals[v];
    }
    acc += m;
  }
  return acc;
}

Poly Poly::subst_var(int var, const Q& c, int target) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    int e = mono_exp(t.mono, var);
    Q coeff = t.coeff;
    Mono m = t.mono - mono_of_var(var, e);
    for (int k = 0; k < e; ++k) coeff *= c;
    if (laumon::is_zero(coeff)) continue;
    if (target >= 0 && e > 0) m = mono_mul(m, mono_of_var(target, e));
    ts.push_back({m, coeff});
  }
  return from_terms(std::move(ts));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  // ascending graded-lex
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Q& c = it->coeff;
    bool neg = sgn(c) < 0;
    Q mag = abs(c);
    if (it == terms_.rbegin()) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < kNumSlots; ++v) {
      int e = mono_exp(it->mono, v);
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += kVarNames[v];
      if (e > 1) vars += "^" + std::to_string(e);
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
