#include "laumon/relations.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace laumon {

namespace {

Q binom(int r, int m) {
  Q b(1);
  for (int k = 0; k < m; ++k) b = b * Q(r - k) / Q(k + 1);
  return b;
}

// operator kinds shared by both modules
enum Kind { kH, kRaise, kLower, kEdiag, kChevE, kChevF, kChevH };

// ---------------------------------------------------------------------------
// module traits

struct FiniteTraits {
  using Pattern = FinitePattern;
  using Vec = finite::VectorV;
  int n;
  int series_order;

  int kmax() const { return n - 1; }
  Scalar eps() const { return Scalar::h(); }
  int cartan(int k, int l) const {
    if (k == l) return 2;
    return std::abs(k - l) == 1 ? -1 : 0;
  }
  bool wrap_pair(int, int) const { return false; }

  std::map<std::pair<Pattern, int>, SeriesU> hcache;

  Scalar h_eigen(const Pattern& p, int k, int r) {
    auto key = std::make_pair(p, k);
    auto it = hcache.find(key);
    if (it == hcache.end())
      it = hcache.emplace(key, expand_in_u(finite::eigen_h_series(p, k),
                                           series_order)).first;
    return it->second.coeff(r + 1) * Scalar::h().pow(r);
  }

  Vec raw(int kind, int k, int r, const Pattern& p) {
    switch (kind) {
      case kH:
        return Vec::basis(p).mul_scalar(h_eigen(p, k, r));
      case kRaise:
        return finite::apply_xminus(p, k, r);
      case kLower:
        return finite::apply_xplus(p, k, r);
      case kEdiag:
        return Vec::basis(p).mul_scalar(finite::eigen_E(p, k));
      case kChevE:
        return finite::apply_e(p, k);
      case kChevF:
        return finite::apply_f(p, k);
      case kChevH:
        return Vec::basis(p).mul_scalar(finite::eigen_h_chevalley(p, k));
    }
    throw std::logic_error("bad op kind");
  }

  std::vector<Pattern> basis(int D) const { return enumerate_finite_upto(n, D); }
};

struct AffineTraits {
  using Pattern = AffinePattern;
  using Vec = affine::VectorM;
  int n;
  int series_order;

  int kmax() const { return n; }
  Scalar eps() const { return Scalar(Q(1)); }
  int cartan(int k, int l) const {
    if (k == l) return 2;
    int d = ((k - l) % n + n) % n;
    int a = 0;
    if (d == 1) a -= 1;
    if (d == n - 1) a -= 1;
    return a;
  }
  bool wrap_pair(int k, int l) const {
    return (k == n && l == 1) || (k == 1 && l == n);
  }

  std::map<std::pair<Pattern, int>, SeriesU> hcache;

  Scalar h_eigen(const Pattern& p, int k, int r) {
    auto key = std::make_pair(p, k);
    auto it = hcache.find(key);
    if (it == hcache.end())
      it = hcache.emplace(key, expand_in_u(affine::eigen_h_series(p, k),
                                           series_order)).first;
    return it->second.coeff(r + 1);
  }

  Vec raw(int kind, int k, int r, const Pattern& p) {
    switch (kind) {
      case kH:
        return Vec::basis(p).mul_scalar(h_eigen(p, k, r));
      case kRaise:
        return affine::apply_xminus(p, k, r);
      case kLower:
        return affine::apply_xplus(p, k, r);
      case kChevE:
        return affine::apply_e(p, k);
      case kChevF:
        return affine::apply_f(p, k);
      case kChevH:
        return Vec::basis(p).mul_scalar(affine::eigen_h_diag(p, k));
    }
    throw std::logic_error("bad op kind");
  }

  std::vector<Pattern> basis(int D) const { return enumerate_affine_upto(n, D); }
};

// ---------------------------------------------------------------------------
// memoizing applier; one per worker thread

template <class T>
struct Applier {
  T traits;
  // shift constant for the primed series: hp/h + n/2
  Scalar shift_c;
  std::map<std::tuple<int, int, int, typename T::Pattern>, typename T::Vec>
      memo;

  explicit Applier(T t)
      : traits(std::move(t)),
        shift_c(Scalar::hp() / Scalar::h() + Scalar(Q(traits.n, 2))) {}

  using Vec = typename T::Vec;
  using Pattern = typename T::Pattern;

  const Vec& basis_apply(int kind, int k, int r, const Pattern& p) {
    auto key = std::make_tuple(kind, k, r, p);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, traits.raw(kind, k, r, p)).first;
    return it->second;
  }

  Vec apply(int kind, int k, int r, const Vec& v) {
    Vec out;
    for (const auto& [p, c] : v.terms())
      for (const auto& [q, w] : basis_apply(kind, k, r, p).terms())
        out.add_term(q, w * c);
    return out;
  }

  // 'O_{k,r} = sum_m binom(r,m) c^{r-m} O_{k,m}
  Vec apply_primed(int kind, int k, int r, const Vec& v) {
    Vec out;
    for (int m = 0; m <= r; ++m) {
      Scalar coeff = Scalar(binom(r, m)) * shift_c.pow(r - m);
      Vec part = apply(kind, k, m, v);
      for (const auto& [q, w] : part.terms()) out.add_term(q, w * coeff);
    }
    return out;
  }
};

// operator handle: kind, index, current index, primed?
struct OpRef {
  int kind, k, r;
  bool primed = false;
};

template <class T>
typename T::Vec act(Applier<T>& A, const OpRef& o, const typename T::Vec& v) {
  return o.primed ? A.apply_primed(o.kind, o.k, o.r, v)
                  : A.apply(o.kind, o.k, o.r, v);
}

template <class T>
typename T::Vec commutator(Applier<T>& A, const OpRef& a, const OpRef& b,
                           const typename T::Vec& v) {
  return act(A, a, act(A, b, v)) - act(A, b, act(A, a, v));
}

template <class T>
struct Instance {
  std::string relation, indices;
  std::function<typename T::Vec(Applier<T>&, const typename T::Vec&)> eval;
};

// ---------------------------------------------------------------------------
// instance builders

// wrap_mode: 0 = no wrap handling (finite case), 1 = shifted wrap relations,
// 2 = only the unshifted wrap-pair (12),(14) instances (the remaining
// instances coincide verbatim with the generic suite, so their
// specializations are already covered).
template <class T>
std::vector<Instance<T>> yangian_instances(const T& traits, int rmax,
                                           int wrap_mode) {
  using Vec = typename T::Vec;
  std::vector<Instance<T>> out;
  int K = traits.kmax();
  bool shifted_wrap = wrap_mode == 1;
  auto idx = [](std::initializer_list<std::pair<const char*, int>> xs) {
    std::ostringstream os;
    bool first = true;
    for (auto& [nm, v] : xs) {
      if (!first) os << ",";
      first = false;
      os << nm << "=" << v;
    }
    return os.str();
  };

  for (int k = 1; k <= K; ++k)
    for (int l = 1; l <= K; ++l) {
      int a = traits.cartan(k, l);
      bool wrap = traits.wrap_pair(k, l) && shifted_wrap;
      if (wrap_mode == 2 && !traits.wrap_pair(k, l)) continue;
      bool only_12_14 = wrap_mode == 2;
      // (11): [h_{k,r}, h_{l,s}] = 0
      if (!only_12_14)
      for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s)
          out.push_back({"11hh", idx({{"k", k}, {"l", l}, {"r", r}, {"s", s}}),
                         [=](Applier<T>& A, const Vec& v) {
                           return commutator(A, {kH, k, r}, {kH, l, s}, v);
                         }});
      // (11): [h_{k,0}, x_{l,s}^{+-}] = +- a_{kl} x_{l,s}^{+-}
      if (!only_12_14)
      for (int s = 0; s <= rmax; ++s)
        for (int fam = 0; fam < 2; ++fam) {
          int kind = fam == 0 ? kRaise : kLower;
          int sign = fam == 0 ? +1 : -1;
          out.push_back(
              {fam == 0 ? "11h+" : "11h-",
               idx({{"k", k}, {"l", l}, {"s", s}}),
               [=](Applier<T>& A, const Vec& v) {
                 Vec lhs = commutator(A, {kH, k, 0}, {kind, l, s}, v);
                 Vec rhs = act(A, {kind, l, s}, v)
                               .mul_scalar(Scalar(Q(sign * a)));
                 return lhs - rhs;
               }});
        }
      // (12)/(122)/(123): 2[h_{k,r+1}, x_{l,s}] - 2[h_{k,r}, x_{l,s+1}]
      //                   = +- eps a_{kl} (h_{k,r} x_{l,s} + x_{l,s} h_{k,r})
      for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s)
          for (int fam = 0; fam < 2; ++fam) {
            int kind = fam == 0 ? kRaise : kLower;
            int sign = fam == 0 ? +1 : -1;
            bool ph = wrap && k == traits.kmax();
            bool px = wrap && l == traits.kmax();
            std::string name = wrap ? (k == traits.kmax() ? "122" : "123")
                                    : "12";
            out.push_back(
                {name + (fam == 0 ? "+" : "-"),
                 idx({{"k", k}, {"l", l}, {"r", r}, {"s", s}}),
                 [=](Applier<T>& A, const Vec& v) {
                   OpRef h1{kH, k, r + 1, ph}, h0{kH, k, r, ph};
                   OpRef x0{kind, l, s, px}, x1{kind, l, s + 1, px};
                   Vec lhs = commutator(A, h1, x0, v).mul_scalar(Scalar(Q(2))) -
                             commutator(A, h0, x1, v).mul_scalar(Scalar(Q(2)));
                   Vec sym = act(A, h0, act(A, x0, v)) +
                             act(A, x0, act(A, h0, v));
                   Vec rhs = sym.mul_scalar(A.traits.eps() *
                                            Scalar(Q(sign * a)));
                   return lhs - rhs;
                 }});
          }
      // (13): [x^+_{k,r}, x^-_{l,s}] = delta_{kl} h_{k,r+s}
      if (!only_12_14)
      for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s)
          out.push_back(
              {"13", idx({{"k", k}, {"l", l}, {"r", r}, {"s", s}}),
               [=](Applier<T>& A, const Vec& v) {
                 Vec lhs = commutator(A, {kRaise, k, r}, {kLower, l, s}, v);
                 if (k == l) lhs = lhs - act(A, {kH, k, r + s}, v);
                 return lhs;
               }});
      // (14)/(144): 2[x_{k,r+1}, x_{l,s}] - 2[x_{k,r}, x_{l,s+1}]
      //             = +- eps a_{kl} (x_{k,r} x_{l,s} + x_{l,s} x_{k,r})
      for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= rmax; ++s)
          for (int fam = 0; fam < 2; ++fam) {
            int kind = fam == 0 ? kRaise : kLower;
            int sign = fam == 0 ? +1 : -1;
            bool pk = wrap && k == traits.kmax();
            bool pl = wrap && l == traits.kmax();
            std::string name = wrap ? "144" : "14";
            out.push_back(
                {name + (fam == 0 ? "+" : "-"),
                 idx({{"k", k}, {"l", l}, {"r", r}, {"s", s}}),
                 [=](Applier<T>& A, const Vec& v) {
                   OpRef a1{kind, k, r + 1, pk}, a0{kind, k, r, pk};
                   OpRef b0{kind, l, s, pl}, b1{kind, l, s + 1, pl};
                   Vec lhs = commutator(A, a1, b0, v).mul_scalar(Scalar(Q(2))) -
                             commutator(A, a0, b1, v).mul_scalar(Scalar(Q(2)));
                   Vec sym = act(A, a0, act(A, b0, v)) +
                             act(A, b0, act(A, a0, v));
                   Vec rhs = sym.mul_scalar(A.traits.eps() *
                                            Scalar(Q(sign * a)));
                   return lhs - rhs;
                 }});
          }
      // (15): Serre, k = l +- 1 (adjacency in the Cartan matrix)
      if (k != l && a == -1 && !only_12_14)
        for (int r = 0; r <= rmax; ++r)
          for (int p = r; p <= rmax; ++p)
            for (int s = 0; s <= rmax; ++s)
              for (int fam = 0; fam < 2; ++fam) {
                int kind = fam == 0 ? kRaise : kLower;
                out.push_back(
                    {std::string("15") + (fam == 0 ? "+" : "-"),
                     idx({{"k", k}, {"l", l}, {"r", r}, {"p", p}, {"s", s}}),
                     [=](Applier<T>& A, const Vec& v) {
                       OpRef xr{kind, k, r}, xp{kind, k, p}, xs{kind, l, s};
                       // [x_r, [x_p, x_s]] + [x_p, [x_r, x_s]]
                       auto nested = [&](const OpRef& o1, const OpRef& o2) {
                         Vec in = commutator(A, o2, xs, v);
                         Vec a_ = act(A, o1, in);
                         Vec in2 = act(A, o1, v);
                         Vec b_ = commutator(A, o2, xs, in2);
                         return a_ - b_;
                       };
                       return nested(xr, xp) + nested(xp, xr);
                     }});
              }
    }
  return out;
}

std::vector<Instance<FiniteTraits>> gl_instances(int n) {
  using Vec = finite::VectorV;
  std::vector<Instance<FiniteTraits>> out;
  auto idx = [](int i, int j) {
    return "i=" + std::to_string(i) + ",j=" + std::to_string(j);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      // [E_ii, e_j] = (delta_{i,j+1} - delta_{ij}) e_j
      int cf = (i == j + 1 ? 1 : 0) - (i == j ? 1 : 0);
      out.push_back({"gl:[E,e]", idx(i, j),
                     [=](Applier<FiniteTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kEdiag, i, 0}, {kChevE, j, 0}, v);
                       return lhs - act(A, {kChevE, j, 0}, v)
                                        .mul_scalar(Scalar(Q(cf)));
                     }});
      out.push_back({"gl:[E,f]", idx(i, j),
                     [=](Applier<FiniteTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kEdiag, i, 0}, {kChevF, j, 0}, v);
                       return lhs + act(A, {kChevF, j, 0}, v)
                                        .mul_scalar(Scalar(Q(cf)));
                     }});
    }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      out.push_back({"gl:[e,f]", idx(i, j),
                     [=](Applier<FiniteTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kChevE, i, 0}, {kChevF, j, 0}, v);
                       if (i == j)
                         lhs = lhs - (act(A, {kEdiag, i + 1, 0}, v) -
                                      act(A, {kEdiag, i, 0}, v));
                       return lhs;
                     }});
      if (std::abs(i - j) >= 2) {
        out.push_back({"gl:[e,e]", idx(i, j),
                       [=](Applier<FiniteTraits>& A, const Vec& v) {
                         return commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, v);
                       }});
        out.push_back({"gl:[f,f]", idx(i, j),
                       [=](Applier<FiniteTraits>& A, const Vec& v) {
                         return commutator(A, {kChevF, i, 0}, {kChevF, j, 0}, v);
                       }});
      }
      if (std::abs(i - j) == 1) {
        out.push_back({"gl:serre-e", idx(i, j),
                       [=](Applier<FiniteTraits>& A, const Vec& v) {
                         Vec in = commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, v);
                         Vec lhs = act(A, {kChevE, i, 0}, in);
                         Vec in2 = act(A, {kChevE, i, 0}, v);
                         Vec rhs = commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, in2);
                         return lhs - rhs;
                       }});
        out.push_back({"gl:serre-f", idx(i, j),
                       [=](Applier<FiniteTraits>& A, const Vec& v) {
                         Vec in = commutator(A, {kChevF, i, 0}, {kChevF, j, 0}, v);
                         Vec lhs = act(A, {kChevF, i, 0}, in);
                         Vec in2 = act(A, {kChevF, i, 0}, v);
                         Vec rhs = commutator(A, {kChevF, i, 0}, {kChevF, j, 0}, in2);
                         return lhs - rhs;
                       }});
      }
    }
  return out;
}

std::vector<Instance<AffineTraits>> kac_moody_instances(int n) {
  using Vec = affine::VectorM;
  std::vector<Instance<AffineTraits>> out;
  AffineTraits tr;
  tr.n = n;
  auto idx = [](int i, int j) {
    return "i=" + std::to_string(i) + ",j=" + std::to_string(j);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int a = tr.cartan(i, j);
      out.push_back({"km:[h,e]", idx(i, j),
                     [=](Applier<AffineTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kChevH, i, 0}, {kChevE, j, 0}, v);
                       return lhs - act(A, {kChevE, j, 0}, v)
                                        .mul_scalar(Scalar(Q(a)));
                     }});
      out.push_back({"km:[h,f]", idx(i, j),
                     [=](Applier<AffineTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kChevH, i, 0}, {kChevF, j, 0}, v);
                       return lhs + act(A, {kChevF, j, 0}, v)
                                        .mul_scalar(Scalar(Q(a)));
                     }});
      out.push_back({"km:[e,f]", idx(i, j),
                     [=](Applier<AffineTraits>& A, const Vec& v) {
                       Vec lhs = commutator(A, {kChevE, i, 0}, {kChevF, j, 0}, v);
                       if (i == j) lhs = lhs - act(A, {kChevH, i, 0}, v);
                       return lhs;
                     }});
      if (i != j && a == 0) {
        out.push_back({"km:[e,e]", idx(i, j),
                       [=](Applier<AffineTraits>& A, const Vec& v) {
                         return commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, v);
                       }});
      }
      if (i != j && a == -1) {
        out.push_back({"km:serre-e", idx(i, j),
                       [=](Applier<AffineTraits>& A, const Vec& v) {
                         Vec in = commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, v);
                         Vec lhs = act(A, {kChevE, i, 0}, in);
                         Vec in2 = act(A, {kChevE, i, 0}, v);
                         Vec rhs = commutator(A, {kChevE, i, 0}, {kChevE, j, 0}, in2);
                         return lhs - rhs;
                       }});
        out.push_back({"km:serre-f", idx(i, j),
                       [=](Applier<AffineTraits>& A, const Vec& v) {
                         Vec in = commutator(A, {kChevF, i, 0}, {kChevF, j, 0}, v);
                         Vec lhs = act(A, {kChevF, i, 0}, in);
                         Vec in2 = act(A, {kChevF, i, 0}, v);
                         Vec rhs = commutator(A, {kChevF, i, 0}, {kChevF, j, 0}, in2);
                         return lhs - rhs;
                       }});
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// runner

template <class T>
RelationReport run_instances(T traits_proto, int D,
                             const std::vector<Instance<T>>& instances,
                             int threads, const std::optional<Q>& subst_hp) {
  using Vec = typename T::Vec;
  auto basis = traits_proto.basis(D);
  RelationReport report;
  report.results.resize(basis.size() * instances.size());

  auto work = [&](Applier<T>& A, size_t bi) {
    Vec v = Vec::basis(basis[bi]);
    for (size_t ii = 0; ii < instances.size(); ++ii) {
      Vec diff = instances[ii].eval(A, v);
      bool pass;
      std::string dstr;
      if (subst_hp) {
        bool ok = true;
        std::string bad;
        for (const auto& [p, c] : diff.terms()) {
          Scalar sc = c.subst_hp(*subst_hp);
          if (!sc.is_zero()) {
            ok = false;
            bad += "(" + sc.to_string() + ") " + p.to_string() + "; ";
          }
        }
        pass = ok;
        dstr = bad;
      } else {
        pass = diff.is_zero();
        if (!pass) dstr = diff.to_string();
      }
      RelationResult& rr = report.results[bi * instances.size() + ii];
      rr.relation = instances[ii].relation;
      rr.indices = instances[ii].indices;
      rr.basis = basis[bi].to_string();
      rr.pass = pass;
      rr.diff = dstr;
    }
  };

  if (threads <= 1) {
    Applier<T> A(traits_proto);
    for (size_t bi = 0; bi < basis.size(); ++bi) work(A, bi);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        Applier<T> A(traits_proto);
        for (size_t bi = next.fetch_add(1); bi < basis.size();
             bi = next.fetch_add(1))
          work(A, bi);
      });
    for (auto& th : pool) th.join();
  }
  return report;
}

}  // namespace

RelationReport verify_finite_relations(int n, int D, int rmax, int threads) {
  FiniteTraits tr;
  tr.n = n;
  tr.series_order = 2 * rmax + 2;
  auto instances = gl_instances(n);
  auto yang = yangian_instances(tr, rmax, 0);
  instances.insert(instances.end(), yang.begin(), yang.end());
  return run_instances(tr, D, instances, threads, std::nullopt);
}

RelationReport verify_affine_relations(int n, int D, int rmax, int threads) {
  AffineTraits tr;
  tr.n = n;
  tr.series_order = 2 * rmax + 2;
  auto instances = kac_moody_instances(n);
  auto yang = yangian_instances(tr, rmax, 1);
  instances.insert(instances.end(), yang.begin(), yang.end());
  return run_instances(tr, D, instances, threads, std::nullopt);
}

RelationReport verify_affine_relations_slhat(int n, int D, int rmax,
                                             int threads) {
  AffineTraits tr;
  tr.n = n;
  tr.series_order = 2 * rmax + 2;
  auto instances = yangian_instances(tr, rmax, 2);
  return run_instances(tr, D, instances, threads, Q(-n, 2));
}

RelationReport verify_shift_identity(int n, int D, int rmax) {
  RelationReport report;
  Scalar c = Scalar::hp() / Scalar::h() + Scalar(Q(n, 2));
  auto basis = enumerate_affine_upto(n, D);
  for (const auto& p : basis)
    for (int k = 1; k <= n; ++k)
      for (int r = 0; r <= rmax; ++r) {
        // x_{k-n,r} = sum_m binom(r,m) c^{r-m} x_{k,m} for both families
        for (int fam = 0; fam < 2; ++fam) {
          affine::VectorM lhs = fam == 0 ? affine::apply_xminus(p, k - n, r)
                                         : affine::apply_xplus(p, k - n, r);
          affine::VectorM rhs;
          for (int m = 0; m <= r; ++m) {
            Scalar w = Scalar(binom(r, m)) * c.pow(r - m);
            rhs = rhs + (fam == 0 ? affine::apply_xminus(p, k, m)
                                  : affine::apply_xplus(p, k, m))
                            .mul_scalar(w);
          }
          RelationResult rr;
          rr.relation = fam == 0 ? "shift:x-" : "shift:x+";
          rr.indices = "k=" + std::to_string(k) + ",r=" + std::to_string(r);
          rr.basis = p.to_string();
          rr.pass = (lhs - rhs).is_zero();
          report.results.push_back(std::move(rr));
        }
        if (r == 0) {
          // series identity h_{k-n}(u) = h_k(u - c)
          FactoredRatU a = affine::eigen_h_series(p, k - n);
          FactoredRatU b = affine::eigen_h_series(p, k).shift(-c);
          RelationResult rr;
          rr.relation = "shift:h";
          rr.indices = "k=" + std::to_string(k);
          rr.basis = p.to_string();
          rr.pass = a == b;
          report.results.push_back(std::move(rr));
        }
      }
  return report;
}

RelationReport verify_a01(int n, int D) {
  RelationReport report;
  Scalar H = Scalar::hp() / Scalar::h();
  auto basis = enumerate_affine_upto(n, D);
  for (const auto& p : basis) {
    auto a0 = [&](long i) { return affine::eigen_a_mi(p, 0, i); };
    auto note = [&](const std::string& rel, const std::string& ix, bool pass) {
      report.results.push_back({rel, ix, p.to_string(), pass, ""});
    };
    // (a_{0,i+n} a_{0n}^{-1} = a_{n,i+n} = a_{0i}(u + hp/h))
    for (int i = 1; i <= n; ++i) {
      FactoredRatU lhs = a0(i + n) * a0(n).inverse();
      FactoredRatU mid = affine::eigen_a_mi(p, n, i + n);
      note("ai+n:quotient", "i=" + std::to_string(i), lhs == mid);
      note("ai+n:shift", "i=" + std::to_string(i), mid == a0(i).shift(H));
    }
    // product formula for a_{0i}
    for (int i = 2; i <= n + 1; ++i) {
      FactoredRatU rhs;
      for (int j = 0; j <= i - 1; ++j)
        rhs = rhs * a0(1).shift(Scalar(Q(-j)));
      for (int j = 1; j <= i - 1; ++j)
        for (int l = 1; l <= i - j; ++l)
          rhs = rhs * affine::eigen_h_series(p, j).shift(
                          Scalar(Q(-l)) + Scalar(Q(-(j - 1), 2)));
      note("ai:product", "i=" + std::to_string(i), a0(i) == rhs);
    }
    // functional equation for a_{01}
    {
      FactoredRatU lhs = a0(1).shift(Scalar(Q(-n)));
      for (int j = 1; j <= n; ++j)
        lhs = lhs * affine::eigen_h_series(p, j).shift(Scalar(Q(-n)) +
                                                       Scalar(Q(j - 1, 2)));
      note("a01:functional", "", lhs == a0(1).shift(H));
    }
    // critical value hp = -n h: prod_j h_j(u - n + (j-1)/2) = 1
    {
      FactoredRatU prod;
      for (int j = 1; j <= n; ++j)
        prod = prod * affine::eigen_h_series(p, j).shift(Scalar(Q(-n)) +
                                                         Scalar(Q(j - 1, 2)));
      FactoredRatU spec(prod.pref().subst_hp(Q(-n)));
      bool ok = spec.pref() == Scalar(Q(1));
      FactoredRatU reduced;
      for (const auto& z : prod.zeros()) reduced.add_zero(z.subst_hp(Q(-n)));
      for (const auto& pl : prod.poles()) reduced.add_pole(pl.subst_hp(Q(-n)));
      reduced.canonicalize();
      ok = ok && reduced.zeros().empty() && reduced.poles().empty();
      note("a01:critical", "hp=-n*h", ok);
    }
  }
  return report;
}

RelationReport verify_irreducible(int n, int D) {
  RelationReport report;
  auto basis = enumerate_affine_upto(n, D);
  // (1) pairwise-distinct joint h-eigenvalues
  std::map<std::string, std::string> seen;
  for (const auto& p : basis) {
    std::string key;
    for (int i = 1; i <= n; ++i) {
      FactoredRatU h = affine::eigen_h_series(p, i);
      h.canonicalize();
      key += h.pref().to_string() + "|";
      for (const auto& z : h.zeros()) key += "z" + z.to_string() + ";";
      for (const auto& pl : h.poles()) key += "p" + pl.to_string() + ";";
      key += "#";
    }
    auto [it, fresh] = seen.emplace(key, p.to_string());
    report.results.push_back({"uglov:distinct-h", "", p.to_string(), fresh,
                              fresh ? "" : "collides with " + it->second});
  }
  // (2) some raising operator acts nontrivially; (3) some lowering operator
  // acts nontrivially away from the vacuum
  for (const auto& p : basis) {
    bool raise_nonzero = false, lower_nonzero = false;
    for (int i = 1; i <= n; ++i) {
      if (!affine::apply_xminus(p, i, 0).is_zero()) raise_nonzero = true;
      if (!affine::apply_xplus(p, i, 0).is_zero()) lower_nonzero = true;
    }
    report.results.push_back(
        {"uglov:raising", "", p.to_string(), raise_nonzero, ""});
    if (p.total() > 0)
      report.results.push_back(
          {"uglov:lowering", "", p.to_string(), lower_nonzero, ""});
  }
  return report;
}

}  // namespace laumon
