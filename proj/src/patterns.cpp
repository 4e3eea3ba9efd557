#include "laumon/patterns.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace laumon {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  if (!is_valid()) throw std::invalid_argument("not weakly decreasing");
}

int Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

bool Partition::is_valid() const {
  for (size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) return false;
    if (k > 0 && parts[k - 1] < parts[k]) return false;
  }
  return true;
}

FinitePattern FinitePattern::vacuum(int n) {
  FinitePattern p;
  p.n = n;
  for (int i = 1; i <= n - 1; ++i) p.rows.emplace_back(i, 0);
  return p;
}

int FinitePattern::d(int i, int j) const {
  if (i == n) return 0;
  if (i < 1 || i > n - 1 || j < 1 || j > i) throw std::out_of_range("d(i,j)");
  return rows[i - 1][j - 1];
}

bool FinitePattern::is_valid() const {
  if (int(rows.size()) != n - 1) return false;
  for (int i = 1; i <= n - 1; ++i) {
    if (int(rows[i - 1].size()) != i) return false;
    for (int j = 1; j <= i; ++j) {
      if (d(i, j) < 0) return false;
      if (i > j && d(i - 1, j) < d(i, j)) return false;
    }
  }
  return true;
}

std::vector<int> FinitePattern::degree() const {
  std::vector<int> deg(n - 1, 0);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= i; ++j) deg[i - 1] += d(i, j);
  return deg;
}

int FinitePattern::total() const {
  auto deg = degree();
  return std::accumulate(deg.begin(), deg.end(), 0);
}

std::optional<FinitePattern> FinitePattern::add_box(int i, int j) const {
  FinitePattern p = *this;
  p.rows[i - 1][j - 1]++;
  if (i > j && p.d(i - 1, j) < p.d(i, j)) return std::nullopt;
  return p;
}

std::optional<FinitePattern> FinitePattern::remove_box(int i, int j) const {
  FinitePattern p = *this;
  if (p.rows[i - 1][j - 1] == 0) return std::nullopt;
  p.rows[i - 1][j - 1]--;
  if (i < n - 1 && p.d(i, j) < p.d(i + 1, j)) return std::nullopt;
  return p;
}

std::string FinitePattern::to_string() const {
  std::ostringstream os;
  os << "{";
  for (int i = 1; i <= n - 1; ++i) {
    if (i > 1) os << "; ";
    for (int j = 1; j <= i; ++j) os << (j > 1 ? "," : "") << d(i, j);
  }
  os << "}";
  return os.str();
}

AffinePattern AffinePattern::vacuum(int n) {
  AffinePattern p;
  p.n = n;
  p.lambdas.resize(n);
  return p;
}

int AffinePattern::residue(long j, int n) {
  long m = ((j % n) + n) % n;
  return m == 0 ? n : int(m);
}

int AffinePattern::d(long i, long j) const {
  if (i < j) throw std::out_of_range("d(i,j) needs i >= j");
  return lambdas[residue(j, n) - 1].part(int(i - j));
}

int AffinePattern::max_len() const {
  int m = 0;
  for (const auto& l : lambdas) m = std::max(m, l.length());
  return m;
}

bool AffinePattern::is_valid() const {
  if (int(lambdas.size()) != n) return false;
  for (const auto& l : lambdas)
    if (!l.is_valid()) return false;
  return true;
}

std::vector<int> AffinePattern::degree() const {
  std::vector<int> deg(n, 0);
  for (int l = 1; l <= n; ++l)
    for (int m = 0; m < lambdas[l - 1].length(); ++m) {
      int k = residue(l + m, n);
      deg[k - 1] += lambdas[l - 1].part(m);
    }
  return deg;
}

int AffinePattern::total() const {
  int t = 0;
  for (const auto& l : lambdas) t += l.sum();
  return t;
}

Scalar AffinePattern::weight_p(long i, long j) const {
  Scalar w = -Scalar::x(residue(j, n));
  int dij = d(i, j);
  if (dij != 0) w += Scalar(Q(dij)) * Scalar::h();
  long fl = floor_div(-j, n);
  if (fl != 0) w += Scalar(Q(fl)) * Scalar::hp();
  return w;
}

Scalar AffinePattern::weight_p_hat(long i, long j) const {
  return weight_p(i, j) / Scalar::h();
}

std::optional<AffinePattern> AffinePattern::add_box(int l, int m) const {
  const Partition& lam = lambdas[l - 1];
  if (m > 0 && lam.part(m - 1) < lam.part(m) + 1) return std::nullopt;
  AffinePattern p = *this;
  auto& parts = p.lambdas[l - 1].parts;
  if (m >= int(parts.size())) parts.resize(m + 1, 0);
  parts[m]++;
  return p;
}

std::optional<AffinePattern> AffinePattern::remove_box(int l, int m) const {
  const Partition& lam = lambdas[l - 1];
  if (lam.part(m) == 0) return std::nullopt;
  if (lam.part(m) - 1 < lam.part(m + 1)) return std::nullopt;
  AffinePattern p = *this;
  auto& parts = p.lambdas[l - 1].parts;
  parts[m]--;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return p;
}

std::string AffinePattern::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int l = 0; l < n; ++l) {
    if (l > 0) os << "; ";
    if (lambdas[l].parts.empty()) os << "-";
    for (size_t k = 0; k < lambdas[l].parts.size(); ++k)
      os << (k ? "," : "") << lambdas[l].parts[k];
  }
  os << ")";
  return os.str();
}

bool DominantWeight::is_valid() const {
  if (int(mu.size()) != n || K <= 0) return false;
  // mu_0 + K >= mu_{1-n} >= ... >= mu_{-1} >= mu_0
  if (mu_at(0) + K < mu_at(1 - n)) return false;
  for (long r = 1 - n; r < 0; ++r)
    if (mu_at(r) < mu_at(r + 1)) return false;
  return true;
}

long DominantWeight::mu_tilde(long i) const {
  long m = ((i % n) + n) % n;
  long rep = m > 0 ? m - n : 0;
  return mu_at(rep) + floor_div(-i, n) * long(K);
}

int CylindricPartition::total_boxes() const {
  int t = 0;
  for (const auto& row : heights)
    for (int h : row) t += h;
  return t;
}

std::vector<int> CylindricPartition::degree() const {
  // h(x, y) contributes its boxes to the degree slot (x + y) mod n shifted:
  // the box at (x, y) of height index matches pattern entry d_{y-x,-x}, which
  // counts toward d_k with k = (y - x) mod n ... computed via the pattern
  // identification d_k = sum_{m>=0} h((m - k) mod n, m).
  std::vector<int> deg(n, 0);
  for (int x = 0; x < n; ++x)
    for (size_t y = 0; y < heights[x].size(); ++y) {
      // slot: k with (m - k) = x up to mod n, m = y
      int k = AffinePattern::residue(long(y) - x, n);
      deg[k - 1] += heights[x][y];
    }
  return deg;
}

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back();
      out.back().parts = cur;
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

std::vector<FinitePattern> enumerate_finite(int n, const std::vector<int>& degree) {
  if (int(degree.size()) != n - 1)
    throw std::invalid_argument("finite degree vector needs n-1 entries");
  std::vector<FinitePattern> out;
  FinitePattern cur = FinitePattern::vacuum(n);
  // fill row by row; entries in row i bounded by row i-1 except d_{ii}
  std::function<void(int)> fill_row = [&](int i) {
    if (i > n - 1) {
      out.push_back(cur);
      return;
    }
    std::function<void(int, int)> fill_entry = [&](int j, int rem) {
      if (j == i) {
        cur.rows[i - 1][j - 1] = rem;  // unbounded top entry takes the rest
        fill_row(i + 1);
        cur.rows[i - 1][j - 1] = 0;
        return;
      }
      int hi = std::min(rem, cur.rows[i - 2][j - 1]);
      for (int v = 0; v <= hi; ++v) {
        cur.rows[i - 1][j - 1] = v;
        fill_entry(j + 1, rem - v);
      }
      cur.rows[i - 1][j - 1] = 0;
    };
    fill_entry(1, degree[i - 1]);
  };
  fill_row(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffinePattern> enumerate_affine(int n, const std::vector<int>& degree) {
  if (int(degree.size()) != n)
    throw std::invalid_argument("affine degree vector needs n entries");
  int total = std::accumulate(degree.begin(), degree.end(), 0);
  std::vector<AffinePattern> out;
  for (auto& p : enumerate_affine_upto(n, total))
    if (p.degree() == degree) out.push_back(std::move(p));
  return out;
}

std::vector<AffinePattern> enumerate_affine_upto(int n, int cap) {
  std::vector<std::vector<Partition>> by_size(cap + 1);
  for (int s = 0; s <= cap; ++s) by_size[s] = partitions_of(s);
  std::vector<AffinePattern> out;
  AffinePattern cur = AffinePattern::vacuum(n);
  std::function<void(int, int)> rec = [&](int l, int rem) {
    if (l > n) {
      out.push_back(cur);
      return;
    }
    for (int s = 0; s <= rem; ++s)
      for (const auto& part : by_size[s]) {
        cur.lambdas[l - 1] = part;
        rec(l + 1, rem - s);
      }
    cur.lambdas[l - 1] = Partition();
  };
  rec(1, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinitePattern> enumerate_finite_upto(int n, int cap) {
  std::vector<FinitePattern> out;
  std::vector<int> deg(n - 1, 0);
  std::function<void(int, int)> rec = [&](int idx, int rem) {
    if (idx == n - 2) {
      deg[idx] = rem;
      auto batch = enumerate_finite(n, deg);
      out.insert(out.end(), batch.begin(), batch.end());
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      deg[idx] = v;
      rec(idx + 1, rem - v);
    }
  };
  for (int total = 0; total <= cap; ++total) rec(0, total);
  std::sort(out.begin(), out.end());
  return out;
}

DiagramCollection convert_to_collection(const AffinePattern& p) {
  int n = p.n;
  DiagramCollection c(n, std::vector<Partition>(n));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      int r = ((k - l) % n + n) % n;
      std::vector<int> parts;
      for (int i = 0;; ++i) {
        int v = p.lambdas[l - 1].part(n * i + r);
        if (v == 0) break;
        parts.push_back(v);
      }
      c[k - 1][l - 1] = Partition(std::move(parts));
    }
  return c;
}

namespace {

bool contains(const Partition& a, const Partition& b) {
  for (int i = 0; i < b.length(); ++i)
    if (a.part(i) < b.part(i)) return false;
  return true;
}

// a ~contains b: a_i >= b_{i+1} for all i
bool contains_shifted(const Partition& a, const Partition& b) {
  for (int i = 0; i + 1 < b.length() + 1; ++i)
    if (a.part(i) < b.part(i + 1)) return false;
  return true;
}

}  // namespace

AffinePattern collection_to_pattern(int n, const DiagramCollection& c) {
  if (int(c.size()) != n)
    throw std::invalid_argument("collection has wrong size");
  // chain for column l: lambda^{ll} > lambda^{(l+1)l} > ... (cyclic), with the
  // wrap-around step shifted
  for (int l = 1; l <= n; ++l) {
    for (int s = 0; s + 1 < n; ++s) {
      int k1 = (l - 1 + s) % n + 1, k2 = (l - 1 + s + 1) % n + 1;
      if (!contains(c[k1 - 1][l - 1], c[k2 - 1][l - 1]))
        throw std::invalid_argument("chain containment fails in column " +
                                    std::to_string(l));
    }
    int klast = (l - 1 + n - 1) % n + 1;
    if (!contains_shifted(c[klast - 1][l - 1], c[l - 1][l - 1]))
      throw std::invalid_argument("wrap-around containment fails in column " +
                                  std::to_string(l));
  }
  AffinePattern p = AffinePattern::vacuum(n);
  for (int l = 1; l <= n; ++l) {
    int col_len = 0;
    for (int k = 1; k <= n; ++k)
      col_len = std::max(col_len, c[k - 1][l - 1].length());
    std::vector<int> parts(size_t(n) * col_len, 0);
    for (size_t idx = 0; idx < parts.size(); ++idx) {
      int r = int(idx % n), i = int(idx / n);
      int k = (l - 1 + r) % n + 1;
      parts[idx] = c[k - 1][l - 1].part(i);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    p.lambdas[l - 1] = Partition(std::move(parts));  // throws if not decreasing
  }
  return p;
}

bool in_Dmu(const AffinePattern& p, const DominantWeight& w) {
  int n = p.n;
  int maxlen = p.max_len();
  int maxpart = 0;
  for (const auto& lam : p.lambdas)
    if (lam.length() > 0) maxpart = std::max(maxpart, lam.part(0));
  long lstar = long(n) * (1 + maxpart) + n;
  for (int i = 1; i <= n; ++i)
    for (long j = i; j >= i - maxlen; --j)
      for (long l = 0; l <= lstar; ++l) {
        long lhs = p.d(i, j) - w.mu_tilde(j);
        long rhs = p.d(i + l, j + l) - w.mu_tilde(j + l);
        if (lhs > rhs) return false;
      }
  return true;
}

CylindricPartition to_cylindric(const AffinePattern& p, const DominantWeight& w) {
  if (!in_Dmu(p, w))
    throw std::invalid_argument("pattern is not in D(mu)");
  CylindricPartition c;
  c.n = p.n;
  c.boundary = w;
  c.heights.resize(p.n);
  for (int x = 0; x < p.n; ++x) {
    int l = AffinePattern::residue(-x, p.n);
    c.heights[x] = p.lambdas[l - 1].parts;
  }
  return c;
}

AffinePattern from_cylindric(const CylindricPartition& c) {
  AffinePattern p = AffinePattern::vacuum(c.n);
  for (int x = 0; x < c.n; ++x) {
    int l = AffinePattern::residue(-x, c.n);
    p.lambdas[l - 1] = Partition(c.heights[x]);
  }
  if (!in_Dmu(p, c.boundary))
    throw std::invalid_argument("cylindric data is not in D(mu)");
  return p;
}

}  // namespace laumon
