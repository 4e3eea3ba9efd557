#include "laumon/cylindric_count.hpp"

#include <functional>
#include <numeric>

namespace laumon::cylcount {

namespace {

bool shifted_dominates(const std::vector<int>& a, const std::vector<int>& b,
                       int gap) {
  // a_t >= b_{t+gap} for all t >= 0
  for (size_t t = 0;; ++t) {
    int bv = t + gap < b.size() ? b[t + gap] : 0;
    if (bv == 0) return true;
    int av = t < a.size() ? a[t] : 0;
    if (av < bv) return false;
  }
}

}  // namespace

std::map<std::vector<int>, long> cylindric_counts(const DominantWeight& w,
                                                  int cutoff) {
  int n = w.n;
  std::vector<int> gap(n);
  for (int x = 1; x <= n; ++x)
    gap[x - 1] = int(w.mu_tilde(-x - 1) - w.mu_tilde(-x));

  std::vector<std::vector<Partition>> by_size(cutoff + 1);
  for (int s = 0; s <= cutoff; ++s) by_size[s] = partitions_of(s);

  std::map<std::vector<int>, long> counts;
  std::vector<const Partition*> nu(n);
  std::function<void(int, int)> rec = [&](int x, int rem) {
    if (x > n) {
      // wrap condition nu^n >= shifted nu^1
      if (!shifted_dominates(nu[n - 1]->parts, nu[0]->parts, gap[n - 1]))
        return;
      // degree: box at column x0 (1..n), row t, level z counts toward slot
      // (z - x0) mod n
      std::vector<int> deg(n, 0);
      for (int x0 = 1; x0 <= n; ++x0)
        for (size_t t = 0; t < nu[x0 - 1]->parts.size(); ++t)
          for (int z = 0; z < nu[x0 - 1]->parts[t]; ++z)
            deg[AffinePattern::residue(z - x0, n) - 1]++;
      counts[deg]++;
      return;
    }
    for (int s = 0; s <= rem; ++s)
      for (const auto& part : by_size[s]) {
        if (x > 1 &&
            !shifted_dominates(nu[x - 2]->parts, part.parts, gap[x - 2]))
          continue;
        nu[x - 1] = &part;
        rec(x + 1, rem - s);
      }
  };
  rec(1, cutoff);
  return counts;
}

}  // namespace laumon::cylcount
