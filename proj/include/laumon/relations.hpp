#pragma once

#include <optional>
#include <string>
#include <vector>

#include "laumon/affine_module.hpp"
#include "laumon/finite_module.hpp"

namespace laumon {

struct RelationResult {
  std::string relation;
  std::string indices;
  std::string basis;
  bool pass = false;
  std::string diff;  // canonical terms of lhs - rhs when failing
};

struct RelationReport {
  std::vector<RelationResult> results;
  size_t failures() const {
    size_t f = 0;
    for (const auto& r : results)
      if (!r.pass) ++f;
    return f;
  }
  bool all_pass() const { return failures() == 0; }
};

// gl_n Chevalley relations plus the Yangian relations with current indices
// r, s, p <= rmax, applied to every basis vector of total degree <= D.
// In the relation set the degree-raising currents play the plus role.
RelationReport verify_finite_relations(int n, int D, int rmax, int threads = 1);

// Affine Yangian relations: Kac-Moody Chevalley set, the Yangian set with
// indices mod n, and the wrap-around pairs (n,1), (1,n) taken with the
// shifted series 'h_n(u) = h_n(u - hp/h - n/2), 'x_n likewise.
RelationReport verify_affine_relations(int n, int D, int rmax, int threads = 1);

// The Y(sl^_n) quotient at hp = -(n/2) h: the wrap-around pairs obey the
// plain unshifted relations (12), (14) after the substitution.  All other
// instances coincide verbatim with the generic suite, so checking the wrap
// pairs alone completes the specialized presentation.
RelationReport verify_affine_relations_slhat(int n, int D, int rmax,
                                             int threads = 1);

// Shift identity x_{k-n}(u) = x_k(u - hp/h - n/2) and h likewise, compared
// coefficient by coefficient on all basis vectors of degree <= D.
RelationReport verify_shift_identity(int n, int D, int rmax);

// Recursion (a_{0,i+n} = a_{0n} * a_{n,i+n}, the product formula for a_{0i},
// and the functional equation for a_{01}) as rational-function identities,
// plus the critical-value product at hp = -n h.
RelationReport verify_a01(int n, int D);

// Pairwise distinct h-eigenvalue tuples; every point admits a raising
// operator, every non-vacuum point a lowering one.
RelationReport verify_irreducible(int n, int D);

}  // namespace laumon
