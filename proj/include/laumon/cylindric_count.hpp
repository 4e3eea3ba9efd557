#pragma once

#include <map>
#include <vector>

#include "laumon/patterns.hpp"

namespace laumon::cylcount {

// Independent enumerator of cylindric plane partitions with boundary (mu, K).
//
// Model: a plane partition against the staircase wall w(x) = -mu~_{-x} on the
// cylinder identifying x and x+n up to a vertical shift by the level K.  The
// reduced data is one partition nu^x per wall column x = 1..n; the
// plane-partition condition across columns reads
//     nu^x_t >= nu^{x+1}_{t + g_x},   g_x = mu~_{-x-1} - mu~_{-x} >= 0,
// cyclically with nu^{n+1} = nu^1 (the wrap gap already contains the level).
// A pile of height v at column x, row t holds boxes at levels z = 0..v-1, and
// the box at level z counts toward the degree slot (z - x) mod n.
//
// This file shares no code with the pattern-side bijection; it is the other
// side of the graded character comparison.
std::map<std::vector<int>, long> cylindric_counts(const DominantWeight& w,
                                                  int cutoff);

}  // namespace laumon::cylcount
