#pragma once

#include <cstddef>
#include <vector>

namespace monograph {

struct Ball {
  double x = 0, y = 0, r = 0;
};

// Greedy 2r-type covering selection. Balls are grouped into radius bands
// ((delta-1)^-n, (delta-1)^-(n-1)]; bands are processed from the largest
// down, and within a band (input order) a ball is selected iff it is
// disjoint from everything selected so far. Selected balls are pairwise
// disjoint, and inflating each selected radius by delta covers every input
// center. Requires delta > 2 and positive, bounded radii.
std::vector<std::size_t> cover_2r(const std::vector<Ball>& balls, double delta);

}  // namespace monograph
