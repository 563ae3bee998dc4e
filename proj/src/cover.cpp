#include "monograph/cover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monograph {

namespace {

bool disjoint(const Ball& a, const Ball& b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  double s = a.r + b.r;
  return dx * dx + dy * dy > s * s;
}

}  // namespace

std::vector<std::size_t> cover_2r(const std::vector<Ball>& balls, double delta) {
  if (delta <= 2) throw std::invalid_argument("cover_2r requires delta > 2");
  for (const Ball& b : balls)
    if (!(b.r > 0)) throw std::invalid_argument("cover_2r requires positive radii");

  // Band n holds radii in ((delta-1)^-n, (delta-1)^-(n-1)]; smaller n means
  // larger radius.
  double log_beta = std::log(delta - 1.0);
  std::vector<std::size_t> order(balls.size());
  std::vector<long> band(balls.size());
  for (std::size_t i = 0; i < balls.size(); ++i) {
    order[i] = i;
    band[i] = static_cast<long>(std::floor(-std::log(balls[i].r) / log_beta)) + 1;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return band[a] < band[b]; });

  std::vector<std::size_t> selected;
  for (std::size_t i : order) {
    bool ok = true;
    for (std::size_t s : selected) {
      if (!disjoint(balls[i], balls[s])) {
        ok = false;
        break;
      }
    }
    if (ok) selected.push_back(i);
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

}  // namespace monograph
