#include "monograph/pc.hpp"

#include <algorithm>

namespace monograph {

namespace {

struct WorstPair {
  Rational ratio = 0;
  std::optional<PcWitness> witness;
};

// Max over breakpoints t and critical levels v of |f(t) - v| / (y - x),
// where x, y are the nearest level-v crossings bracketing t.
WorstPair worst_oscillation_ratio(const PLFunction& f) {
  const auto& xs = f.breakpoints();
  const auto& ys = f.values();

  std::vector<Rational> levels = ys;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  WorstPair best;
  for (const Rational& v : levels) {
    std::vector<LevelSet> comps = pl_level_crossings(f, v);
    if (comps.size() < 2) continue;  // need a crossing on each side of t
    std::size_t ci = 0;  // first component with hi >= current breakpoint
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (ys[j] == v) continue;
      while (ci < comps.size() && comps[ci].hi < xs[j]) ++ci;
      // ys[j] != v, so xs[j] lies strictly between comps[ci-1] and comps[ci].
      if (ci == 0 || ci == comps.size()) continue;
      const Rational& left = comps[ci - 1].hi;
      const Rational& right = comps[ci].lo;
      Rational ratio = abs(ys[j] - v) / (right - left);
      if (ratio > best.ratio) {
        best.ratio = ratio;
        best.witness = PcWitness{left, xs[j], right};
      }
    }
  }
  return best;
}

}  // namespace

PcCertificate check_pc(const PLFunction& f, const Rational& c) {
  if (c <= 0) throw std::invalid_argument("check_pc requires c > 0");
  WorstPair worst = worst_oscillation_ratio(f);
  if (worst.ratio <= c) return {true, c, std::nullopt};
  return {false, c, worst.witness};
}

Rational least_pc(const PLFunction& f) { return worst_oscillation_ratio(f).ratio; }

}  // namespace monograph
