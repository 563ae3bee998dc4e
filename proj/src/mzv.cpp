#include "monograph/mzv.hpp"

namespace monograph {

MzvLevel mzv_level0() {
  return {0, PLFunction({Rational(0), Rational(1)}, {Rational(0), Rational(0)})};
}

MzvLevel mzv_refine(const MzvLevel& level) {
  const auto& xs = level.fn.breakpoints();
  const auto& ys = level.fn.values();
  std::vector<Rational> nx, ny;
  nx.reserve(5 * xs.size());
  ny.reserve(5 * xs.size());
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rational& a = xs[k];
    const Rational& b = xs[k + 1];
    const Rational& fa = ys[k];
    const Rational& fb = ys[k + 1];
    Rational step = (b - a) / 5;
    if (fa == fb) {
      Rational peak = fa + (b - a) / 6;
      // Right endpoint of the block is emitted by the next block (or the
      // final append below).
      nx.push_back(a);            ny.push_back(fa);
      nx.push_back(a + step);     ny.push_back(fa);
      nx.push_back(a + 2 * step); ny.push_back(peak);
      nx.push_back(a + 3 * step); ny.push_back(peak);
      nx.push_back(a + 4 * step); ny.push_back(fa);
    } else {
      Rational mid = (fa + fb) / 2;
      nx.push_back(a);            ny.push_back(fa);
      nx.push_back(a + step);     ny.push_back(mid);
      nx.push_back(a + 4 * step); ny.push_back(mid);
    }
  }
  nx.push_back(xs.back());
  ny.push_back(ys.back());
  return {level.level + 1, PLFunction(std::move(nx), std::move(ny))};
}

MzvLevel mzv_approximant(int n, int level_cap) {
  if (n < 0) throw std::invalid_argument("mzv level must be nonnegative");
  if (n > level_cap)
    throw ResourceLimitError("mzv level " + std::to_string(n) + " exceeds cap " +
                             std::to_string(level_cap));
  MzvLevel cur = mzv_level0();
  for (int i = 0; i < n; ++i) cur = mzv_refine(cur);
  return cur;
}

std::pair<Rational, Rational> mzv_eval(const MzvLevel& level, const Rational& x) {
  return {pl_eval(level.fn, x), pow2(1 - level.level)};
}

namespace {

// Sub-blocks of one block, in the refinement order.
std::vector<MzvBlock> refine_block(const MzvBlock& blk) {
  Rational step = (blk.b - blk.a) / 5;
  std::vector<MzvBlock> out;
  int lv = blk.level + 1;
  if (blk.flat()) {
    Rational peak = blk.fa + (blk.b - blk.a) / 6;
    out.push_back({lv, blk.a, blk.a + step, blk.fa, blk.fa});
    out.push_back({lv, blk.a + step, blk.a + 2 * step, blk.fa, peak});
    out.push_back({lv, blk.a + 2 * step, blk.a + 3 * step, peak, peak});
    out.push_back({lv, blk.a + 3 * step, blk.a + 4 * step, peak, blk.fa});
    out.push_back({lv, blk.a + 4 * step, blk.b, blk.fa, blk.fa});
  } else {
    Rational mid = (blk.fa + blk.fb) / 2;
    out.push_back({lv, blk.a, blk.a + step, blk.fa, mid});
    out.push_back({lv, blk.a + step, blk.a + 4 * step, mid, mid});
    out.push_back({lv, blk.a + 4 * step, blk.b, mid, blk.fb});
  }
  return out;
}

MzvBlock select_child(const MzvBlock& blk, const Rational& x) {
  auto children = refine_block(blk);
  for (std::size_t i = 0; i < children.size(); ++i) {
    bool last = (i + 1 == children.size());
    if (x < children[i].b || (last && x <= children[i].b)) return children[i];
  }
  throw std::logic_error("mzv block descent lost the point");
}

}  // namespace

std::vector<MzvBlock> mzv_block_chain(const Rational& x, int depth) {
  if (x < 0 || x > 1) throw std::domain_error("mzv point outside [0,1]");
  std::vector<MzvBlock> chain;
  chain.reserve(static_cast<std::size_t>(depth) + 1);
  chain.push_back({0, Rational(0), Rational(1), Rational(0), Rational(0)});
  for (int n = 0; n < depth; ++n) chain.push_back(select_child(chain.back(), x));
  return chain;
}

std::pair<Rational, Rational> mzv_limit_eval(const Rational& x, int depth) {
  auto chain = mzv_block_chain(x, depth);
  const MzvBlock& blk = chain.back();
  if (x == blk.a) return {blk.fa, Rational(0)};
  if (x == blk.b) return {blk.fb, Rational(0)};
  Rational value = blk.fa + (blk.fb - blk.fa) * (x - blk.a) / (blk.b - blk.a);
  return {value, pow2(1 - depth)};
}

std::vector<MzvSlopePair> mzv_slope_chain(int count) {
  std::vector<MzvSlopePair> out;
  // Level 1 rise block of the unit flat block, then first sub-blocks.
  MzvBlock blk{1, Rational(1, 5), Rational(2, 5), Rational(0), Rational(1, 6)};
  for (int i = 1; i <= count; ++i) {
    Rational slope = abs(blk.fb - blk.fa) / (blk.b - blk.a);
    out.push_back({blk.level, blk.a, blk.b, slope});
    blk = refine_block(blk).front();
  }
  return out;
}

}  // namespace monograph
