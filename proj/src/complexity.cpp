#include "growthlab/complexity.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <unordered_set>

#include "growthlab/errors.hpp"
#include "growthlab/traverse.hpp"

namespace growthlab {

ChainCode::ChainCode(const Segment& chain) : length_(chain.length()), closed_left_(chain.outer_left == 0) {
  if (chain.outer_right < 0 || chain.outer_left < 0)
    throw DomainError("chain code needs known outer edges at both ends");
  const LabelMask full = chain.full_mask();
  fwd_.reserve(2 * length_ + 1);
  for (int v = 0; v <= length_; ++v) {
    const int left = v > 0 ? chain.edges[v - 1] : chain.outer_left;
    const int right = v < length_ ? chain.edges[v] : chain.outer_right;
    fwd_.push_back(static_cast<char16_t>(full & ~(left | right)));
    if (v < length_) fwd_.push_back(static_cast<char16_t>(chain.edges[v]));
  }
  rev_.assign(fwd_.rbegin(), fwd_.rend());
}

std::size_t ChainCode::KeyHash::operator()(const Key& k) const {
  std::size_t h = std::hash<std::u16string_view>{}(k.code);
  h ^= static_cast<std::size_t>(k.root) * 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::size_t>(k.second + (1 << 20)) * 0xc2b2ae3d27d4eb4fULL + (h << 6) + (h >> 2);
  return h;
}

ChainCode::Key ChainCode::key(int v, int radius, int y_offset) const {
  if (v < 0 || v > length_ || radius < 0) throw DomainError("ball centre out of range");
  const int hi = v + radius;
  if (hi > length_) throw TruncationBoundary("ball of radius " + std::to_string(radius) + " around " +
                                            std::to_string(v) + " passes the end of the chain");
  int lo = v - radius;
  if (lo < 0) {
    if (!closed_left_) throw TruncationBoundary("ball passes the open left end");
    lo = 0;
  }
  const std::size_t len = static_cast<std::size_t>(2 * (hi - lo) + 1);
  const std::u16string_view f(fwd_), r(rev_);
  Key a{f.substr(2 * lo, len), v - lo, y_offset};
  Key b{r.substr(fwd_.size() - 1 - 2 * hi, len), hi - v, -y_offset};
  return std::tie(b.code, b.root, b.second) < std::tie(a.code, a.root, a.second) ? b : a;
}

int ChainCode::ball_size(int v, int radius) const {
  return std::min(v + radius, length_) - std::max(v - radius, 0) + 1;
}

BallCount count_ball_classes(const ChainCode& code, int radius) {
  BallCount out;
  out.radius = radius;
  std::unordered_set<ChainCode::Key, ChainCode::KeyHash> seen;
  for (int v = 0; v <= code.length(); ++v) {
    if (v + radius > code.length()) {
      ++out.skipped;
      continue;
    }
    ++out.centres;
    seen.insert(code.key(v, radius));
  }
  out.classes = seen.size();
  return out;
}

BallCount count_ball_classes(const Segment& chain, int radius) {
  return count_ball_classes(ChainCode(chain), radius);
}

std::vector<BallCount> ball_class_profile_serial(const ChainCode& code, int lo, int hi) {
  std::vector<BallCount> out;
  for (int r = lo; r <= hi; ++r) out.push_back(count_ball_classes(code, r));
  return out;
}

std::vector<BallCount> ball_class_profile(const ChainCode& code, int lo, int hi) {
  std::vector<BallCount> out(std::max(0, hi - lo + 1));
  const int n = static_cast<int>(out.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) out[k] = count_ball_classes(code, lo + k);
  return out;
}

int repetitivity_gap(const Segment& chain, const Segment& s) {
  auto at = find_occurrences(chain, s, false);
  if (at.size() < 2)
    throw NotFound(s.name + " occurs " + std::to_string(at.size()) + " time(s) in " + chain.name);
  int gap = 0;
  for (std::size_t k = 1; k < at.size(); ++k) gap = std::max(gap, at[k] - at[k - 1]);
  return gap;
}

}  // namespace growthlab
