#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/segments.hpp"

namespace growthlab {

// A chain written as alternating loop sets and edge sets,
// loops(0) edge(0) loops(1) ... loops(len), together with its mirror image.
// Rooted balls become substrings, and isomorphism of rooted chain balls is
// equality up to reflection.
class ChainCode {
 public:
  explicit ChainCode(const Segment& chain);

  int length() const { return length_; }  // edges

  // Ball of radius R around v, possibly cut short by the closed left end.
  // y_offset is the position of a second root relative to v.
  struct Key {
    std::u16string_view code;
    int root = 0;  // root position inside the ball
    int second = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };
  // Canonical key under reflection; throws TruncationBoundary when the ball
  // passes the right end.
  Key key(int v, int radius, int y_offset = 0) const;
  // Vertices of the ball.
  int ball_size(int v, int radius) const;

 private:
  int length_;
  bool closed_left_;
  std::u16string fwd_;
  std::u16string rev_;
};

// delta(R): number of rooted ball classes over all centres whose ball stays
// inside the chain.
struct BallCount {
  int radius = 0;
  std::size_t classes = 0;
  std::size_t centres = 0;
  std::size_t skipped = 0;
};
BallCount count_ball_classes(const Segment& chain, int radius);
BallCount count_ball_classes(const ChainCode& code, int radius);
// One entry per radius in [lo, hi]; serial and OpenMP versions agree.
std::vector<BallCount> ball_class_profile_serial(const ChainCode& code, int lo, int hi);
std::vector<BallCount> ball_class_profile(const ChainCode& code, int lo, int hi);

// Largest distance between starts of consecutive direction-preserving
// occurrences of s in the chain; throws NotFound unless s occurs twice.
int repetitivity_gap(const Segment& chain, const Segment& s);

}  // namespace growthlab
