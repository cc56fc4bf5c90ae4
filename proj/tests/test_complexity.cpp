#include <gtest/gtest.h>

#include "growthlab/complexity.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"
#include "growthlab/segments.hpp"

using namespace growthlab;

// tests/oracles/oracle.py balls: first 2046 edges of the Grigorchuk ray.
TEST(Complexity, GrigorchukMatchesReference) {
  auto s = segment_ray("grigorchuk", 2047).slice(0, 2046);
  const std::vector<std::pair<int, std::size_t>> want{{1, 7}, {2, 11}, {3, 14}, {5, 22}, {8, 32}, {13, 50}};
  for (auto [r, n] : want) EXPECT_EQ(count_ball_classes(s, r).classes, n) << r;
}

TEST(Complexity, SerialAndParallelProfilesAgree) {
  for (const auto& name : builtin_names()) {
    ChainCode code(segment_ray(name, 3000));
    auto a = ball_class_profile_serial(code, 0, 40);
    auto b = ball_class_profile(code, 0, 40);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].radius, b[i].radius);
      EXPECT_EQ(a[i].classes, b[i].classes) << name << " R=" << a[i].radius;
      EXPECT_EQ(a[i].centres, b[i].centres);
    }
  }
}

TEST(Complexity, ClassesGrowWithRadius) {
  for (const auto& name : builtin_names()) {
    ChainCode code(segment_ray(name, 4096));
    auto profile = ball_class_profile(code, 0, 60);
    for (std::size_t i = 1; i < profile.size(); ++i) EXPECT_GE(profile[i].classes, profile[i - 1].classes) << name;
  }
}

TEST(Complexity, KeysIgnoreReflection) {
  auto s = build_segment("grigorchuk", 6);
  s.outer_left = s.outer_right = 0;
  ChainCode fwd(s), rev(s.reversed());
  const int len = s.length();
  for (int r = 1; r < 10; ++r)
    for (int v = r; v + r <= len; ++v) {
      auto a = fwd.key(v, r);
      auto b = rev.key(len - v, r);
      EXPECT_EQ(a.code, b.code);
      EXPECT_EQ(a.root, b.root);
    }
}

TEST(Complexity, KeyPastTheEndThrows) {
  ChainCode code(segment_ray("grigorchuk", 100));
  EXPECT_THROW(code.key(code.length() - 1, 5), TruncationBoundary);
  EXPECT_EQ(code.ball_size(0, 3), 4);
  EXPECT_EQ(code.ball_size(10, 3), 7);
}

TEST(Repetitivity, GrigorchukGap) {
  auto ray = segment_ray("grigorchuk", 1 << 13);
  for (int n = 2; n <= 8; ++n) {
    auto s = build_segment("grigorchuk", n);
    int gap = repetitivity_gap(ray, s);
    EXPECT_GE(gap, s.length());
    EXPECT_LE(gap, 2 * (s.length() + 1)) << n;
  }
  EXPECT_THROW(repetitivity_gap(segment_ray("grigorchuk", 40), build_segment("grigorchuk", 6)), NotFound);
}
