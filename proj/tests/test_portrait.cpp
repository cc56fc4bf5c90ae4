#include <gtest/gtest.h>

#include <cmath>

#include "growthlab/errors.hpp"
#include "growthlab/portrait.hpp"
#include "growthlab/random_words.hpp"

using namespace growthlab;

namespace {

// The first 2046 edges of the Grigorchuk ray, as in tests/oracles/oracle.py.
PortraitHost reference_host() {
  Segment s = segment_ray("grigorchuk", 2047).slice(0, 2046);
  LabeledGraph g = s.to_graph();
  ChainCode code(s);
  return PortraitHost{"grigorchuk", std::move(s), std::move(g), std::move(code), 64};
}

}  // namespace

TEST(Portrait, LargestPortraitsMatchReference) {
  auto host = reference_host();
  const std::vector<std::size_t> want{4, 7, 11, 14, 18};  // oracle.py portraits
  auto words = all_words(4, 4);
  for (int r = 0; r <= 4; ++r) EXPECT_EQ(growth_bound_eval(host, r, words).portrait_max, want[r]) << r;
}

TEST(Portrait, EmptyWordSeesEveryVertexClass) {
  auto host = portrait_host("golden_mean", 16);
  auto p = standard_portrait(host, {});
  EXPECT_TRUE(p.consistent);
  EXPECT_EQ(p.size(), count_ball_classes(host.code, 0).classes);
  for (const auto& e : p.elements) {
    EXPECT_EQ(e.radius, 0);
    EXPECT_EQ(e.second, 0);
    EXPECT_EQ(e.ball_vertices, 1);
  }
}

TEST(Portrait, RandomWordsGiveConsistentPortraits) {
  for (const auto& name : {"grigorchuk", "golden_mean", "simple_grig"}) {
    auto host = portrait_host(name, 64);
    const int k = static_cast<int>(host.graph.label_count());
    for (const auto& w : random_words(6, 64, k, 21)) {
      auto p = standard_portrait(host, w);
      EXPECT_TRUE(p.consistent) << name;
      EXPECT_GT(p.size(), 0u);
      for (const auto& e : p.elements) {
        EXPECT_LE(e.radius, 64);
        EXPECT_LE(std::abs(e.second), e.radius);
        EXPECT_LE(e.ball_vertices, 2 * e.radius + 1);
      }
      for (std::size_t i = 1; i < p.elements.size(); ++i) {
        const auto& a = p.elements[i - 1];
        const auto& b = p.elements[i];
        EXPECT_TRUE(std::tie(a.code, a.root, a.second) < std::tie(b.code, b.root, b.second));
      }
    }
  }
}

TEST(Portrait, NpInterpolates) {
  auto host = portrait_host("grigorchuk", 128);
  auto p = standard_portrait(host, random_word(128, 4, 5));
  EXPECT_DOUBLE_EQ(n_p(p, 1).value, static_cast<double>(p.size()));
  double volume = 0;
  for (const auto& e : p.elements) volume += e.ball_vertices;
  EXPECT_NEAR(std::pow(n_p(p, 2).value, 2), volume, 1e-9 * volume);
  EXPECT_THROW(n_p(p, 0.5), DomainError);
}

TEST(Portrait, WordTooLongForHost) {
  auto host = portrait_host("grigorchuk", 8);
  EXPECT_THROW(standard_portrait(host, GenWord(9, 0)), DomainError);
  EXPECT_THROW(standard_portrait(host, GenWord{7}), DomainError);
}

TEST(Portrait, AllWordsEnumeration) {
  auto words = all_words(3, 3);
  EXPECT_EQ(words.size(), 1u + 3 + 9 + 27);
  EXPECT_TRUE(words.front().empty());
  EXPECT_EQ(words.back(), (GenWord{2, 2, 2}));
}

TEST(Portrait, P1P2ClosedForm) {
  auto host = portrait_host("grigorchuk", 32);
  std::vector<Portrait> sample{standard_portrait(host, random_word(32, 4, 1))};
  auto r = check_p1p2(sample, 1.0, 2.0, 4.0);
  // 4^(1/2) * 1^(3/2) / (1 * 2) = 1
  EXPECT_NEAR(r.closed_form, 1.0, 1e-12);
  EXPECT_GT(r.max_ratio, 0);
  EXPECT_THROW(check_p1p2(sample, 2.0, 1.0, 4.0), DomainError);
  EXPECT_THROW(check_p1p2({}, 1.0, 2.0, 4.0), DomainError);
}
