#include <gtest/gtest.h>

#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"

using namespace growthlab;

// Reference series from tests/oracles/oracle.py growth.
TEST(Growth, GrigorchukSeries) {
  auto g = load_builtin("grigorchuk");
  std::vector<std::uint64_t> want{1, 5, 11, 23, 40, 68, 108};
  EXPECT_EQ(cayley_ball(g, 6, Oracle::Minimize), want);
  EXPECT_EQ(cayley_ball(g, 6, Oracle::Action), want);
}

TEST(Growth, SimpleGroupSeries) {
  auto g = load_builtin("simple_grig");
  std::vector<std::uint64_t> want{1, 6, 19, 55, 148, 403};
  EXPECT_EQ(cayley_ball(g, 5, Oracle::Minimize), want);
}

TEST(Growth, GoldenMeanSeries) {
  auto g = load_builtin("golden");
  std::vector<std::uint64_t> want{1, 13, 97, 590, 3172};
  EXPECT_EQ(cayley_ball(g, 4, Oracle::Minimize), want);
}

TEST(Growth, OraclesAgreeOnShortProducts) {
  for (const auto& name : builtin_names()) {
    auto rep = dual_oracle_check(load_builtin(name), 3);
    EXPECT_TRUE(rep.agree()) << name << ": " << rep.witness;
    EXPECT_GT(rep.products_checked, 0u);
  }
}

TEST(Growth, SeriesIsMonotoneAndSubmultiplicative) {
  for (const auto& name : builtin_names()) {
    auto gamma = cayley_ball(load_builtin(name), 4, Oracle::Minimize);
    for (std::size_t r = 1; r < gamma.size(); ++r) {
      EXPECT_GT(gamma[r], gamma[r - 1]) << name;
      for (std::size_t s = 1; s + r < gamma.size(); ++s) EXPECT_LE(gamma[r + s], gamma[r] * gamma[s]) << name;
    }
  }
}

TEST(Growth, CapRaisesResourceLimit) {
  EXPECT_THROW(cayley_ball(load_builtin("grigorchuk"), 6, Oracle::Minimize, 30), ResourceLimit);
}

TEST(Group, KleinRelations) {
  auto g = load_builtin("grigorchuk");
  EXPECT_TRUE(g.product(g.parse_word("bcd")).is_identity());
  EXPECT_TRUE(g.product(g.parse_word("bc")) == g.element("d"));
  EXPECT_FALSE(g.product(g.parse_word("ab")).is_identity());
  EXPECT_TRUE(g.product(g.parse_word("adadadad")).is_identity());
  EXPECT_FALSE(g.product(g.parse_word("adad")).is_identity());
}

TEST(Group, ExampleNames) {
  EXPECT_EQ(canonical_example("golden"), "golden_mean");
  EXPECT_EQ(canonical_example("simple_grig"), "simple_grig");
  EXPECT_THROW(canonical_example("basilica"), UnknownExample);
  EXPECT_THROW(load_builtin("nope"), UnknownExample);
  EXPECT_EQ(load_builtin("simple_grig").size(), 5u);
  EXPECT_EQ(load_builtin("golden_mean").size(), 12u);
}

TEST(Group, WordsParseAndFormat) {
  auto g = load_builtin("golden_mean");
  auto w = g.parse_word("a0 b1 d2");
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(g.format_word(w), "a0 b1 d2");
  EXPECT_THROW(g.parse_word("a0 q9"), NotFound);
}

TEST(Group, GeneratorsJsonRoundTrip) {
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    auto back = generators_from_json(generators_to_json(g));
    ASSERT_EQ(back.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_EQ(back.generators[i].symbol, g.generators[i].symbol);
      EXPECT_TRUE(minimize(back.generators[i].machine) == minimize(g.generators[i].machine));
    }
  }
}

// Forgetting the index of 0_x turns a0 a1 into the Grigorchuk generator a.
TEST(Group, IndexErasureOfA0A1) {
  auto s = load_builtin("simple_grig");
  auto g = load_builtin("grigorchuk");
  const auto& sa = *s.alphabet;
  const auto& ga = *g.alphabet;
  auto a0a1 = compose(s["a0"], s["a1"]);
  auto erase = [&](const Word& w) {
    Word out;
    for (Letter x : w) out.push_back(ga.index(sa.name(x) == "1" ? "1" : "0"));
    return out;
  };
  // every valid word of length 8, followed by 1^12
  std::vector<Word> words{{}};
  for (int n = 0; n < 8; ++n) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (Letter x = 0; x < sa.size(); ++x)
        if (sa.allows(w.empty() ? -1 : w.back(), x)) {
          next.push_back(w);
          next.back().push_back(x);
        }
    words = std::move(next);
  }
  int checked = 0;
  for (auto w : words) {
    if (!sa.allows(w.back(), sa.index("1"))) continue;
    for (int i = 0; i < 12; ++i) w.push_back(sa.index("1"));
    Word lhs = erase(determined_image(a0a1, w));
    Word rhs = growthlab::apply(g["a"], erase(w));
    ASSERT_GE(lhs.size(), 8u);
    ASSERT_TRUE(std::equal(lhs.begin(), lhs.begin() + 8, rhs.begin())) << sa.format(w);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}
