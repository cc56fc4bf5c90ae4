#include <gtest/gtest.h>

#include <random>

#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"
#include "growthlab/transducer.hpp"

using namespace growthlab;

namespace {

Word random_valid(const SubshiftAlphabet& a, std::size_t n, std::mt19937_64& rng) {
  Word w;
  while (w.size() < n) {
    Letter x = static_cast<Letter>(rng() % a.size());
    if (a.allows(w.empty() ? -1 : w.back(), x)) w.push_back(x);
  }
  return w;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

}  // namespace

TEST(Alphabet, GoldenMeanForbidsDoubleOne) {
  auto g = load_builtin("golden_mean");
  const auto& a = *g.alphabet;
  EXPECT_TRUE(a.valid(a.parse("0100101")));
  EXPECT_FALSE(a.valid(a.parse("0110")));
  EXPECT_THROW(a.check(a.parse("11")), InvalidWord);
}

TEST(Alphabet, ParseFormatRoundTrip) {
  auto g = load_builtin("simple_grig");
  const auto& a = *g.alphabet;
  Word w = a.parse("0_0 0_1 1 1 0_0");
  ASSERT_EQ(w.size(), 5u);
  EXPECT_TRUE(a.parse(a.format(w)) == w);
}

TEST(Transducer, GrigorchukActionOnShortWords) {
  auto g = load_builtin("grigorchuk");
  const auto& a = *g.alphabet;
  EXPECT_EQ(a.format(growthlab::apply(g["a"], a.parse("111"))), a.format(a.parse("011")));
  EXPECT_EQ(a.format(growthlab::apply(g["b"], a.parse("011"))), a.format(a.parse("001")));
  EXPECT_EQ(a.format(growthlab::apply(g["b"], a.parse("101"))), a.format(a.parse("100")));
  EXPECT_EQ(a.format(growthlab::apply(g["d"], a.parse("0110"))), a.format(a.parse("0110")));
}

TEST(Transducer, LookaheadNeedsTheNextLetter) {
  auto g = load_builtin("golden_mean");
  const auto& a = *g.alphabet;
  EXPECT_THROW(growthlab::apply(g["a0"], a.parse("0")), AmbiguousWord);
  EXPECT_TRUE(determined_image(g["a0"], a.parse("0")).empty());
  EXPECT_EQ(a.format(growthlab::apply(g["a0"], a.parse("00"))), a.format(a.parse("10")));
  EXPECT_EQ(a.format(growthlab::apply(g["a0"], a.parse("01"))), a.format(a.parse("01")));
}

TEST(Transducer, DeterminedImageIsMonotone) {
  std::mt19937_64 rng(5);
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (const auto& gen : g.generators) {
      for (int trial = 0; trial < 40; ++trial) {
        Word w = random_valid(*g.alphabet, 24, rng);
        for (std::size_t cut = 0; cut <= w.size(); cut += 3) {
          Word p(w.begin(), w.begin() + cut);
          ASSERT_TRUE(is_prefix(determined_image(gen.machine, p), determined_image(gen.machine, w)))
              << name << " " << gen.symbol;
        }
        ASSERT_GE(determined_image(gen.machine, w).size() + 3, w.size());
      }
    }
  }
}

TEST(Transducer, ImagesAreValidAndLengthPreserving) {
  std::mt19937_64 rng(11);
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (const auto& gen : g.generators)
      for (int trial = 0; trial < 40; ++trial) {
        Word w = random_valid(*g.alphabet, 30, rng);
        Word y = determined_image(gen.machine, w);
        ASSERT_TRUE(g.alphabet->valid(y)) << name << " " << gen.symbol;
      }
  }
}

TEST(Transducer, JsonRoundTrip) {
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (const auto& gen : g.generators) {
      auto back = Transducer::from_json(gen.machine.to_json());
      EXPECT_EQ(back.to_json().dump(), gen.machine.to_json().dump());
      EXPECT_TRUE(minimize(back) == minimize(gen.machine));
    }
  }
}

TEST(Transducer, EveryGeneratorIsAnInvolution) {
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (const auto& gen : g.generators) {
      EXPECT_TRUE(GroupElement(compose(gen.machine, gen.machine)).is_identity()) << name << " " << gen.symbol;
      EXPECT_TRUE(minimize(invert(gen.machine)) == minimize(gen.machine)) << name << " " << gen.symbol;
    }
  }
}

TEST(Transducer, InverseUndoesRandomProducts) {
  std::mt19937_64 rng(3);
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> word(1 + rng() % 5);
      for (int& s : word) s = static_cast<int>(rng() % g.size());
      auto x = g.product(word);
      EXPECT_TRUE(compose(x, invert(x)).is_identity()) << name << " " << g.format_word(word);
    }
  }
}

TEST(Transducer, MinimalGrigorchukGenerators) {
  auto g = load_builtin("grigorchuk");
  EXPECT_EQ(minimize(g["a"]).state_count(), 2);
  EXPECT_EQ(minimize(g["b"]).state_count(), 5);
  EXPECT_EQ(minimize(g["c"]).state_count(), 5);
  EXPECT_EQ(minimize(g["d"]).state_count(), 5);
}
