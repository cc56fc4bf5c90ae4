#include "growthlab/random_words.hpp"

#include <random>

#include "growthlab/errors.hpp"

namespace growthlab {

std::uint64_t word_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

GenWord random_word(std::size_t length, int generators, std::uint64_t seed) {
  if (generators < 1) throw DomainError("need at least one generator");
  std::mt19937_64 rng(seed);
  // mt19937_64 output is specified; uniform_int_distribution is not portable
  // across standard libraries, so reduce by rejection ourselves.
  const std::uint64_t k = static_cast<std::uint64_t>(generators);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % k;
  GenWord w(length);
  for (auto& s : w) {
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    s = static_cast<int>(r % k);
  }
  return w;
}

std::vector<GenWord> random_words(std::size_t count, std::size_t length, int generators,
                                  std::uint64_t seed) {
  std::vector<GenWord> out(count);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < count; ++i) out[i] = random_word(length, generators, word_seed(seed, i));
  return out;
}

}  // namespace growthlab
