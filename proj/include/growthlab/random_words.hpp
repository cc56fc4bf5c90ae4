#pragma once

#include <cstdint>
#include <vector>

#include "growthlab/traverse.hpp"

namespace growthlab {

// Seed of word `index` in a batch; words are independent of batch size and
// of the thread that draws them.
std::uint64_t word_seed(std::uint64_t seed, std::uint64_t index);

// Uniform i.i.d. generator indices in [0, generators).
GenWord random_word(std::size_t length, int generators, std::uint64_t seed);
std::vector<GenWord> random_words(std::size_t count, std::size_t length, int generators,
                                  std::uint64_t seed);

}  // namespace growthlab
