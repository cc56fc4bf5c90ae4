#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "growthlab/canonical.hpp"
#include "growthlab/transducer.hpp"

namespace growthlab {

class GroupElement {
 public:
  explicit GroupElement(Transducer machine, std::string word = {});

  const Transducer& machine() const { return machine_; }
  const CanonicalForm& canonical() const { return canonical_; }
  const std::string& word() const { return word_; }
  bool is_identity() const { return canonical_.is_identity(); }
  bool operator==(const GroupElement& o) const { return canonical_ == o.canonical_; }

 private:
  Transducer machine_;
  CanonicalForm canonical_;
  std::string word_;
};

// Acts as x then y (right action).
GroupElement compose(const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupElement& x);
GroupElement identity_element(const Transducer::AlphabetPtr& alphabet);

struct Generator {
  std::string symbol;
  Transducer machine;
};

struct GeneratorSet {
  std::string name;
  Transducer::AlphabetPtr alphabet;
  std::vector<Generator> generators;
  bool symmetric = false;

  std::size_t size() const { return generators.size(); }
  int index(std::string_view symbol) const;  // throws NotFound
  const Transducer& operator[](std::string_view symbol) const {
    return generators[index(symbol)].machine;
  }
  GroupElement element(std::string_view symbol) const;
  // Product of a word in the generators; symbols separated by spaces, or
  // juxtaposed when every symbol is a single character.
  GroupElement product(const std::vector<int>& word) const;
  std::vector<int> parse_word(std::string_view text) const;
  std::string format_word(const std::vector<int>& word) const;
};

const std::vector<std::string>& builtin_names();
// Accepts the ids grigorchuk, golden_mean, simple_grig and the alias golden.
std::string canonical_example(std::string_view name);  // throws UnknownExample
GeneratorSet load_builtin(std::string_view name);
GeneratorSet generators_from_json(const Json& j);
Json generators_to_json(const GeneratorSet& g);

enum class Oracle { Minimize, Action };

// gamma(r) for r = 0..R; cap bounds the number of stored elements.
std::vector<std::uint64_t> cayley_ball(const GeneratorSet& gens, int radius, Oracle oracle,
                                       std::size_t cap = 200000, int depth = 12);

struct DualOracleReport {
  std::vector<std::uint64_t> by_minimize;
  std::vector<std::uint64_t> by_action;
  std::uint64_t products_checked = 0;
  std::uint64_t disagreements = 0;
  std::string witness;  // first disagreeing pair, if any
  bool agree() const { return disagreements == 0 && by_minimize == by_action; }
};

// Breadth-first search that tracks both equality keys for every product of
// length <= radius and checks they induce the same partition.
DualOracleReport dual_oracle_check(const GeneratorSet& gens, int radius,
                                   std::size_t cap = 200000, int depth = 12);

}  // namespace growthlab
