#pragma once

#include <string>
#include <vector>

#include "growthlab/transducer.hpp"

namespace growthlab {

// Minimal deterministic sequential machine computing the determined-output
// map of a transducer. States are numbered in BFS order from the initial
// state with letters in alphabet order, so two transducers with the same
// action on the subshift produce identical tables and keys.
struct CanonicalForm {
  struct Edge {
    int target = -1;  // -1: letter not readable here
    Word out;
  };
  std::size_t alphabet_size = 0;
  std::vector<std::vector<Edge>> table;
  std::string key;

  int state_count() const { return static_cast<int>(table.size()); }
  // Every readable letter is copied; on a proper subshift the identity keeps
  // one state per distinct set of readable letters.
  bool is_identity() const;
  bool operator==(const CanonicalForm& other) const { return key == other.key; }
};

CanonicalForm minimize(const Transducer& t, std::size_t cap = 1u << 20);

// Concatenated determined outputs of every valid word of length <= depth,
// in depth-first lexicographic order. Equal keys mean equal actions on all
// such words.
std::string action_key(const Transducer& t, int depth = 12);

}  // namespace growthlab
