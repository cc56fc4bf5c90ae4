#pragma once

#include <string>
#include <vector>

#include "growthlab/graph.hpp"
#include "growthlab/group.hpp"
#include "growthlab/segments.hpp"

namespace growthlab {

// Orbit of seed under the action on words of length |seed|. Needs every
// generator to act without lookahead on such words (AmbiguousWord otherwise).
LabeledGraph schreier_graph(const GeneratorSet& gens, const Word& seed, std::size_t cap = 1u << 20);

// The infinite word prefix . tail^inf, with |prefix| a multiple of |tail| and
// no trailing copy of tail in prefix.
struct PeriodicPoint {
  Word prefix;
  Word tail;
  bool operator==(const PeriodicPoint&) const = default;
};

PeriodicPoint normalize(PeriodicPoint p);
PeriodicPoint act(const Transducer& t, const PeriodicPoint& p);

// Breadth-first piece of the orbital graph of tail^inf with up to
// max_vertices vertices; unexplored vertices are flagged as boundary.
LabeledGraph orbital_graph(const GeneratorSet& gens, const Word& tail, std::size_t max_vertices);

// First `length` edges of the orbital graph of tail^inf as a chain starting at
// the fixed point. Throws InvariantViolation if the graph is not a ray there.
struct OrbitalRay {
  Segment chain;
  std::vector<std::string> names;  // "xi" for the origin, else the prefix
};
OrbitalRay orbital_ray(const GeneratorSet& gens, const Word& tail, int length);

// Periodic tail of the singular point used for each example's ray.
Word singular_tail(const std::string& example, int point = 0);

struct SegmentCheck {
  bool ok = false;
  std::string detail;
};

// Compares the recursively built segment(s) of level n with the brute-force
// orbital ray: Grigorchuk I_n, simple_grig J_n and I_n, golden I_n on the ray
// of xi_{n mod 3}.
SegmentCheck verify_segment_vs_schreier(const std::string& example, int n);

}  // namespace growthlab
