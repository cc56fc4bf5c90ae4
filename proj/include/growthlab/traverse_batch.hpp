#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "growthlab/traverse.hpp"
#include "growthlab/transducer.hpp"

namespace growthlab {

// Everything needed to analyse words for one example: segment tables I_n,
// germ graphs with their base segments, and the restriction links between
// germ levels.
struct TraverseContext {
  struct Link {
    int big = 0;
    int small = 0;
    CentredCopy copy;
  };

  std::string example;
  int generators = 0;
  int max_segment = 0;
  int min_germ = 0;
  int max_germ = 0;
  std::vector<std::optional<StepTable>> segment;  // by level; empty when |I_n| = 0
  std::vector<std::optional<GermGraph>> germ;
  std::vector<std::optional<StepTable>> germ_table;
  std::vector<std::optional<StepTable>> base_table;
  std::vector<Link> links;

  // Trajectory convention: one walk from the origin of the singular ray and
  // a fixed copy [x, y] of each I_n in it. Empty unless a ray length is given.
  struct RayCopy {
    int x = 0;
    int y = 0;
    std::vector<char> interior;
  };
  std::optional<LabeledGraph> ray;
  std::vector<std::optional<RayCopy>> ray_copy;
};

// Links join a germ level N to each lower level n with 1 <= N - n <= max_gap,
// through the centred copy nearest the middle of the branch.
TraverseContext make_context(const std::string& example, int max_segment, int max_germ,
                             int max_gap = 6, int ray_length = 0);
int min_germ_level(const std::string& example);

// Per-level counts for one word, serial.
struct WordCounts {
  std::vector<std::uint32_t> segment;             // #Theta_n
  std::vector<std::array<std::uint32_t, 4>> germ;  // T~_{n,h}, h = 1..3
  bool operator==(const WordCounts&) const = default;
};
WordCounts count_word(const TraverseContext& ctx, const GenWord& w);

// Counts for a batch; the parallel version splits words across threads and
// must agree exactly with the serial one.
std::vector<WordCounts> count_batch_serial(const TraverseContext& ctx, const std::vector<GenWord>& words);
std::vector<WordCounts> count_batch_parallel(const TraverseContext& ctx, const std::vector<GenWord>& words);

struct Violation {
  std::size_t word = 0;
  std::string property;
  std::string detail;
};

// Checks every traverse property on one word; violations are appended.
struct WordCheck {
  WordCounts counts;
  std::uint64_t lifted = 0;       // base traverses lifted
  std::uint64_t restricted = 0;   // germ traverses restricted through links
  std::uint64_t chain_checks = 0;
  std::uint64_t overlapping_pairs = 0;  // consecutive traverses of one I_n that share letters
  std::uint64_t ray_traverses = 0;
  std::uint64_t ray_overlaps = 0;
  std::vector<Violation> violations;
};
WordCheck check_word(const TraverseContext& ctx, const GenWord& w, std::size_t word_index = 0);

struct BatchReport {
  std::string example;
  std::size_t words = 0;
  std::size_t length = 0;
  std::uint64_t seed = 0;
  std::vector<double> mean_segment;  // mean #Theta_n by level
  std::uint64_t lifted = 0;
  std::uint64_t restricted = 0;
  std::uint64_t chain_checks = 0;
  std::uint64_t cover = 0;           // violation counts per property
  std::uint64_t restrict = 0;
  std::uint64_t injective = 0;
  std::uint64_t chain = 0;
  std::uint64_t monotone = 0;
  std::uint64_t disjoint = 0;        // words with at least one overlapping pair
  std::uint64_t overlapping_pairs = 0;
  std::uint64_t ray_traverses = 0;   // trajectory convention
  std::uint64_t ray_overlaps = 0;
  std::vector<Violation> witnesses;  // first few of each property
  std::vector<WordCounts> counts;    // per word, not serialized
  Json to_json() const;
};
BatchReport check_batch(const TraverseContext& ctx, std::size_t words, std::size_t length,
                        std::uint64_t seed);
// Context sized for words of the given length, with levels n <= max_small
// on the chain side.
TraverseContext default_context(const std::string& example, std::size_t word_length, int max_small = 8);

// Least-squares slope of log(mean) against n, exponentiated. Levels with a
// zero mean are skipped.
struct DecayFit {
  double rate = 0;
  std::vector<int> levels;
  std::vector<double> means;
};
DecayFit fit_decay(const std::vector<double>& mean_by_level, int lo, int hi);

// Smallest C(t) with F_w(t) <= |w| C(t) / D(t) on every sampled word, where
// D is the example's decay denominator.
struct CorrectionFit {
  std::vector<double> t;
  std::vector<double> c;
};
CorrectionFit fit_correction(const TraverseContext& ctx, const std::vector<WordCounts>& counts,
                             std::size_t length, const std::vector<double>& ts);
double traverse_gf_value(const WordCounts& counts, double t);

}  // namespace growthlab
