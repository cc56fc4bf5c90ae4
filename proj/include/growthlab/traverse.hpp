#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthlab/graph.hpp"
#include "growthlab/segments.hpp"

namespace growthlab {

// A word in the generators, as generator indices.
using GenWord = std::vector<int>;

struct Trajectory {
  GenWord word;
  int start = 0;
  std::vector<int> visits;  // visits[t] = start . s_0 ... s_{t-1}
  int radius = 0;           // max distance of a visit from start
};

Trajectory run_trajectory(const LabeledGraph& g, int v, const GenWord& w);

// Letters i..j (0-based, inclusive) carry the entrance to an exit. For germ
// graphs `exit` is the copy index of the exit branch, otherwise 0.
struct Traverse {
  int i = 0;
  int j = 0;
  int exit = 0;
  bool operator==(const Traverse&) const = default;
  auto operator<=>(const Traverse&) const = default;
};
using TraverseSet = std::vector<Traverse>;

// Flat walking table of a segment or germ graph: a walk started at the
// entrance stops at the first boundary vertex or unknown edge.
class StepTable {
 public:
  StepTable(const LabeledGraph& g, int entrance, const std::vector<int>& exits);
  static StepTable of_segment(const Segment& s);
  static StepTable of_germ(const GermGraph& g);

  int entrance() const { return entrance_; }
  int labels() const { return k_; }
  int vertices() const { return static_cast<int>(stop_.size()); }
  int next(int v, int s) const { return nbr_[v * k_ + s]; }
  // 0 interior, 1 boundary that is not an exit, 2 + e for exit number e.
  int stop(int v) const { return stop_[v]; }
  int exit_count() const { return static_cast<int>(exit_label_.size()); }
  int exit_label(int e) const { return exit_label_[e]; }

  // Walks word[i..]; returns the exit number reached and sets j, or -1.
  int walk(const int* word, std::size_t len, std::size_t i, std::size_t& j) const;

 private:
  int k_;
  int entrance_;
  std::vector<int> nbr_;
  std::vector<std::uint8_t> stop_;
  std::vector<int> exit_label_;
};

// Word-intrinsic traverses: every interval whose walk from the entrance stays
// interior and ends at an exit. Exit labels are copy indices for germ tables.
TraverseSet enumerate_traverses(const StepTable& t, const GenWord& w);
// Per-exit counts without storing intervals.
std::vector<std::uint32_t> count_traverses(const StepTable& t, const GenWord& w);

// Traverses along one trajectory: maximal intervals whose visits go from x
// through interior vertices to y.
TraverseSet enumerate_traverses(const Trajectory& traj, int x, int y,
                                const std::vector<char>& interior);

// For germ graphs: traverses grouped by exit copy (1: b, 2: c, 3: d).
std::vector<TraverseSet> enumerate_germ_traverses(const GermGraph& g, const StepTable& t,
                                                  const GenWord& w);

// Last traverse of the sub-segment from x_sub to y_sub inside t, following
// the walk of t in `host`. Throws Unsatisfiable when the walk does not cross
// the sub-segment.
Traverse restrict_traverse(const StepTable& host, const Traverse& t, const GenWord& w, int x_sub,
                           int y_sub);
// Checks the separation condition for a sub-segment [x_sub, y_sub] of a
// chain traversed from vertex 0 to its last vertex.
void check_separation(const Segment& host, int x_sub, int y_sub);

// Unique lift of a traverse of the germ base to the germ graph; the exit
// field of the result is the exit copy.
Traverse lift_traverse(const GermGraph& g, const StepTable& germ, const Traverse& base_traverse,
                       const GenWord& w);

// Occurrences of a chain inside another with matching edge labels.
std::vector<int> find_occurrences(const Segment& host, const Segment& pattern, bool reversed);

// Junction-centred copies of the base of `small` inside the branch of `big`:
// positions c of branch edges such that branch[c+1+j] and branch[c-1-j]
// both equal small.branch[j] and branch[c] is a pair of germ labels.
struct CentredCopy {
  int junction = 0;      // branch edge index c
  LabelMask labels = 0;  // label pair on that edge
  int x_sub = 0;         // vertex of copy 1 on the entrance side
  int y_sub = 0;         // vertex of copy 1 on the origin side
  std::vector<int> exits;  // copies h with label in `labels`
};
std::vector<CentredCopy> centred_copies(const GermGraph& big, const GermGraph& small);

// Coefficients of F_w(t) for levels 0..n_max (coefficient n counts the
// traverses of I_n).
struct TraverseGF {
  std::string example;
  std::vector<std::uint64_t> coefficients;
  double operator()(double t) const;
  int degree() const;
};
TraverseGF traverse_gf(const GenWord& w, const std::string& example, int n_max);

}  // namespace growthlab
