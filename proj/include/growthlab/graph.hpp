#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthlab/transducer.hpp"

namespace growthlab {

using LabelMask = std::uint16_t;

// Edge-labelled graph in which every generator is an involution: nbr(v, s)
// is the s-neighbour of v, or -1 where the truncated graph does not know it.
// Loops are stored explicitly.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(std::vector<std::string> labels, std::size_t vertices);

  std::size_t size() const { return names_.size(); }
  std::size_t label_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name(int v) const { return names_[v]; }
  void set_name(int v, std::string n) { names_[v] = std::move(n); }

  int nbr(int v, int s) const { return nbr_[v * labels_.size() + s]; }
  const std::vector<int>& table() const { return nbr_; }
  // Sets both directions; s must be an involution label.
  void connect(int u, int v, int s);
  bool boundary(int v) const { return boundary_[v]; }
  void set_boundary(int v, bool b = true) { boundary_[v] = b; }
  const std::vector<char>& boundary_flags() const { return boundary_; }

  // Neighbour along s; throws TruncationBoundary where unknown.
  int step(int v, int s) const;
  LabelMask loops(int v) const;

  // Checks that every known s-edge is reciprocated and, unless v is a
  // boundary vertex, that every label is defined.
  bool is_consistent() const;

  std::string to_dot(const std::string& title = "G") const;
  Json to_json() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::string> names_;
  std::vector<int> nbr_;
  std::vector<char> boundary_;
};

// Breadth-first distances from v up to radius R; vertices beyond R get -1.
// Throws TruncationBoundary if a boundary vertex lies strictly inside the ball.
std::vector<int> distances(const LabeledGraph& g, int v, int radius);

// Induced rooted subgraph on the R-ball around v; vertex 0 is the root.
struct RootedBall {
  LabeledGraph graph;
  std::vector<int> host;  // host vertex of each ball vertex
  int radius = 0;
};
RootedBall ball(const LabeledGraph& g, int v, int radius);

}  // namespace growthlab
