#pragma once

#include <array>
#include <string>
#include <vector>

#include "growthlab/graph.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

// Chain with multi-edges: edges[i] is the label set joining vertex i to
// vertex i+1. Every other label is a loop, except at the two endpoints where
// the outside is unknown unless outer masks are given.
struct Segment {
  std::string example;
  std::string name;  // "I_n", "J_n", "ray", ...
  int level = 0;
  std::vector<std::string> labels;
  std::vector<LabelMask> edges;
  // Label sets leaving the chain at the left and right ends; a negative
  // value means unknown (truncated).
  int outer_left = -1;
  int outer_right = -1;

  int length() const { return static_cast<int>(edges.size()); }
  int vertex_count() const { return length() + 1; }
  LabelMask full_mask() const { return static_cast<LabelMask>((1u << labels.size()) - 1); }
  Segment reversed() const;
  Segment slice(int from, int to) const;  // vertices from..to
  // Label-for-label equality of the edge sequences.
  bool same_chain(const Segment& other) const { return edges == other.edges; }

  // Endpoints are flagged as boundary when their outside is unknown.
  LabeledGraph to_graph() const;
  Json to_json() const;
  static Segment from_json(const Json& j);
  // Canonical chain code: one character per loop set and edge set along the path.
  std::string code() const;
};

std::string mask_string(LabelMask m, const std::vector<std::string>& labels);

// The junction label set e_n of each recursion.
LabelMask junction_edge(const GeneratorSet& gens, int n);

// I_n for every example, and J_n for simple_grig.
Segment build_segment(const std::string& example, int n);
Segment build_j_segment(int n);

// Prefix of the orbital ray of the singular point, origin at vertex 0, with
// at least `length` edges and known loops at the far end. For golden_mean,
// point selects xi_0, xi_1 or xi_2.
Segment segment_ray(const std::string& example, int length, int point = 0);

// Four copies of a branch chain X glued at their origins by the Klein
// four-group {1, y, z, x}. Vertex (h, p) has id h * (m + 1) + p with
// h in {0:1, 1:b, 2:c, 3:d} and p the position along X.
struct GermGraph {
  std::string example;
  int level = 0;
  Segment branch;
  std::array<int, 4> germ_generator{};  // generator index of b, c, d (entry 0 unused)
  LabelMask junction = 0;               // label set {y, z} of the covered base
  int kernel = 0;                       // Klein code of the loop label x
  LabeledGraph graph;

  int m() const { return branch.length(); }
  int vertex(int copy, int p) const { return copy * (m() + 1) + p; }
  int copy_of(int v) const { return v / (m() + 1); }
  int position(int v) const { return v % (m() + 1); }
  int entrance() const { return vertex(0, m()); }
  int exit(int copy) const { return vertex(copy, m()); }

  // Base chain rev(X) {y,z} X and the covering map onto it.
  Segment base() const;
  int project(int v) const;
  // Preimage of a base vertex in the given copy; the copy must lie over the
  // half of the base containing the vertex.
  int lift(int base_vertex, int copy) const;
  // Quotient by the whole Klein group: X with all germ labels as loops at the origin.
  Segment quotient() const;
  int deck(int v, int k) const { return vertex(copy_of(v) ^ k, position(v)); }
};

GermGraph build_germ_graph(const std::string& example, int level);

}  // namespace growthlab
