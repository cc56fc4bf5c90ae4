#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "growthlab/complexity.hpp"
#include "growthlab/graph.hpp"
#include "growthlab/traverse.hpp"

namespace growthlab {

// The singular-point ray of an example, long enough for portraits of words
// up to max_word_length.
struct PortraitHost {
  std::string example;
  Segment ray;
  LabeledGraph graph;
  ChainCode code;
  int max_word_length = 0;
};
PortraitHost portrait_host(const std::string& example, int max_word_length);

// One bi-rooted ball class (B_v(R_w(v)), v, v.w).
struct PortraitElement {
  std::u16string code;
  int root = 0;
  int second = 0;  // position of v.w relative to v, after canonical reflection
  int radius = 0;
  int ball_vertices = 0;
};

struct Portrait {
  std::vector<PortraitElement> elements;  // sorted by (code, root, second)
  std::size_t centres = 0;                // vertices of the host that were scanned
  // Condition 2 of a portrait: equal rooted balls always carry the same
  // second root.
  bool consistent = true;
  std::size_t size() const { return elements.size(); }
};
// Standard portrait over every centre whose ball fits in the host.
Portrait standard_portrait(const PortraitHost& host, const GenWord& w);

struct NpValue {
  double p = 1;
  double value = 0;
};
NpValue n_p(const Portrait& portrait, double p);

// All words of length <= max_length over k generators, shortest first.
std::vector<GenWord> all_words(int generators, int max_length);

struct GrowthBound {
  int radius = 0;
  std::size_t delta = 0;        // rooted ball classes of radius R
  std::size_t graph_growth = 0; // largest R-ball, 2R + 1 on a chain
  std::size_t portrait_max = 0; // L(R): largest portrait over the sample
  double log_bound = 0;         // L log(delta * gamma)
  double np_max = 0;            // largest N_p(w) over the sample
  double p = 0;
};
// Sample words longer than R are ignored.
GrowthBound growth_bound_eval(const PortraitHost& host, int radius, const std::vector<GenWord>& sample,
                              double p = 2);

struct P1P2Report {
  double p1 = 0;
  double p2 = 0;
  double max_ratio = 0;    // max N_p1(w) / N_p2(w) over the sample
  double closed_form = 0;  // C1^(1/p1-1/p2) (p2-p1)^(1/p1+1/p2) / (p1^(1/p2) p2^(1/p1))
  double c1 = 0;
};
P1P2Report check_p1p2(const std::vector<Portrait>& sample, double p1, double p2, double c1);

}  // namespace growthlab
