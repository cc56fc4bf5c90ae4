#include "growthlab/portrait.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <unordered_map>

#include "growthlab/errors.hpp"

namespace growthlab {

PortraitHost portrait_host(const std::string& example, int max_word_length) {
  if (max_word_length < 0) throw DomainError("negative word length");
  // Linear repetitivity puts every ball class of radius r within a few
  // multiples of r from the origin.
  const int length = std::max(1024, 16 * max_word_length);
  Segment ray = segment_ray(example, length);
  LabeledGraph g = ray.to_graph();
  ChainCode code(ray);
  return PortraitHost{canonical_example(example), std::move(ray), std::move(g), std::move(code), max_word_length};
}

Portrait standard_portrait(const PortraitHost& host, const GenWord& w) {
  if (static_cast<int>(w.size()) > host.max_word_length)
    throw DomainError("word longer than the host was sized for");
  const int k = static_cast<int>(host.graph.label_count());
  for (int s : w)
    if (s < 0 || s >= k) throw DomainError("generator index out of range");
  const int last = host.code.length() - static_cast<int>(w.size());
  const auto& nbr = host.graph.table();

  std::unordered_map<ChainCode::Key, int, ChainCode::KeyHash> classes;
  std::unordered_map<ChainCode::Key, int, ChainCode::KeyHash> second_of;
  Portrait out;
  for (int v = 0; v <= last; ++v) {
    int u = v, radius = 0;
    for (int s : w) {
      u = nbr[u * k + s];
      radius = std::max(radius, std::abs(u - v));
    }
    auto key = host.code.key(v, radius, u - v);
    ++out.centres;
    if (classes.emplace(key, radius).second) {
      auto plain = host.code.key(v, radius, 0);
      // Reflection may flip the sign; compare in the orientation of the key.
      auto [it, fresh] = second_of.emplace(ChainCode::Key{plain.code, plain.root, 0}, key.second);
      if (!fresh && it->second != key.second) out.consistent = false;
      PortraitElement e;
      e.code.assign(key.code.begin(), key.code.end());
      e.root = key.root;
      e.second = key.second;
      e.radius = radius;
      e.ball_vertices = host.code.ball_size(v, radius);
      out.elements.push_back(std::move(e));
    }
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const auto& a, const auto& b) {
    return std::tie(a.code, a.root, a.second) < std::tie(b.code, b.root, b.second);
  });
  return out;
}

NpValue n_p(const Portrait& portrait, double p) {
  if (!(p >= 1)) throw DomainError("p must be at least 1");
  double sum = 0;
  for (const auto& e : portrait.elements) sum += std::pow(static_cast<double>(e.ball_vertices), p - 1);
  return NpValue{p, std::pow(sum, 1.0 / p)};
}

std::vector<GenWord> all_words(int generators, int max_length) {
  if (generators < 1 || max_length < 0) throw DomainError("bad word enumeration parameters");
  std::vector<GenWord> out{GenWord{}};
  std::size_t from = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t to = out.size();
    for (std::size_t i = from; i < to; ++i)
      for (int s = 0; s < generators; ++s) {
        GenWord w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    from = to;
  }
  return out;
}

GrowthBound growth_bound_eval(const PortraitHost& host, int radius, const std::vector<GenWord>& sample,
                              double p) {
  if (radius < 0) throw DomainError("negative radius");
  GrowthBound b;
  b.radius = radius;
  b.p = p;
  b.delta = count_ball_classes(host.code, radius).classes;
  b.graph_growth = static_cast<std::size_t>(2 * radius + 1);
  for (const auto& w : sample) {
    if (static_cast<int>(w.size()) > radius) continue;
    auto portrait = standard_portrait(host, w);
    if (!portrait.consistent) throw InvariantViolation("standard portrait is not consistent");
    b.portrait_max = std::max(b.portrait_max, portrait.size());
    b.np_max = std::max(b.np_max, n_p(portrait, p).value);
  }
  b.log_bound = static_cast<double>(b.portrait_max) *
                std::log(static_cast<double>(b.delta) * static_cast<double>(b.graph_growth));
  return b;
}

P1P2Report check_p1p2(const std::vector<Portrait>& sample, double p1, double p2, double c1) {
  if (!(1 <= p1 && p1 < p2)) throw DomainError("need 1 <= p1 < p2");
  if (sample.empty()) throw DomainError("empty sample");
  P1P2Report r;
  r.p1 = p1;
  r.p2 = p2;
  r.c1 = c1;
  for (const auto& portrait : sample)
    r.max_ratio = std::max(r.max_ratio, n_p(portrait, p1).value / n_p(portrait, p2).value);
  r.closed_form = std::pow(c1, 1 / p1 - 1 / p2) * std::pow(p2 - p1, 1 / p1 + 1 / p2) /
                  (std::pow(p1, 1 / p2) * std::pow(p2, 1 / p1));
  return r;
}

}  // namespace growthlab
