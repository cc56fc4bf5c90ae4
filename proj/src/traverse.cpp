#include "growthlab/traverse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>

#include "growthlab/errors.hpp"

namespace growthlab {

Trajectory run_trajectory(const LabeledGraph& g, int v, const GenWord& w) {
  Trajectory tr;
  tr.word = w;
  tr.start = v;
  tr.visits.reserve(w.size() + 1);
  tr.visits.push_back(v);
  for (int s : w) {
    if (s < 0 || s >= static_cast<int>(g.label_count())) throw DomainError("generator index out of range");
    v = g.step(v, s);
    tr.visits.push_back(v);
  }
  // Distances from the start, ignoring unknown edges.
  std::vector<int> dist(g.size(), -1);
  std::deque<int> q{tr.start};
  dist[tr.start] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (dist[u] >= static_cast<int>(w.size())) continue;
    for (std::size_t s = 0; s < g.label_count(); ++s) {
      int x = g.nbr(u, static_cast<int>(s));
      if (x >= 0 && dist[x] < 0) {
        dist[x] = dist[u] + 1;
        q.push_back(x);
      }
    }
  }
  for (int x : tr.visits) tr.radius = std::max(tr.radius, dist[x]);
  return tr;
}

StepTable::StepTable(const LabeledGraph& g, int entrance, const std::vector<int>& exits)
    : k_(static_cast<int>(g.label_count())), entrance_(entrance), nbr_(g.table()) {
  if (exits.size() > 250) throw DomainError("too many exits");
  stop_.resize(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) stop_[v] = g.boundary(static_cast<int>(v)) ? 1 : 0;
  stop_[entrance] = 1;
  for (std::size_t e = 0; e < exits.size(); ++e) {
    stop_[exits[e]] = static_cast<std::uint8_t>(2 + e);
    exit_label_.push_back(static_cast<int>(e));
  }
}

StepTable StepTable::of_segment(const Segment& s) {
  if (s.length() < 1) throw DomainError("segment " + s.name + " has no interior to traverse");
  return StepTable(s.to_graph(), 0, {s.length()});
}

StepTable StepTable::of_germ(const GermGraph& g) {
  StepTable t(g.graph, g.entrance(), {g.exit(1), g.exit(2), g.exit(3)});
  t.exit_label_ = {1, 2, 3};
  return t;
}

int StepTable::walk(const int* word, std::size_t len, std::size_t i, std::size_t& j) const {
  int v = entrance_;
  const int* nbr = nbr_.data();
  const std::uint8_t* stop = stop_.data();
  for (std::size_t t = i; t < len; ++t) {
    v = nbr[v * k_ + word[t]];
    if (v < 0) return -1;
    if (const int st = stop[v]) {
      if (st < 2) return -1;
      j = t;
      return st - 2;
    }
  }
  return -1;
}

TraverseSet enumerate_traverses(const StepTable& t, const GenWord& w) {
  TraverseSet out;
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int e = t.walk(w.data(), w.size(), i, j);
    if (e >= 0) out.push_back(Traverse{static_cast<int>(i), static_cast<int>(j), t.exit_label(e)});
  }
  return out;
}

std::vector<std::uint32_t> count_traverses(const StepTable& t, const GenWord& w) {
  std::vector<std::uint32_t> counts(t.exit_count(), 0);
  std::size_t j = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int e = t.walk(w.data(), w.size(), i, j);
    if (e >= 0) ++counts[e];
  }
  return counts;
}

TraverseSet enumerate_traverses(const Trajectory& traj, int x, int y,
                                const std::vector<char>& interior) {
  TraverseSet out;
  const auto& vis = traj.visits;
  for (std::size_t t = 0; t + 1 < vis.size(); ++t) {
    if (vis[t] != x) continue;
    for (std::size_t u = t + 1; u < vis.size(); ++u) {
      if (vis[u] == y) {
        out.push_back(Traverse{static_cast<int>(t), static_cast<int>(u - 1), 0});
        break;
      }
      if (!interior[vis[u]]) break;
    }
  }
  return out;
}

std::vector<TraverseSet> enumerate_germ_traverses(const GermGraph& g, const StepTable& t,
                                                  const GenWord& w) {
  (void)g;
  std::vector<TraverseSet> by_exit(4);
  for (const auto& tr : enumerate_traverses(t, w)) by_exit[tr.exit].push_back(tr);
  return by_exit;
}

Traverse restrict_traverse(const StepTable& host, const Traverse& t, const GenWord& w, int x_sub,
                           int y_sub) {
  std::vector<int> pos;
  pos.reserve(t.j - t.i + 2);
  int v = host.entrance();
  pos.push_back(v);
  for (int s = t.i; s <= t.j; ++s) {
    v = host.next(v, w[s]);
    if (v < 0) throw Unsatisfiable("walk leaves the host segment");
    pos.push_back(v);
  }
  // pos[u] is the vertex after letter t.i + u - 1.
  int a = -1;
  for (int u = static_cast<int>(pos.size()) - 1; u >= 0; --u)
    if (pos[u] == x_sub) {
      a = u;
      break;
    }
  if (a < 0) throw Unsatisfiable("traverse never visits the sub-segment entrance");
  for (int u = a + 1; u < static_cast<int>(pos.size()); ++u)
    if (pos[u] == y_sub) return Traverse{t.i + a, t.i + u - 1, 0};
  throw Unsatisfiable("traverse does not reach the sub-segment exit after its entrance");
}

void check_separation(const Segment& host, int x_sub, int y_sub) {
  if (!(0 <= x_sub && x_sub < y_sub && y_sub <= host.length()))
    throw Unsatisfiable("sub-segment [" + std::to_string(x_sub) + ", " + std::to_string(y_sub) +
                        "] does not separate the ends of " + host.name);
}

Traverse lift_traverse(const GermGraph& g, const StepTable& germ, const Traverse& base_traverse,
                       const GenWord& w) {
  int v = germ.entrance();
  for (int s = base_traverse.i; s <= base_traverse.j; ++s) {
    v = germ.next(v, w[s]);
    const bool last = s == base_traverse.j;
    if (v < 0) throw InvariantViolation("lift leaves the germ graph");
    const int st = germ.stop(v);
    if (!last && st != 0) throw InvariantViolation("lift hits the boundary early");
    if (last && st < 2) throw InvariantViolation("lift does not end at an exit");
  }
  if (g.project(v) != g.base().length()) throw InvariantViolation("lift does not project to the exit");
  return Traverse{base_traverse.i, base_traverse.j, g.copy_of(v)};
}

std::vector<int> find_occurrences(const Segment& host, const Segment& pattern, bool reversed) {
  std::vector<LabelMask> p = pattern.edges;
  if (reversed) std::reverse(p.begin(), p.end());
  std::vector<int> out;
  if (p.empty() || p.size() > host.edges.size()) return out;
  auto it = host.edges.begin();
  while (true) {
    it = std::search(it, host.edges.end(), p.begin(), p.end());
    if (it == host.edges.end()) break;
    out.push_back(static_cast<int>(it - host.edges.begin()));
    ++it;
  }
  return out;
}

std::vector<CentredCopy> centred_copies(const GermGraph& big, const GermGraph& small) {
  std::vector<CentredCopy> out;
  if (big.germ_generator != small.germ_generator) return out;
  LabelMask germ = 0;
  for (int h = 1; h < 4; ++h) germ |= LabelMask(1u << big.germ_generator[h]);
  const auto& b = big.branch.edges;
  const auto& x = small.branch.edges;
  const int big_m = static_cast<int>(b.size());
  const int m = static_cast<int>(x.size());
  for (int c = m; c + 1 + m <= big_m; ++c) {
    if (std::popcount(static_cast<unsigned>(b[c])) != 2 || (b[c] & ~germ)) continue;
    bool ok = true;
    for (int j = 0; j < m && ok; ++j) ok = b[c + 1 + j] == x[j] && b[c - 1 - j] == x[j];
    if (!ok) continue;
    CentredCopy cc;
    cc.junction = c;
    cc.labels = b[c];
    cc.x_sub = big.vertex(0, c + 1 + m);
    cc.y_sub = big.vertex(0, c - m);
    for (int h = 1; h < 4; ++h)
      if (b[c] >> small.germ_generator[h] & 1) cc.exits.push_back(h);
    out.push_back(std::move(cc));
  }
  return out;
}

double TraverseGF::operator()(double t) const {
  double sum = 0, p = 1;
  for (auto c : coefficients) {
    sum += static_cast<double>(c) * p;
    p *= t;
  }
  return sum;
}

int TraverseGF::degree() const {
  for (int n = static_cast<int>(coefficients.size()) - 1; n >= 0; --n)
    if (coefficients[n]) return n;
  return -1;
}

TraverseGF traverse_gf(const GenWord& w, const std::string& example, int n_max) {
  TraverseGF gf;
  gf.example = canonical_example(example);
  gf.coefficients.assign(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    auto seg = build_segment(gf.example, n);
    if (seg.length() < 1) continue;
    auto counts = count_traverses(StepTable::of_segment(seg), w);
    gf.coefficients[n] = counts[0];
  }
  return gf;
}

}  // namespace growthlab
