#include "growthlab/schreier.hpp"

#include <deque>
#include <map>
#include <unordered_map>

#include "growthlab/errors.hpp"

namespace growthlab {

LabeledGraph schreier_graph(const GeneratorSet& gens, const Word& seed, std::size_t cap) {
  gens.alphabet->check(seed);
  std::vector<std::string> labels;
  for (const auto& g : gens.generators) labels.push_back(g.symbol);
  std::map<Word, int> index{{seed, 0}};
  std::vector<Word> order{seed};
  std::vector<std::vector<int>> nbr;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<int> row;
    for (const auto& g : gens.generators) {
      Word w = growthlab::apply(g.machine, order[i]);
      auto [it, fresh] = index.emplace(w, static_cast<int>(order.size()));
      if (fresh) {
        if (order.size() >= cap) throw ResourceLimit("orbit exceeds cap");
        order.push_back(w);
      }
      row.push_back(it->second);
    }
    nbr.push_back(std::move(row));
  }
  LabeledGraph g(labels, order.size());
  for (std::size_t v = 0; v < order.size(); ++v) {
    g.set_name(static_cast<int>(v), order[v].empty() ? "()" : gens.alphabet->format(order[v]));
    for (std::size_t s = 0; s < labels.size(); ++s)
      g.connect(static_cast<int>(v), nbr[v][s], static_cast<int>(s));
  }
  if (!g.is_consistent()) throw InvariantViolation("orbit graph is not symmetric");
  return g;
}

PeriodicPoint normalize(PeriodicPoint p) {
  const auto t = p.tail.size();
  if (t == 0) throw DomainError("periodic tail must be nonempty");
  if (p.prefix.size() % t != 0) throw DomainError("prefix length must be a multiple of the period");
  while (p.prefix.size() >= t &&
         std::equal(p.tail.begin(), p.tail.end(), p.prefix.end() - static_cast<long>(t)))
    p.prefix.resize(p.prefix.size() - t);
  return p;
}

PeriodicPoint act(const Transducer& t, const PeriodicPoint& point) {
  const auto p = point.tail.size();
  const auto u = point.prefix.size();
  if (p == 0 || u % p != 0) throw DomainError("prefix length must be a multiple of the period");
  auto input = [&](std::size_t i) { return i < u ? point.prefix[i] : point.tail[(i - u) % p]; };

  Runner r(t);
  for (std::size_t i = 0; i < u; ++i) r.feed(input(i));
  std::unordered_map<std::string, std::size_t> seen;  // key -> committed length
  constexpr std::size_t max_periods = 4096;
  for (std::size_t period = 0; period <= max_periods; ++period) {
    auto [it, fresh] = seen.emplace(r.key(), r.output().size());
    if (!fresh) {
      const std::size_t c1 = it->second, c2 = r.output().size();
      const Word& out = r.output();
      for (std::size_t i = c1; i < c2; ++i)
        if (out[i] != input(i))
          throw InvariantViolation("image of a periodic point changes its tail");
      PeriodicPoint res;
      res.tail = point.tail;
      res.prefix.assign(out.begin(), out.begin() + static_cast<long>(c1));
      std::size_t end = std::max(c1, u);
      end = (end + p - 1) / p * p;
      for (std::size_t i = c1; i < end; ++i) res.prefix.push_back(input(i));
      return normalize(std::move(res));
    }
    for (std::size_t i = 0; i < p; ++i) r.feed(point.tail[i]);
  }
  throw ResourceLimit("no period found while evaluating a periodic point");
}

namespace {

struct OrbitBfs {
  std::vector<PeriodicPoint> points;
  std::vector<std::vector<int>> nbr;  // filled for expanded vertices
};

OrbitBfs explore(const GeneratorSet& gens, const Word& tail, std::size_t max_vertices,
                 std::size_t expand_limit) {
  gens.alphabet->check(tail);
  Word twice = tail;
  twice.insert(twice.end(), tail.begin(), tail.end());
  gens.alphabet->check(twice);

  OrbitBfs bfs;
  std::map<Word, int> index;
  PeriodicPoint origin{{}, tail};
  bfs.points.push_back(origin);
  index.emplace(Word{}, 0);
  for (std::size_t i = 0; i < bfs.points.size() && i < expand_limit; ++i) {
    std::vector<int> row;
    for (const auto& g : gens.generators) {
      auto img = act(g.machine, bfs.points[i]);
      auto [it, fresh] = index.emplace(img.prefix, static_cast<int>(bfs.points.size()));
      if (fresh) {
        if (bfs.points.size() >= max_vertices) {
          index.erase(it);
          row.push_back(-1);
          continue;
        }
        bfs.points.push_back(std::move(img));
      }
      row.push_back(it->second);
    }
    bfs.nbr.push_back(std::move(row));
  }
  return bfs;
}

std::string point_name(const SubshiftAlphabet& alpha, const PeriodicPoint& p) {
  return p.prefix.empty() ? "xi" : alpha.format(p.prefix);
}

}  // namespace

LabeledGraph orbital_graph(const GeneratorSet& gens, const Word& tail, std::size_t max_vertices) {
  auto bfs = explore(gens, tail, max_vertices, max_vertices);
  std::vector<std::string> labels;
  for (const auto& g : gens.generators) labels.push_back(g.symbol);
  LabeledGraph g(labels, bfs.points.size());
  for (std::size_t v = 0; v < bfs.points.size(); ++v) {
    g.set_name(static_cast<int>(v), point_name(*gens.alphabet, bfs.points[v]));
    if (v >= bfs.nbr.size() ||
        std::find(bfs.nbr[v].begin(), bfs.nbr[v].end(), -1) != bfs.nbr[v].end())
      g.set_boundary(static_cast<int>(v));
  }
  for (std::size_t v = 0; v < bfs.nbr.size(); ++v)
    for (std::size_t s = 0; s < labels.size(); ++s)
      if (bfs.nbr[v][s] >= 0) g.connect(static_cast<int>(v), bfs.nbr[v][s], static_cast<int>(s));
  return g;
}

OrbitalRay orbital_ray(const GeneratorSet& gens, const Word& tail, int length) {
  if (length < 0) throw DomainError("ray length must be nonnegative");
  // A ray explored breadth-first has one new vertex per distance.
  auto bfs = explore(gens, tail, static_cast<std::size_t>(length) + 2,
                     static_cast<std::size_t>(length) + 1);
  if (bfs.points.size() < static_cast<std::size_t>(length) + 2)
    throw InvariantViolation("orbit is finite; it is not a ray");
  OrbitalRay ray;
  ray.chain.example = gens.name;
  ray.chain.name = "orbital_ray";
  for (const auto& g : gens.generators) ray.chain.labels.push_back(g.symbol);
  ray.chain.outer_left = 0;
  for (int v = 0; v <= length; ++v) {
    LabelMask forward = 0;
    for (std::size_t s = 0; s < gens.size(); ++s) {
      int u = bfs.nbr[v][s];
      if (u == v + 1)
        forward |= LabelMask(1u << s);
      else if (u != v && u != v - 1)
        throw InvariantViolation("orbital graph branches at vertex " + std::to_string(v));
      if (u == v - 1 && !(ray.chain.edges[v - 1] >> s & 1))
        throw InvariantViolation("edge labels are not symmetric at vertex " + std::to_string(v));
    }
    if (v > 0) {
      for (std::size_t s = 0; s < gens.size(); ++s)
        if ((ray.chain.edges[v - 1] >> s & 1) && bfs.nbr[v][s] != v - 1)
          throw InvariantViolation("edge labels are not symmetric at vertex " + std::to_string(v));
    }
    if (forward == 0) throw InvariantViolation("orbit ends at distance " + std::to_string(v));
    if (v < length)
      ray.chain.edges.push_back(forward);
    else
      ray.chain.outer_right = forward;
    ray.names.push_back(point_name(*gens.alphabet, bfs.points[v]));
  }
  return ray;
}

Word singular_tail(const std::string& example_name, int point) {
  auto example = canonical_example(example_name);
  auto gens = load_builtin(example);
  if (example == "golden_mean") {
    static const char* tails[3] = {"010", "001", "100"};
    if (point < 0 || point > 2) throw DomainError("golden_mean singular point must be 0, 1 or 2");
    return gens.alphabet->parse(tails[point]);
  }
  return gens.alphabet->parse("1");
}

SegmentCheck verify_segment_vs_schreier(const std::string& example_name, int n) {
  auto example = canonical_example(example_name);
  auto gens = load_builtin(example);
  SegmentCheck res;
  auto mismatch = [&](const std::string& what, const Segment& built, const Segment& seen) {
    res.ok = false;
    res.detail = what + " differs from the orbital ray: built " + built.code().substr(0, 80) +
                 " vs orbit " + seen.code().substr(0, 80);
    return res;
  };

  if (example == "golden_mean") {
    auto seg = build_segment(example, n);
    auto ray = orbital_ray(gens, singular_tail(example, n % 3), seg.length());
    if (!seg.same_chain(ray.chain)) return mismatch(seg.name, seg, ray.chain);
    res.ok = true;
    res.detail = seg.name + " is the beginning of the ray of xi_" + std::to_string(n % 3);
    return res;
  }
  if (example == "grigorchuk") {
    auto seg = build_segment(example, n);
    auto ray = orbital_ray(gens, singular_tail(example), seg.length());
    if (!seg.same_chain(ray.chain)) return mismatch(seg.name, seg, ray.chain);
    res.ok = true;
    res.detail = seg.name + " is the beginning of the ray of 1^inf";
    return res;
  }
  // simple_grig: J_{n+1} = J_n e_n I_n^{-1} begins the ray, which pins both J_n and I_n.
  auto j = build_j_segment(n);
  auto i = build_segment(example, n);
  auto ray = orbital_ray(gens, singular_tail(example), 2 * j.length() + 1);
  auto head = ray.chain.slice(0, j.length());
  if (!j.same_chain(head)) return mismatch(j.name, j, head);
  auto rest = ray.chain.slice(j.length() + 1, 2 * j.length() + 1).reversed();
  if (!i.same_chain(rest)) return mismatch(i.name, i, rest);
  res.ok = true;
  res.detail = j.name + " and " + i.name + " match the ray of 1^inf";
  return res;
}

}  // namespace growthlab
