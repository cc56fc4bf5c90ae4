#include "growthlab/segments.hpp"

#include <algorithm>
#include <cstdio>

#include "growthlab/errors.hpp"

namespace growthlab {

Segment Segment::reversed() const {
  Segment r = *this;
  std::reverse(r.edges.begin(), r.edges.end());
  std::swap(r.outer_left, r.outer_right);
  return r;
}

Segment Segment::slice(int from, int to) const {
  if (from < 0 || to > length() || from > to) throw DomainError("slice out of range");
  Segment s = *this;
  s.edges.assign(edges.begin() + from, edges.begin() + to);
  s.outer_left = from > 0 ? edges[from - 1] : outer_left;
  s.outer_right = to < length() ? edges[to] : outer_right;
  return s;
}

LabeledGraph Segment::to_graph() const {
  LabeledGraph g(labels, vertex_count());
  const int k = static_cast<int>(labels.size());
  for (int i = 0; i < length(); ++i)
    for (int s = 0; s < k; ++s)
      if (edges[i] >> s & 1) g.connect(i, i + 1, s);
  for (int v = 0; v < vertex_count(); ++v) {
    int left = v > 0 ? edges[v - 1] : outer_left;
    int right = v < length() ? edges[v] : outer_right;
    if (left < 0 || right < 0) {
      g.set_boundary(v);
      continue;
    }
    if ((v == 0 && left > 0) || (v == length() && right > 0)) g.set_boundary(v);
    for (int s = 0; s < k; ++s)
      if (!((left | right) >> s & 1)) g.connect(v, v, s);
  }
  return g;
}

std::string mask_string(LabelMask m, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (m >> s & 1) {
      if (out.size() > 1) out += ",";
      out += labels[s];
    }
  return out + "}";
}

Json Segment::to_json() const {
  Json j;
  j["example"] = example;
  j["name"] = name;
  j["level"] = level;
  j["length"] = length();
  j["labels"] = labels;
  j["outer_left"] = outer_left;
  j["outer_right"] = outer_right;
  Json verts = Json::array();
  auto g = to_graph();
  for (int v = 0; v < vertex_count(); ++v) {
    Json loops = Json::array();
    for (std::size_t s = 0; s < labels.size(); ++s)
      if (g.nbr(v, static_cast<int>(s)) == v) loops.push_back(labels[s]);
    verts.push_back({{"id", v}, {"boundary", static_cast<bool>(g.boundary(v))}, {"loops", loops}});
  }
  j["vertices"] = verts;
  Json es = Json::array();
  for (int i = 0; i < length(); ++i) {
    Json ls = Json::array();
    for (std::size_t s = 0; s < labels.size(); ++s)
      if (edges[i] >> s & 1) ls.push_back(labels[s]);
    es.push_back({{"from", i}, {"to", i + 1}, {"labels", ls}});
  }
  j["edges"] = es;
  return j;
}

Segment Segment::from_json(const Json& j) {
  Segment s;
  try {
    s.example = j.at("example").get<std::string>();
    s.name = j.at("name").get<std::string>();
    s.level = j.at("level").get<int>();
    s.labels = j.at("labels").get<std::vector<std::string>>();
    s.outer_left = j.value("outer_left", -1);
    s.outer_right = j.value("outer_right", -1);
    if (s.labels.empty() || s.labels.size() > 16) throw DomainError("segment needs 1 to 16 labels");
    for (const auto& e : j.at("edges")) {
      if (e.at("from").get<int>() != s.length() || e.at("to").get<int>() != s.length() + 1)
        throw DomainError("segment edges must run along the chain in order");
      LabelMask m = 0;
      for (const auto& l : e.at("labels")) {
        auto it = std::find(s.labels.begin(), s.labels.end(), l.get<std::string>());
        if (it == s.labels.end()) throw DomainError("unknown edge label " + l.get<std::string>());
        m |= static_cast<LabelMask>(1u << (it - s.labels.begin()));
      }
      if (!m) throw DomainError("edge without labels");
      s.edges.push_back(m);
    }
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed segment JSON: ") + e.what());
  }
  return s;
}

std::string Segment::code() const {
  std::string out;
  char buf[8];
  auto g = to_graph();
  for (int v = 0; v < vertex_count(); ++v) {
    std::snprintf(buf, sizeof buf, "%04x", g.boundary(v) ? 0xffff : g.loops(v));
    out += buf;
    if (v < length()) {
      std::snprintf(buf, sizeof buf, "-%04x-", edges[v]);
      out += buf;
    }
  }
  return out;
}

namespace {

LabelMask bits(const GeneratorSet& g, std::initializer_list<std::string> symbols) {
  LabelMask m = 0;
  for (const auto& s : symbols) m |= LabelMask(1u << g.index(s));
  return m;
}

Segment concat(const Segment& a, LabelMask e, const Segment& b) {
  Segment r = a;
  r.edges.push_back(e);
  r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
  r.outer_right = b.outer_right;
  return r;
}

std::vector<std::string> symbols(const GeneratorSet& g) {
  std::vector<std::string> out;
  for (const auto& s : g.generators) out.push_back(s.symbol);
  return out;
}

Segment empty_chain(const std::string& example, const GeneratorSet& g) {
  Segment s;
  s.example = example;
  s.labels = symbols(g);
  return s;
}

void name(Segment& s, const char* letter, int n) {
  s.name = std::string(letter) + "_" + std::to_string(n);
  s.level = n;
}

}  // namespace

LabelMask junction_edge(const GeneratorSet& gens, int n) {
  if (gens.name == "golden_mean") {
    if (n < 0) throw DomainError("junction index must be nonnegative");
    auto i = std::to_string(n % 3);
    int k = n / 3;
    if (k == 0) return bits(gens, {"a" + i, "b" + i, "c" + i});
    switch (k % 3) {
      case 0: return bits(gens, {"b" + i, "c" + i});
      case 1: return bits(gens, {"b" + i, "d" + i});
      default: return bits(gens, {"c" + i, "d" + i});
    }
  }
  if (n < 1) throw DomainError("junction index must be positive");
  switch (n % 3) {
    case 0: return bits(gens, {"c", "d"});
    case 1: return bits(gens, {"b", "c"});
    default: return bits(gens, {"b", "d"});
  }
}

Segment build_segment(const std::string& example_name, int n) {
  auto example = canonical_example(example_name);
  auto gens = load_builtin(example);
  if (n < 1) throw DomainError("segment level must be at least 1");

  if (example == "grigorchuk") {
    Segment cur = empty_chain(example, gens);
    cur.edges = {bits(gens, {"a"})};
    for (int k = 1; k < n; ++k) cur = concat(cur.reversed(), junction_edge(gens, k), cur);
    name(cur, "I", n);
    return cur;
  }
  if (example == "golden_mean") {
    Segment prev2 = empty_chain(example, gens), prev1 = prev2;
    if (n == 1) {
      name(prev1, "I", 1);
      return prev1;
    }
    for (int k = 2; k <= n; ++k) {
      Segment cur = concat(prev2.reversed(), junction_edge(gens, k - 2), prev1.reversed());
      prev2 = std::move(prev1);
      prev1 = std::move(cur);
    }
    name(prev1, "I", n);
    return prev1;
  }
  // simple_grig
  Segment i = empty_chain(example, gens), j = i;
  i.edges = {bits(gens, {"a0"})};
  j.edges = {bits(gens, {"a1"})};
  for (int k = 1; k < n; ++k) {
    auto e = junction_edge(gens, k);
    Segment ni = concat(j, e, j.reversed());
    Segment nj = concat(j, e, i.reversed());
    i = std::move(ni);
    j = std::move(nj);
  }
  name(i, "I", n);
  return i;
}

Segment build_j_segment(int n) {
  auto gens = load_builtin("simple_grig");
  if (n < 1) throw DomainError("segment level must be at least 1");
  Segment i = empty_chain("simple_grig", gens), j = i;
  i.edges = {bits(gens, {"a0"})};
  j.edges = {bits(gens, {"a1"})};
  for (int k = 1; k < n; ++k) {
    auto e = junction_edge(gens, k);
    Segment ni = concat(j, e, j.reversed());
    Segment nj = concat(j, e, i.reversed());
    i = std::move(ni);
    j = std::move(nj);
  }
  name(j, "J", n);
  return j;
}

Segment segment_ray(const std::string& example_name, int length, int point) {
  auto example = canonical_example(example_name);
  if (length < 0) throw DomainError("ray length must be nonnegative");
  Segment full;
  if (example == "golden_mean") {
    if (point < 0 || point > 2) throw DomainError("golden_mean singular point must be 0, 1 or 2");
    int n = point < 2 ? point + 3 : 2;
    for (;; n += 3) {
      full = build_segment(example, n);
      if (full.length() > length) break;
    }
  } else {
    for (int n = 1;; ++n) {
      full = example == "grigorchuk" ? build_segment(example, n) : build_j_segment(n);
      if (full.length() > length) break;
    }
  }
  full.outer_left = 0;
  Segment r = full.slice(0, length);
  r.name = example == "golden_mean" ? "ray_xi" + std::to_string(point) : "ray";
  r.level = 0;
  return r;
}

Segment GermGraph::base() const {
  Segment b = concat(branch.reversed(), junction, branch);
  b.outer_left = b.outer_right = -1;
  b.name = "base";
  b.level = level;
  return b;
}

int GermGraph::project(int v) const {
  int h = copy_of(v), p = position(v);
  return (h == 0 || h == kernel) ? m() - p : m() + 1 + p;
}

int GermGraph::lift(int base_vertex, int copy) const {
  bool left = base_vertex <= m();
  if (left != (copy == 0 || copy == kernel))
    throw DomainError("copy does not lie over this half of the base");
  return vertex(copy, left ? m() - base_vertex : base_vertex - m() - 1);
}

Segment GermGraph::quotient() const {
  Segment q = branch;
  q.outer_left = 0;
  q.outer_right = -1;
  q.name = "quotient";
  return q;
}

GermGraph build_germ_graph(const std::string& example_name, int level) {
  auto example = canonical_example(example_name);
  auto gens = load_builtin(example);
  GermGraph gg;
  gg.example = example;
  gg.level = level;
  std::string suffix;
  int junction_index;
  if (example == "golden_mean") {
    if (level < 3) throw DomainError("golden_mean germ graphs start at level 3");
    gg.branch = build_segment(example, level);
    suffix = std::to_string(level % 3);
    junction_index = level;
  } else {
    if (level < 2) throw DomainError("germ graphs start at level 2");
    gg.branch = example == "grigorchuk" ? build_segment(example, level - 1)
                                        : build_j_segment(level - 1);
    junction_index = level - 1;
  }
  gg.junction = junction_edge(gens, junction_index);
  gg.germ_generator = {-1, gens.index("b" + suffix), gens.index("c" + suffix),
                       gens.index("d" + suffix)};
  for (int h = 1; h < 4; ++h)
    if (!(gg.junction >> gg.germ_generator[h] & 1)) gg.kernel = h;

  const int m = gg.m();
  const int k = static_cast<int>(gens.size());
  LabelMask germ = 0;
  for (int h = 1; h < 4; ++h) germ |= LabelMask(1u << gg.germ_generator[h]);
  if (m > 0 && (gg.branch.edges[0] & germ))
    throw InvariantViolation("germ generator moves the singular point");

  static const char* copy_names[4] = {"1", "b", "c", "d"};
  gg.graph = LabeledGraph(gg.branch.labels, 4 * (m + 1));
  for (int h = 0; h < 4; ++h) {
    for (int p = 0; p <= m; ++p)
      gg.graph.set_name(gg.vertex(h, p), std::string(copy_names[h]) + ":" + std::to_string(p));
    for (int p = 0; p < m; ++p)
      for (int s = 0; s < k; ++s)
        if (gg.branch.edges[p] >> s & 1) gg.graph.connect(gg.vertex(h, p), gg.vertex(h, p + 1), s);
    for (int p = 0; p < m; ++p) {
      LabelMask used = gg.branch.edges[p] | (p > 0 ? gg.branch.edges[p - 1] : germ);
      for (int s = 0; s < k; ++s)
        if (!(used >> s & 1)) gg.graph.connect(gg.vertex(h, p), gg.vertex(h, p), s);
    }
    for (int g = 1; g < 4; ++g)
      gg.graph.connect(gg.vertex(h, 0), gg.vertex(h ^ g, 0), gg.germ_generator[g]);
    gg.graph.set_boundary(gg.vertex(h, m));
  }
  return gg;
}

}  // namespace growthlab
