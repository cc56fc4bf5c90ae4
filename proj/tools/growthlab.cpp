// Command-line front end. Every command writes JSON, CSV or DOT to --out
// (stdout by default) and is byte-reproducible for a fixed seed.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "growthlab/bounds.hpp"
#include "growthlab/complexity.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"
#include "growthlab/portrait.hpp"
#include "growthlab/random_words.hpp"
#include "growthlab/schreier.hpp"
#include "growthlab/traverse_batch.hpp"

using namespace growthlab;

namespace {

struct Config {
  std::string example = "grigorchuk";
  int level = 4;
  int radius = 4;
  int word_length = 10000;
  int samples = 100;
  std::uint64_t seed = 1;
  std::vector<double> p{1.0, 1.2, 2.0};
  std::vector<double> t{0.5, 0.75, 1.0};
  std::string format;
  std::string out;
  std::size_t cap = 200000;
  std::string kind = "segment";
  std::string segment_file;
  bool dual = false;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw DomainError("cannot write " + cfg.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw DomainError("format '" + format + "' not supported here (use " + list + ")");
}

void cmd_graph(const Config& cfg) {
  if (cfg.format.empty()) throw DomainError("--format is required");
  require_format(cfg.format, {"json", "dot"});
  const auto example = canonical_example(cfg.example);
  LabeledGraph g;
  Json j;
  if (cfg.kind == "segment" || cfg.kind == "j") {
    Segment s = cfg.kind == "j" ? build_j_segment(cfg.level) : build_segment(example, cfg.level);
    if (cfg.kind == "j" && example != "simple_grig") throw DomainError("J segments exist only for simple_grig");
    g = s.to_graph();
    j = s.to_json();
  } else if (cfg.kind == "germ") {
    auto germ = build_germ_graph(example, cfg.level);
    g = germ.graph;
    j = {{"example", example}, {"kind", "germ"}, {"level", cfg.level}, {"branch", germ.branch.to_json()},
         {"graph", g.to_json()}};
  } else if (cfg.kind == "ray") {
    Segment s = segment_ray(example, cfg.radius);
    g = s.to_graph();
    j = s.to_json();
  } else if (cfg.kind == "orbital") {
    auto gens = load_builtin(example);
    auto ray = orbital_ray(gens, singular_tail(example), cfg.radius);
    g = ray.chain.to_graph();
    for (std::size_t v = 0; v < ray.names.size() && v < g.size(); ++v) g.set_name(static_cast<int>(v), ray.names[v]);
    j = ray.chain.to_json();
    j["names"] = ray.names;
  } else {
    throw DomainError("--kind must be segment, j, germ, ray or orbital");
  }
  emit(cfg, cfg.format == "dot" ? g.to_dot(example) : dump(j));
}

void cmd_growth(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  const auto gens = load_builtin(cfg.example);
  std::vector<std::uint64_t> gamma, action;
  if (cfg.dual) {
    auto rep = dual_oracle_check(gens, cfg.radius, cfg.cap);
    if (!rep.agree()) throw InvariantViolation("equality oracles disagree: " + rep.witness);
    gamma = rep.by_minimize;
    action = rep.by_action;
  } else {
    gamma = cayley_ball(gens, cfg.radius, Oracle::Minimize, cfg.cap);
  }
  std::ostringstream os;
  if (format == "csv") {
    os << (cfg.dual ? "r,gamma,gamma_action\n" : "r,gamma\n");
    for (std::size_t r = 0; r < gamma.size(); ++r) {
      os << r << "," << gamma[r];
      if (cfg.dual) os << "," << action[r];
      os << "\n";
    }
    emit(cfg, os.str());
  } else {
    require_format(format, {"json"});
    Json j{{"example", canonical_example(cfg.example)}, {"radius", cfg.radius}, {"gamma", gamma}};
    if (cfg.dual) j["gamma_action"] = action;
    emit(cfg, dump(j));
  }
}

void cmd_traverses(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  const auto example = canonical_example(cfg.example);
  if (cfg.word_length < 1 || cfg.samples < 1) throw DomainError("need positive --word-length and --samples");

  if (!cfg.segment_file.empty()) {
    std::ifstream f(cfg.segment_file);
    if (!f) throw DomainError("cannot read " + cfg.segment_file);
    Json sj;
    try {
      sj = Json::parse(f);
    } catch (const Json::exception& e) {
      throw DomainError(std::string("bad JSON in segment file: ") + e.what());
    }
    auto seg = Segment::from_json(sj);
    auto table = StepTable::of_segment(seg);
    const int k = static_cast<int>(load_builtin(seg.example.empty() ? example : seg.example).size());
    if (table.labels() != k) throw DomainError("segment labels do not match the example's generators");
    auto words = random_words(cfg.samples, cfg.word_length, k, cfg.seed);
    std::vector<std::uint32_t> counts(words.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(words.size()); ++i)
      counts[i] = count_traverses(table, words[i])[0];
    std::ostringstream os;
    if (format == "csv") {
      os << "word_id,segment,count\n";
      for (std::size_t i = 0; i < counts.size(); ++i) os << i << "," << seg.name << "," << counts[i] << "\n";
      emit(cfg, os.str());
    } else {
      require_format(format, {"json"});
      emit(cfg, dump({{"segment", seg.name}, {"level", seg.level}, {"seed", cfg.seed}, {"counts", counts}}));
    }
    return;
  }

  auto ctx = default_context(example, cfg.word_length, cfg.level);
  auto report = check_batch(ctx, cfg.samples, cfg.word_length, cfg.seed);
  if (format == "csv") {
    const auto gens = load_builtin(example);
    std::ostringstream os;
    os << "word_id,graph,level,exit,count\n";
    for (std::size_t w = 0; w < report.counts.size(); ++w) {
      const auto& c = report.counts[w];
      for (int n = 1; n <= ctx.max_segment; ++n)
        if (ctx.segment[n]) os << w << ",I," << n << ",," << c.segment[n] << "\n";
      for (int n = ctx.min_germ; n <= ctx.max_germ; ++n)
        for (int h = 1; h <= 3; ++h)
          os << w << ",germ," << n << "," << gens.generators[ctx.germ[n]->germ_generator[h]].symbol << ","
             << c.germ[n][h] << "\n";
    }
    emit(cfg, os.str());
    return;
  }
  require_format(format, {"json"});
  Json j{{"command", "traverses"}, {"report", report.to_json()}};
  try {
    auto fit = fit_decay(report.mean_segment, 3, std::min(8, ctx.max_segment));
    j["decay"] = {{"levels", fit.levels}, {"means", fit.means}, {"rate", fit.rate},
                  {"eta", headline_report(example).eta}};
  } catch (const DomainError& e) {
    j["decay"] = {{"error", e.what()}};
  }
  auto corr = fit_correction(ctx, report.counts, cfg.word_length, cfg.t);
  Json rows = Json::array();
  for (std::size_t a = 0; a < corr.t.size(); ++a) {
    double mean = 0;
    for (const auto& c : report.counts) mean += traverse_gf_value(c, corr.t[a]);
    mean /= static_cast<double>(report.counts.size());
    rows.push_back({{"t", corr.t[a]}, {"C", corr.c[a]}, {"denominator", decay_denominator(example, corr.t[a])},
                    {"mean_F_over_length", mean / cfg.word_length}});
  }
  j["correction"] = rows;
  emit(cfg, dump(j));
}

void cmd_portraits(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  const auto example = canonical_example(cfg.example);
  if (cfg.word_length < 0 || cfg.samples < 1) throw DomainError("need --word-length >= 0 and --samples >= 1");
  if (cfg.word_length > 8192) throw ResourceLimit("portraits are limited to words of length 8192");
  const auto gens = load_builtin(example);
  const int k = static_cast<int>(gens.size());
  auto host = portrait_host(example, std::max(cfg.word_length, cfg.radius));
  auto words = random_words(cfg.samples, cfg.word_length, k, cfg.seed);
  std::vector<Portrait> portraits(words.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(words.size()); ++i)
    portraits[i] = standard_portrait(host, words[i]);
  for (const auto& p : portraits)
    if (!p.consistent) throw InvariantViolation("standard portrait is not consistent");

  if (format == "csv") {
    std::ostringstream os;
    os << "word_id,portrait_size";
    for (double p : cfg.p) os << ",N_" << fmt(p);
    os << "\n";
    for (std::size_t i = 0; i < portraits.size(); ++i) {
      os << i << "," << portraits[i].size();
      for (double p : cfg.p) os << "," << fmt(n_p(portraits[i], p).value);
      os << "\n";
    }
    emit(cfg, os.str());
    return;
  }
  require_format(format, {"json"});
  Json j{{"command", "portraits"}, {"example", example}, {"word_length", cfg.word_length},
         {"samples", cfg.samples}, {"seed", cfg.seed}};
  std::size_t largest = 0;
  for (const auto& p : portraits) largest = std::max(largest, p.size());
  j["max_portrait_size"] = largest;
  Json np = Json::array();
  for (double p : cfg.p) {
    double mx = 0;
    for (const auto& portrait : portraits)
      mx = std::max(mx, std::pow(n_p(portrait, p).value, p) / std::max(1, cfg.word_length));
    np.push_back({{"p", p}, {"max_Np_pow_p_over_length", mx}});
  }
  j["n_p"] = np;

  auto profile = ball_class_profile(host.code, 1, std::max(1, cfg.radius));
  double c1 = 0;
  for (const auto& b : profile) c1 = std::max(c1, static_cast<double>(b.classes) / b.radius);
  if (cfg.p.size() >= 2) {
    auto r = check_p1p2(portraits, cfg.p.front(), cfg.p.back(), c1);
    j["p1p2"] = {{"p1", r.p1}, {"p2", r.p2}, {"max_ratio", r.max_ratio}, {"closed_form", r.closed_form}, {"C1", r.c1}};
  }
  if (cfg.radius <= 8) {
    auto sample = all_words(k, cfg.radius);
    Json bounds = Json::array();
    for (int r = 0; r <= cfg.radius; ++r) {
      auto b = growth_bound_eval(host, r, sample, cfg.p.back());
      bounds.push_back({{"R", r}, {"delta", b.delta}, {"graph_growth", b.graph_growth}, {"L", b.portrait_max},
                        {"log_bound", b.log_bound}, {"Np_max", b.np_max}});
    }
    j["growth_bound"] = bounds;
  }
  emit(cfg, dump(j));
}

void cmd_bounds(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  std::vector<BoundReport> reports;
  for (const auto& name : builtin_names()) reports.push_back(headline_report(name));
  if (format == "table") {
    std::ostringstream os;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-12s %-26s %-9s %-9s %-9s %-9s\n", "example", "polynomial", "eta", "t0",
                  "beta", "alpha");
    os << buf;
    for (const auto& r : reports) {
      std::snprintf(buf, sizeof buf, "%-12s %-26s %-9.5f %-9.5f %-9.5f %-9.5f%s\n", r.example.c_str(),
                    r.polynomial.to_string().c_str(), r.eta, r.t0, r.beta, r.alpha,
                    r.stated_exponent_is_root ? "  (stated exponent = eta)" : "");
      os << buf;
    }
    emit(cfg, os.str());
    return;
  }
  require_format(format, {"json"});
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(r.to_json());
  emit(cfg, dump(j));
}

void cmd_repetitivity(const Config& cfg) {
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  const auto example = canonical_example(cfg.example);
  const int length = std::max(1 << 12, 8 * static_cast<int>(segment_length(example, cfg.level)));
  auto ray = segment_ray(example, length);
  ChainCode code(ray);
  auto profile = ball_class_profile(code, 0, cfg.radius);
  Json gaps = Json::array();
  for (int n = 1; n <= cfg.level; ++n) {
    auto s = build_segment(example, n);
    if (s.length() < 1) continue;
    try {
      int gap = repetitivity_gap(ray, s);
      gaps.push_back({{"level", n}, {"length", s.length()}, {"gap", gap},
                      {"ratio", static_cast<double>(gap) / s.length()}});
    } catch (const NotFound& e) {
      gaps.push_back({{"level", n}, {"length", s.length()}, {"error", e.what()}});
    }
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "R,delta,delta_over_R\n";
    for (const auto& b : profile)
      os << b.radius << "," << b.classes << "," << (b.radius ? fmt(double(b.classes) / b.radius) : "") << "\n";
    emit(cfg, os.str());
    return;
  }
  require_format(format, {"json"});
  Json d = Json::array();
  for (const auto& b : profile) d.push_back({{"R", b.radius}, {"delta", b.classes}, {"centres", b.centres}});
  emit(cfg, dump({{"example", example}, {"ray_length", length}, {"delta", d}, {"gaps", gaps}}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"growthlab: growth bounds for self-similar groups via traverse counting"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--example", cfg.example, "grigorchuk, golden_mean (golden) or simple_grig");
    sub->add_option("--format", cfg.format, "json, csv, dot or table, depending on the command");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
    sub->add_option("--cap", cfg.cap, "resource cap; GROWTHLAB_CAP overrides");
  };
  auto sampling = [&cfg](CLI::App* sub) {
    sub->add_option("--word-length", cfg.word_length, "random word length");
    sub->add_option("--samples", cfg.samples, "number of random words");
    sub->add_option("--seed", cfg.seed, "64-bit seed");
  };

  auto* graph = app.add_subcommand("graph", "segments, germ graphs, rays and orbital rays");
  common(graph);
  graph->add_option("--level", cfg.level, "segment or germ level");
  graph->add_option("--radius", cfg.radius, "ray length for --kind ray/orbital");
  graph->add_option("--kind", cfg.kind, "segment, j, germ, ray or orbital");

  auto* growth = app.add_subcommand("growth", "growth series of the Cayley ball");
  common(growth);
  growth->add_option("--radius", cfg.radius, "largest radius");
  growth->add_flag("--dual", cfg.dual, "run both equality oracles and compare");

  auto* traverses = app.add_subcommand("traverses", "traverse counts and inequality checks on random words");
  common(traverses);
  sampling(traverses);
  traverses->add_option("--level", cfg.level, "largest level on the small side of inequality chains");
  traverses->add_option("--t", cfg.t, "t grid for F_w(t)")->delimiter(',');
  traverses->add_option("--segment", cfg.segment_file, "count traverses of a segment written by `graph`");

  auto* portraits = app.add_subcommand("portraits", "standard portraits, N_p and the growth bound");
  common(portraits);
  sampling(portraits);
  portraits->add_option("--p", cfg.p, "p grid")->delimiter(',');
  portraits->add_option("--radius", cfg.radius, "largest R for the growth bound and complexity");

  auto* bounds = app.add_subcommand("bounds", "headline exponents");
  common(bounds);

  auto* rep = app.add_subcommand("repetitivity", "ball complexity and repetitivity gaps on the ray");
  common(rep);
  rep->add_option("--level", cfg.level, "largest segment level");
  rep->add_option("--radius", cfg.radius, "largest ball radius");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("GROWTHLAB_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end) {
      std::cerr << "GROWTHLAB_CAP must be a positive integer\n";
      return 2;
    }
    cfg.cap = static_cast<std::size_t>(v);
  }

  try {
    if (*graph) cmd_graph(cfg);
    else if (*growth) cmd_growth(cfg);
    else if (*traverses) cmd_traverses(cfg);
    else if (*portraits) cmd_portraits(cfg);
    else if (*bounds) cmd_bounds(cfg);
    else if (*rep) cmd_repetitivity(cfg);
  } catch (const ResourceLimit& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const TruncationBoundary& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
