#include "growthlab/traverse_batch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "growthlab/bounds.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"
#include "growthlab/random_words.hpp"

namespace growthlab {

int min_germ_level(const std::string& example) {
  return canonical_example(example) == "golden_mean" ? 3 : 2;
}

TraverseContext make_context(const std::string& example, int max_segment, int max_germ, int max_gap,
                             int ray_length) {
  TraverseContext ctx;
  ctx.example = canonical_example(example);
  ctx.generators = static_cast<int>(load_builtin(ctx.example).size());
  ctx.max_segment = max_segment;
  ctx.min_germ = min_germ_level(ctx.example);
  ctx.max_germ = max_germ;
  ctx.segment.resize(max_segment + 1);
  for (int n = 1; n <= max_segment; ++n) {
    auto s = build_segment(ctx.example, n);
    if (s.length() >= 1) ctx.segment[n] = StepTable::of_segment(s);
  }
  ctx.germ.resize(max_germ + 1);
  ctx.germ_table.resize(max_germ + 1);
  ctx.base_table.resize(max_germ + 1);
  for (int n = ctx.min_germ; n <= max_germ; ++n) {
    ctx.germ[n] = build_germ_graph(ctx.example, n);
    ctx.germ_table[n] = StepTable::of_germ(*ctx.germ[n]);
    ctx.base_table[n] = StepTable::of_segment(ctx.germ[n]->base());
  }
  for (int big = ctx.min_germ + 1; big <= max_germ; ++big) {
    const int mid = ctx.germ[big]->m() - 1;
    for (int small = std::max(ctx.min_germ, big - max_gap); small < big; ++small) {
      auto copies = centred_copies(*ctx.germ[big], *ctx.germ[small]);
      if (copies.empty()) continue;
      auto best = std::min_element(copies.begin(), copies.end(), [mid](const auto& a, const auto& b) {
        return std::abs(2 * a.junction - mid) < std::abs(2 * b.junction - mid);
      });
      ctx.links.push_back({big, small, *best});
    }
  }
  if (ray_length > 0) {
    auto ray = segment_ray(ctx.example, ray_length);
    ctx.ray = ray.to_graph();
    ctx.ray_copy.resize(max_segment + 1);
    for (int n = 1; n <= max_segment; ++n) {
      auto s = build_segment(ctx.example, n);
      if (s.length() < 1) continue;
      TraverseContext::RayCopy rc;
      auto fwd = find_occurrences(ray, s, false);
      if (!fwd.empty()) {
        rc.x = fwd.front();
        rc.y = rc.x + s.length();
      } else {
        auto rev = find_occurrences(ray, s, true);
        if (rev.empty()) continue;
        rc.y = rev.front();
        rc.x = rc.y + s.length();
      }
      rc.interior.assign(ctx.ray->size(), 0);
      for (int v = std::min(rc.x, rc.y) + 1; v < std::max(rc.x, rc.y); ++v) rc.interior[v] = 1;
      ctx.ray_copy[n] = std::move(rc);
    }
  }
  return ctx;
}

TraverseContext default_context(const std::string& example, std::size_t word_length, int max_small) {
  const int ray = std::max(static_cast<int>(word_length) + 8,
                           3 * static_cast<int>(segment_length(example, 10)));
  return make_context(example, 10, max_small + 3, 6, ray);
}

WordCounts count_word(const TraverseContext& ctx, const GenWord& w) {
  WordCounts out;
  out.segment.assign(ctx.max_segment + 1, 0);
  out.germ.assign(ctx.max_germ + 1, {0, 0, 0, 0});
  for (int n = 1; n <= ctx.max_segment; ++n)
    if (ctx.segment[n]) out.segment[n] = count_traverses(*ctx.segment[n], w)[0];
  for (int n = ctx.min_germ; n <= ctx.max_germ; ++n) {
    auto c = count_traverses(*ctx.germ_table[n], w);
    for (int e = 0; e < 3; ++e) out.germ[n][e + 1] = c[e];
  }
  return out;
}

std::vector<WordCounts> count_batch_serial(const TraverseContext& ctx, const std::vector<GenWord>& words) {
  std::vector<WordCounts> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(count_word(ctx, w));
  return out;
}

std::vector<WordCounts> count_batch_parallel(const TraverseContext& ctx,
                                             const std::vector<GenWord>& words) {
  std::vector<WordCounts> out(words.size());
  const auto n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = count_word(ctx, words[i]);
  return out;
}

namespace {

std::string interval(const Traverse& t) {
  return "[" + std::to_string(t.i) + ", " + std::to_string(t.j) + "]";
}

void note(WordCheck& wc, std::size_t word, const char* property, std::string detail) {
  wc.violations.push_back({word, property, std::move(detail)});
}

}  // namespace

WordCheck check_word(const TraverseContext& ctx, const GenWord& w, std::size_t word_index) {
  WordCheck wc;
  wc.counts = count_word(ctx, w);

  for (int n = 1; n <= ctx.max_segment; ++n) {
    if (!ctx.segment[n]) continue;
    auto ts = enumerate_traverses(*ctx.segment[n], w);
    std::uint64_t overlaps = 0;
    for (std::size_t a = 1; a < ts.size(); ++a)
      if (ts[a].i <= ts[a - 1].j) {
        if (overlaps++ == 0 && wc.overlapping_pairs == 0)
          note(wc, word_index, "disjoint",
               "I_" + std::to_string(n) + ": " + interval(ts[a - 1]) + " and " + interval(ts[a]));
      }
    wc.overlapping_pairs += overlaps;
  }

  if (ctx.ray) {
    auto traj = run_trajectory(*ctx.ray, 0, w);
    for (int n = 1; n < static_cast<int>(ctx.ray_copy.size()); ++n) {
      if (!ctx.ray_copy[n]) continue;
      const auto& rc = *ctx.ray_copy[n];
      auto ts = enumerate_traverses(traj, rc.x, rc.y, rc.interior);
      wc.ray_traverses += ts.size();
      for (std::size_t a = 1; a < ts.size(); ++a)
        if (ts[a].i <= ts[a - 1].j) {
          if (wc.ray_overlaps++ == 0)
            note(wc, word_index, "ray_disjoint",
                 "I_" + std::to_string(n) + ": " + interval(ts[a - 1]) + " and " + interval(ts[a]));
        }
    }
  }

  for (int n = 1; n < ctx.max_segment; ++n)
    if (ctx.segment[n] && ctx.segment[n + 1] && wc.counts.segment[n + 1] > wc.counts.segment[n])
      note(wc, word_index, "monotone",
           "level " + std::to_string(n + 1) + ": " + std::to_string(wc.counts.segment[n + 1]) + " > " +
               std::to_string(wc.counts.segment[n]));

  std::vector<TraverseSet> germ_sets(ctx.max_germ + 1);
  for (int n = ctx.min_germ; n <= ctx.max_germ; ++n) {
    germ_sets[n] = enumerate_traverses(*ctx.germ_table[n], w);
    // Exits through the kernel copy project to U-turns of the base.
    const auto& g = *ctx.germ[n];
    TraverseSet lifted;
    for (const auto& t : germ_sets[n])
      if (g.junction >> g.germ_generator[t.exit] & 1) lifted.push_back(t);
    auto base = enumerate_traverses(*ctx.base_table[n], w);
    if (base.size() != lifted.size())
      note(wc, word_index, "cover",
           "level " + std::to_string(n) + ": " + std::to_string(base.size()) + " base vs " +
               std::to_string(lifted.size()) + " germ traverses");
    for (const auto& b : base) {
      ++wc.lifted;
      try {
        auto l = lift_traverse(*ctx.germ[n], *ctx.germ_table[n], b, w);
        if (!std::binary_search(lifted.begin(), lifted.end(), l))
          note(wc, word_index, "cover", "level " + std::to_string(n) + ": lift of " + interval(b) + " missing");
      } catch (const InvariantViolation& e) {
        note(wc, word_index, "cover", "level " + std::to_string(n) + " " + interval(b) + ": " + e.what());
      }
    }
  }

  for (const auto& link : ctx.links) {
    const auto& big = germ_sets[link.big];
    const auto& small_table = *ctx.germ_table[link.small];
    const std::string tag = std::to_string(link.big) + " -> " + std::to_string(link.small);
    std::vector<int> starts;
    starts.reserve(big.size());
    for (const auto& t : big) {
      ++wc.restricted;
      Traverse r;
      try {
        r = restrict_traverse(*ctx.germ_table[link.big], t, w, link.copy.x_sub, link.copy.y_sub);
      } catch (const Unsatisfiable& e) {
        note(wc, word_index, "restrict", tag + " " + interval(t) + ": " + e.what());
        continue;
      }
      std::size_t j = 0;
      const int e = small_table.walk(w.data(), w.size(), r.i, j);
      const bool lands = e >= 0 && static_cast<int>(j) == r.j &&
                         std::count(link.copy.exits.begin(), link.copy.exits.end(), small_table.exit_label(e));
      if (!lands) note(wc, word_index, "restrict", tag + " " + interval(t) + " -> " + interval(r) + " is not a traverse");
      starts.push_back(r.i);
    }
    std::sort(starts.begin(), starts.end());
    if (std::adjacent_find(starts.begin(), starts.end()) != starts.end())
      note(wc, word_index, "injective", tag + ": two traverses restrict to the same one");
    ++wc.chain_checks;
    std::uint64_t rhs = 0;
    for (int h : link.copy.exits) rhs += wc.counts.germ[link.small][h];
    if (big.size() > rhs)
      note(wc, word_index, "chain",
           tag + ": " + std::to_string(big.size()) + " > " + std::to_string(rhs));
  }
  return wc;
}

Json BatchReport::to_json() const {
  Json j;
  j["example"] = example;
  j["words"] = words;
  j["length"] = length;
  j["seed"] = seed;
  j["mean_traverses"] = mean_segment;
  j["lifted"] = lifted;
  j["restricted"] = restricted;
  j["chain_checks"] = chain_checks;
  j["violations"] = {{"cover", cover},         {"restrict", restrict}, {"injective", injective},
                     {"chain", chain},         {"monotone", monotone}, {"disjoint", disjoint}};
  j["overlapping_pairs"] = overlapping_pairs;
  j["trajectory_convention"] = {{"traverses", ray_traverses}, {"overlapping_pairs", ray_overlaps}};
  Json ws = Json::array();
  for (const auto& v : witnesses) ws.push_back({{"word", v.word}, {"property", v.property}, {"detail", v.detail}});
  j["witnesses"] = ws;
  return j;
}

BatchReport check_batch(const TraverseContext& ctx, std::size_t words, std::size_t length,
                        std::uint64_t seed) {
  std::vector<WordCheck> checks(words);
  const auto n = static_cast<std::ptrdiff_t>(words);
#pragma omp parallel for schedule(dynamic, 2)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    checks[i] = check_word(ctx, random_word(length, ctx.generators, word_seed(seed, i)), i);

  BatchReport r;
  r.example = ctx.example;
  r.words = words;
  r.length = length;
  r.seed = seed;
  r.mean_segment.assign(ctx.max_segment + 1, 0.0);
  std::vector<int> shown;
  auto keep = [&](const Violation& v) {
    static const std::string order[] = {"cover", "restrict", "injective", "chain", "monotone", "disjoint", "ray_disjoint"};
    const int k = static_cast<int>(std::find(std::begin(order), std::end(order), v.property) - std::begin(order));
    if (shown.empty()) shown.assign(std::size(order), 0);
    if (k < static_cast<int>(shown.size()) && shown[k]++ < 3) r.witnesses.push_back(v);
  };
  r.counts.reserve(words);
  for (auto& c : checks) {
    for (int lv = 0; lv <= ctx.max_segment; ++lv) r.mean_segment[lv] += c.counts.segment[lv];
    r.lifted += c.lifted;
    r.restricted += c.restricted;
    r.chain_checks += c.chain_checks;
    r.overlapping_pairs += c.overlapping_pairs;
    r.ray_traverses += c.ray_traverses;
    r.ray_overlaps += c.ray_overlaps;
    if (c.overlapping_pairs) ++r.disjoint;
    for (const auto& v : c.violations) {
      if (v.property == "cover") ++r.cover;
      else if (v.property == "restrict") ++r.restrict;
      else if (v.property == "injective") ++r.injective;
      else if (v.property == "chain") ++r.chain;
      else if (v.property == "monotone") ++r.monotone;
      keep(v);
    }
    r.counts.push_back(std::move(c.counts));
  }
  if (words)
    for (auto& m : r.mean_segment) m /= static_cast<double>(words);
  return r;
}

DecayFit fit_decay(const std::vector<double>& mean_by_level, int lo, int hi) {
  DecayFit f;
  for (int n = lo; n <= hi && n < static_cast<int>(mean_by_level.size()); ++n)
    if (mean_by_level[n] > 0) {
      f.levels.push_back(n);
      f.means.push_back(mean_by_level[n]);
    }
  if (f.levels.size() < 2) throw DomainError("decay fit needs two levels with traverses");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double k = static_cast<double>(f.levels.size());
  for (std::size_t a = 0; a < f.levels.size(); ++a) {
    double x = f.levels[a], y = std::log(f.means[a]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  f.rate = std::exp((k * sxy - sx * sy) / (k * sxx - sx * sx));
  return f;
}

double traverse_gf_value(const WordCounts& counts, double t) {
  double sum = 0, p = 1;
  for (auto c : counts.segment) {
    sum += c * p;
    p *= t;
  }
  return sum;
}

CorrectionFit fit_correction(const TraverseContext& ctx, const std::vector<WordCounts>& counts,
                             std::size_t length, const std::vector<double>& ts) {
  if (length == 0) throw DomainError("empty words");
  CorrectionFit fit;
  for (double t : ts) {
    const double d = decay_denominator(ctx.example, t);
    if (!(d > 0)) throw DomainError("t = " + std::to_string(t) + " is outside the convergence range");
    double c = 0;
    for (const auto& wc : counts) c = std::max(c, traverse_gf_value(wc, t) * d / static_cast<double>(length));
    fit.t.push_back(t);
    fit.c.push_back(c);
  }
  return fit;
}

}  // namespace growthlab
