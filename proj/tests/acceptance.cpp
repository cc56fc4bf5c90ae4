// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "growthlab/bounds.hpp"
#include "growthlab/complexity.hpp"
#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"
#include "growthlab/portrait.hpp"
#include "growthlab/schreier.hpp"
#include "growthlab/segments.hpp"
#include "growthlab/traverse_batch.hpp"

using namespace growthlab;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0) out.require(secs < limit_s, "runtime " + std::to_string(secs) + " s");
  if (!out.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              out.detail.str().c_str());
  std::fflush(stdout);
}

std::string fixed(double x, int digits = 5) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::vector<Word> valid_words(const SubshiftAlphabet& a, int n) {
  std::vector<Word> words{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (Letter x = 0; x < a.size(); ++x)
        if (a.allows(w.empty() ? -1 : w.back(), x)) {
          next.push_back(w);
          next.back().push_back(x);
        }
    words = std::move(next);
  }
  return words;
}

void headline(Outcome& out) {
  auto g = headline_report("grigorchuk");
  auto s = headline_report("simple_grig");
  auto m = headline_report("golden_mean");
  out.require(std::abs(g.eta - 0.81054) <= 1e-4 && std::abs(g.alpha - 0.76743) <= 1e-4, "grigorchuk");
  out.require(std::abs(s.eta - 0.87176) <= 1e-4 && std::abs(s.alpha - 0.83473) <= 1e-4, "simple_grig");
  out.require(std::abs(m.eta - 0.9181) <= 1e-3, "golden_mean");
  out.detail << " grigorchuk eta=" << fixed(g.eta) << " alpha=" << fixed(g.alpha) << "; simple_grig eta="
             << fixed(s.eta) << " alpha=" << fixed(s.alpha) << "; golden_mean eta=" << fixed(m.eta);
}

void coherence(Outcome& out) {
  int checked = 0;
  for (const auto& name : builtin_names()) {
    const int top = name == "golden_mean" ? 10 : 8;
    for (int n = 1; n <= top; ++n) {
      auto c = verify_segment_vs_schreier(name, n);
      out.require(c.ok, name + " n=" + std::to_string(n) + ": " + c.detail);
      ++checked;
    }
  }
  const int l4 = build_segment("golden_mean", 4).length();
  const int l5 = build_segment("golden_mean", 5).length();
  const int l6 = build_segment("golden_mean", 6).length();
  out.require(l4 == 4 && l5 == 7 && l6 == 12, "golden_mean printed lengths");
  out.detail << " " << checked << " segments match their orbital graphs; golden |I_4|,|I_5|,|I_6| = " << l4 << ","
             << l5 << "," << l6;
}

void algebra(Outcome& out) {
  int involutions = 0;
  for (const auto& name : builtin_names()) {
    auto g = load_builtin(name);
    for (const auto& gen : g.generators) {
      out.require(GroupElement(compose(gen.machine, gen.machine)).is_identity(), name + " " + gen.symbol + "^2");
      ++involutions;
    }
  }
  auto grig = load_builtin("grigorchuk");
  out.require(grig.product(grig.parse_word("bcd")).is_identity(), "bcd = 1");

  // a0 a1 acts as a once the index of 0_x is forgotten
  auto simple = load_builtin("simple_grig");
  const auto& sa = *simple.alphabet;
  const auto& ga = *grig.alphabet;
  auto a0a1 = compose(simple["a0"], simple["a1"]);
  const Letter one = sa.index("1");
  auto erase = [&](const Word& w) {
    Word e;
    for (Letter x : w) e.push_back(ga.index(x == one ? "1" : "0"));
    return e;
  };
  int erased = 0;
  for (auto w : valid_words(sa, 10)) {
    if (!sa.allows(w.back(), one)) continue;
    w.insert(w.end(), 12, one);
    Word lhs = erase(determined_image(a0a1, w));
    Word rhs = growthlab::apply(grig["a"], erase(w));
    const bool ok = lhs.size() >= 10 && std::equal(lhs.begin(), lhs.begin() + 10, rhs.begin());
    out.require(ok, "erasure of a0 a1 on " + sa.format(w));
    if (!ok) break;
    ++erased;
  }

  std::uint64_t products = 0;
  for (const auto& name : builtin_names()) {
    auto rep = dual_oracle_check(load_builtin(name), 6, 1u << 20);
    out.require(rep.agree(), name + " oracles disagree: " + rep.witness);
    products += rep.products_checked;
  }
  out.detail << " " << involutions << " involutions, bcd = 1, erasure checked on " << erased
             << " points, oracles agree on " << products << " products of length <= 6";
}

void growth(Outcome& out) {
  auto g = load_builtin("grigorchuk");
  auto rep = dual_oracle_check(g, 6);
  out.require(rep.agree(), "oracles disagree");
  const auto& gamma = rep.by_minimize;
  out.require(gamma.size() == 7 && gamma[0] == 1 && gamma[1] == 5, "gamma(0), gamma(1)");
  auto host = portrait_host("grigorchuk", 6);
  auto words = all_words(4, 6);
  out.detail << " gamma =";
  for (auto x : gamma) out.detail << " " << x;
  out.detail << "; log gamma <= L log(delta (2R+1)):";
  for (int r = 0; r <= 6 && r < static_cast<int>(gamma.size()); ++r) {
    auto b = growth_bound_eval(host, r, words);
    const double lhs = std::log(static_cast<double>(gamma[r]));
    out.require(lhs <= b.log_bound, "bound at r=" + std::to_string(r));
    out.detail << " " << fixed(lhs, 2) << "<=" << fixed(b.log_bound, 1);
  }
}

std::vector<BatchReport> batches;

void traverses(Outcome& out) {
  for (const auto& name : builtin_names()) {
    auto ctx = default_context(name, 10000, 8);
    auto r = check_batch(ctx, 1000, 10000, 20260101);
    out.require(r.cover == 0, name + " cover");
    out.require(r.restrict == 0, name + " restriction not injective or invalid");
    out.require(r.injective == 0, name + " injective");
    out.require(r.monotone == 0, name + " monotone");
    out.require(r.chain == 0, name + " chain");
    out.require(r.disjoint == 0, name + " disjoint: " + std::to_string(r.disjoint) + " of 1000 words have " +
                                     std::to_string(r.overlapping_pairs) + " overlapping pairs");
    out.detail << " " << name << ": lifted " << r.lifted << ", restricted " << r.restricted << ", chain checks "
               << r.chain_checks << ", trajectory overlaps " << r.ray_overlaps << " of " << r.ray_traverses << ";";
    batches.push_back(std::move(r));
  }
}

void decay(Outcome& out) {
  if (batches.size() != builtin_names().size()) {
    out.require(false, "no batch data");
    return;
  }
  for (const auto& r : batches) {
    auto fit = fit_decay(r.mean_segment, 3, 8);
    const double eta = headline_report(r.example).eta;
    out.require(fit.rate <= eta + 0.05, r.example);
    out.detail << " " << r.example << " rate " << fixed(fit.rate, 4) << " <= " << fixed(eta + 0.05, 4) << ";";
  }
}

void complexity(Outcome& out) {
  for (const auto& name : builtin_names()) {
    auto ray = segment_ray(name, 1 << 13);
    ChainCode code(ray);
    auto profile = ball_class_profile(code, 10, 200);
    double lower = 0, upper = 0;
    for (const auto& b : profile) {
      double& side = b.radius <= 100 ? lower : upper;
      side = std::max(side, static_cast<double>(b.classes) / b.radius);
    }
    // a linear bound shows as a ratio that stops growing
    out.require(upper <= lower, name + " delta(R)/R still growing");
    double early = 0, late = 0;
    for (int n = 1; n <= 8; ++n) {
      auto s = build_segment(name, n);
      if (s.length() == 0) continue;
      double& side = n <= 4 ? early : late;
      side = std::max(side, static_cast<double>(repetitivity_gap(ray, s)) / s.length());
    }
    out.require(late <= early, name + " gap/|I_n| still growing");
    out.detail << " " << name << ": max delta/R " << fixed(lower, 2) << " (R<=100), " << fixed(upper, 2)
               << " (R>100); max gap/|I_n| " << fixed(early, 2) << " (n<=4), " << fixed(late, 2) << " (n>4);";
  }
}

void determinism(Outcome& out) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("growthlab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands{
      "graph --example golden --kind germ --level 5 --format json",
      "graph --example simple_grig --kind j --level 4 --format dot",
      "graph --example grigorchuk --kind orbital --radius 40 --format json",
      "growth --example grigorchuk --radius 5 --dual",
      "traverses --example golden --word-length 3000 --samples 16 --seed 9 --level 5",
      "traverses --example simple_grig --word-length 2000 --samples 8 --seed 9 --format csv",
      "portraits --example grigorchuk --word-length 128 --samples 8 --seed 3 --radius 4",
      "portraits --example golden --word-length 64 --samples 8 --seed 3 --format csv",
      "bounds --format table",
      "bounds",
      "repetitivity --example simple_grig --level 6 --radius 30",
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  int same = 0;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string bytes[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path file = dir / (std::to_string(i) + "_" + std::to_string(run));
      const std::string cmd = std::string("\"") + GROWTHLAB_CLI + "\" " + commands[i] + " --out \"" +
                              file.string() + "\" 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      out.require(rc == 0, "exit status of: " + commands[i]);
      bytes[run] = slurp(file);
    }
    out.require(!bytes[0].empty() && bytes[0] == bytes[1], "output differs: " + commands[i]);
    same += !bytes[0].empty() && bytes[0] == bytes[1];
  }
  fs::remove_all(dir);
  out.detail << " " << same << " of " << commands.size() << " commands reproduced byte for byte";
}

}  // namespace

int main() {
  criterion(1, "headline exponents", 1, headline);
  criterion(2, "graph coherence", 60, coherence);
  criterion(3, "algebraic oracles", 120, algebra);
  criterion(4, "growth enumeration", 300, growth);
  criterion(5, "traverse properties", 600, traverses);
  criterion(6, "decay rate", 0, decay);
  criterion(7, "complexity and repetitivity", 0, complexity);
  criterion(8, "determinism", 0, determinism);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
