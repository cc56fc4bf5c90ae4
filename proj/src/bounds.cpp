#include "growthlab/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "growthlab/errors.hpp"
#include "growthlab/group.hpp"

namespace growthlab {

double Polynomial::operator()(double x) const {
  double acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Polynomial::degree() const {
  for (int d = static_cast<int>(coefficients.size()) - 1; d >= 0; --d)
    if (coefficients[d] != 0) return d;
  return -1;
}

std::string Polynomial::to_string(char var) const {
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    double c = coefficients[d];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    double a = std::fabs(c);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", a);
    if (d == 0 || a != 1) out += buf;
    if (d >= 1) out += var;
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

double positive_root(const Polynomial& p, double lo, double hi, double tol) {
  if (!(lo < hi) || !(tol > 0)) throw DomainError("need lo < hi and tol > 0");
  double flo = p(lo), fhi = p(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw NoSignChange(p.to_string() + " on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  while (hi - lo > tol) {
    double mid = lo + (hi - lo) / 2;
    double fm = p(mid);
    if (fm == 0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

double alpha_exponent(double beta, double t0) {
  if (!(beta > 1) || !(t0 > 1)) throw DomainError("alpha needs beta > 1 and t0 > 1");
  return std::log(beta) / (std::log(beta) + std::log(t0));
}

double hausdorff_bound(int pieces) {
  if (pieces < 2) throw DomainError("piece count must be at least 2");
  return static_cast<double>(pieces) / (pieces - 1);
}

double segment_length(const std::string& example, int n) {
  const auto id = canonical_example(example);
  if (n < 0) throw DomainError("negative level");
  if (id == "grigorchuk") return n == 0 ? 0 : std::ldexp(1.0, n - 1) * 2 - 1;
  if (id == "golden_mean") {
    double a = 0, b = 0;  // |I_{k-1}|, |I_k|
    for (int k = 2; k <= n; ++k) {
      double c = a + b + 1;
      a = b;
      b = c;
    }
    return b;
  }
  // I_{k+1} = J_k e rev(J_k), J_{k+1} = J_k e rev(I_k)
  if (n == 0) return 0;
  double i = 1, j = 1;
  for (int k = 1; k < n; ++k) {
    double ni = 2 * j + 1, nj = j + i + 1;
    i = ni;
    j = nj;
  }
  return i;
}

BetaEstimate beta_estimate(const std::string& example, int n_max) {
  if (n_max < 6) throw DomainError("beta estimate needs n_max >= 6");
  BetaEstimate out;
  for (int n = 2; n <= n_max; ++n) {
    double prev = segment_length(example, n - 1);
    out.ratios.push_back(prev > 0 ? segment_length(example, n) / prev : 0.0);
  }
  out.ratio = out.ratios.back();
  out.root = std::pow(segment_length(example, n_max), 1.0 / n_max);
  return out;
}

Polynomial decay_polynomial(const std::string& example) {
  const auto id = canonical_example(example);
  if (id == "grigorchuk") return Polynomial{{-2, 1, 1, 1}};
  if (id == "golden_mean") return Polynomial{{-2, 0, 1, 0, 0, 1, 0, 0, 1}};
  return Polynomial{{-2, 0, 1, 1, 1}};
}

double decay_denominator(const std::string& example, double t) {
  if (!(t > 0)) throw DomainError("t must be positive");
  return decay_polynomial(example)(1.0 / t);
}

Json BoundReport::to_json() const {
  Json j;
  j["example"] = example;
  j["polynomial"] = polynomial.to_string();
  j["eta"] = eta;
  j["t0"] = t0;
  j["beta"] = beta;
  j["alpha"] = alpha;
  if (stated_exponent_is_root) j["stated_exponent"] = eta;
  j["derivation"] = derivation;
  return j;
}

BoundReport headline_report(const std::string& example) {
  BoundReport r;
  r.example = canonical_example(example);
  r.polynomial = decay_polynomial(r.example);
  r.eta = positive_root(r.polynomial, 0.0, 1.0);
  r.t0 = 1.0 / r.eta;
  r.beta = beta_estimate(r.example).ratio;
  r.alpha = alpha_exponent(r.beta, r.t0);
  if (r.example == "golden_mean") {
    r.stated_exponent_is_root = true;
    r.derivation = "traverse inequalities (t^-8 + t^-5 + t^-2) F_i <= 2 F_{i-2}; beta = golden ratio";
  } else if (r.example == "grigorchuk") {
    r.derivation = "traverse inequalities T_{n+i} <= sum over e_{n-2+i}, i = 1, 2, 3; beta = 2";
  } else {
    r.derivation = "traverse inequalities through I_{n-1}, I_{n-2}, I_{n-3}; beta = 2";
  }
  return r;
}

}  // namespace growthlab
