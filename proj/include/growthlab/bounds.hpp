#pragma once

#include <string>
#include <vector>

#include "growthlab/transducer.hpp"

namespace growthlab {

// Coefficients from degree 0 upward.
struct Polynomial {
  std::vector<double> coefficients;
  double operator()(double x) const;
  int degree() const;
  std::string to_string(char var = 'x') const;
};

// Bisection on [lo, hi]; throws NoSignChange unless p(lo) and p(hi) differ in sign.
double positive_root(const Polynomial& p, double lo, double hi, double tol = 1e-12);
double alpha_exponent(double beta, double t0);
double hausdorff_bound(int pieces);

// Number of edges of I_n from the length recursions; no segment is built.
double segment_length(const std::string& example, int n);

struct BetaEstimate {
  double root;                // |I_n|^(1/n) at n_max
  double ratio;               // |I_n| / |I_{n-1}| at n_max
  std::vector<double> ratios; // index n - 1 for n = 2..n_max
};
BetaEstimate beta_estimate(const std::string& example, int n_max = 60);

// The polynomial whose positive root is the decay rate of traverse counts:
// x^3+x^2+x-2, s^8+s^5+s^2-2, x^4+x^3+x^2-2.
Polynomial decay_polynomial(const std::string& example);
// The same polynomial at 1/t; positive exactly for t below 1/eta.
double decay_denominator(const std::string& example, double t);

struct BoundReport {
  std::string example;
  Polynomial polynomial;
  double eta = 0;
  double t0 = 0;
  double beta = 0;
  double alpha = 0;
  // golden_mean: the headline exponent is eta itself; alpha above is the
  // exponent the general proposition gives for beta = phi.
  bool stated_exponent_is_root = false;
  std::string derivation;
  Json to_json() const;
};
BoundReport headline_report(const std::string& example);

}  // namespace growthlab
