#pragma once

#include <cstdint>
#include <functional>

namespace tokenstat {

// Hurwitz zeta ζ(s, q) = Σ_{k≥0} (k+q)^(-s), s > 1, q > 0.
// Direct summation up to a pivot, Euler-Maclaurin tail beyond it; accurate
// to near machine precision for s in (1, ~60].
double hurwitz_zeta(double s, double q);

// Riemann zeta ζ(s) = hurwitz_zeta(s, 1).
double riemann_zeta(double s);

// Digamma ψ(x) for x > 0 (asymptotic series with upward recurrence).
double digamma(double x);

// Standard normal CDF.
double normal_cdf(double z);

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
};

// Brent's method on [lo, hi]. `f` must be continuous; unimodality is the
// caller's problem. Tolerance is on x.
ScalarMinimum brent_minimize(const std::function<double(double)>& f, double lo,
                             double hi, double xtol = 1e-10,
                             int max_iter = 200);

}  // namespace tokenstat
