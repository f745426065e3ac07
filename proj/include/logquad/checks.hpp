// SPDX-License-Identifier: Apache-2.0
//
// Sampled verification of the pointwise inequalities the error bounds rest on.
// Each margin function returns rhs − lhs; a negative margin beyond the
// tolerance is a violation.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logquad::checks {

inline constexpr double kTolerance = 1e-12;

struct CheckReport {
  std::string name;
  long samples = 0;
  long violations = 0;
  double worst_margin = 0.0;  // min over samples of rhs − lhs

  bool passed() const { return violations == 0; }
};

// |1/(1+e^{±(x+iy)})| ≤ 1/((1+e^{±x}) cos(y/2)), |y| < π. `sign` selects ±.
double logistic_margin_se(double x, double y, int sign);
// |1/(1+e^{±π sinh(x+iy)})| ≤ 1/((1+e^{±π sinh(x) cos y}) cos((π/2) sin y)), |y| < π/2.
double logistic_margin_de(double x, double y, int sign);

// |log(T/(1+e^{−(x+iy)}))| ≤ |log T| + log(1+e^{−x})/cos(y/2), |y| < π.
double log_margin_se(double x, double y, double T);
// |log(T/(1+e^{−π sinh(x+iy)}))| ≤ |log T| + log(1+e^{−π sinh(x) cos y})/(cos((π/2) sin y) cos y), |y| < π/2.
double log_margin_de(double x, double y, double T);

// |log(log(1+e^{x+iy}))| ≤ (1+c̃_d)/log(2+c̃_d) √(x²+y²) − log(log 2), |y| ≤ d < π.
double loglog_margin_se(double x, double y, double d);
// |log(log(1+e^{x}))| ≤ |x| − log(log 2).
double loglog_margin_se_real(double x);
// |log(log(1+e^{π sinh(x+iy)}))| ≤ π(1+c_d)/log(2+c_d) (1+|y|) cosh x − log(log 2), |y| ≤ d < π/2.
double loglog_margin_de(double x, double y, double d);
// |log(log(1+e^{π sinh x}))| ≤ |π sinh x| − log(log 2).
double loglog_margin_de_real(double x);

// Truncation-tail monotone functions.
double g_minus_se(double x, double alpha);     // −x e^{αx}, increasing for x ≤ −1/α
double g_plus_se(double x, double beta);       //  x e^{−βx}, decreasing for x ≥ 1/β
double g_minus_de(double x, double alpha);     // −sinh x cosh x e^{πα sinh x}
double g_plus_de(double x, double beta);       //  sinh x cosh x e^{−πβ sinh x}
double g_tilde_minus_de(double x, double alpha);  // cosh x e^{πα sinh x}
double g_tilde_plus_de(double x, double beta);    // cosh x e^{−πβ sinh x}

/// Margin of "G(x1) ≤ G(x2)" (increasing) or "G(x1) ≥ G(x2)" (decreasing).
double monotone_margin(double g1, double g2, bool increasing);

CheckReport check_logistic_bounds(long samples, std::uint64_t seed);
CheckReport check_log_bounds(long samples, std::uint64_t seed);
CheckReport check_loglog_bounds(long samples, std::uint64_t seed);
CheckReport check_monotonicity(long samples, std::uint64_t seed);

/// All four checks in a fixed order.
std::vector<CheckReport> run_all(long samples, std::uint64_t seed);

}  // namespace logquad::checks
