// SPDX-License-Identifier: Apache-2.0
#include "logquad/checks.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "logquad/errors.hpp"

namespace logquad::checks {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const double kLogLog2 = std::log(std::log(2.0));

// log(1+u) for |u| < 1, accurate for small |u|.
cplx log1p_c(cplx u) {
  const cplx v = 1.0 + u;
  if (v == cplx(1.0)) return u;
  return std::log(v) * u / (v - 1.0);
}

double softplus_r(double u) { return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u)); }

// log(1+e^w), continued analytically from the real axis across the strip.
cplx softplus_c(cplx w) {
  if (w.real() > 0.0) return w + log1p_c(std::exp(-w));
  return log1p_c(std::exp(w));
}

// log(log(1+e^w)), continued from the real axis. For Re w < 0 this is
// w + log(log1p(u)/u) with u = e^w; the ratio has positive real part for
// |u| < 1, so the principal log never jumps.
cplx loglog_c(cplx w) {
  if (w.real() < 0.0) {
    const cplx u = std::exp(w);
    if (std::abs(u) < 1e-18) return w;
    return w + std::log(log1p_c(u) / u);
  }
  return std::log(softplus_c(w));
}

// |1/(1+e^w)| without overflow.
double inv_one_plus_exp_abs(cplx w) {
  if (w.real() > 0.0) return std::exp(-w.real()) / std::abs(1.0 + std::exp(-w));
  return 1.0 / std::abs(1.0 + std::exp(w));
}

void record(CheckReport& r, double margin, bool& violated) {
  if (std::isnan(margin)) {
    violated = true;
    r.worst_margin = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  if (!std::isnan(r.worst_margin)) r.worst_margin = std::min(r.worst_margin, margin);
  if (margin < -kTolerance) violated = true;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // Open interval (−a, a).
  double symmetric_open(double a) {
    for (;;) {
      const double v = uniform(-a, a);
      if (v != -a) return v;
    }
  }

  // (lo, hi]
  double left_open(double lo, double hi) { return hi - uniform(0.0, 1.0) * (hi - lo); }

  std::pair<double, double> ordered(double lo, double hi) {
    double a = uniform(lo, hi), b = uniform(lo, hi);
    if (a > b) std::swap(a, b);
    return {a, b};
  }

 private:
  std::mt19937_64 rng_;
};

CheckReport start(const char* name) {
  CheckReport r;
  r.name = name;
  r.worst_margin = std::numeric_limits<double>::infinity();
  return r;
}

void require_samples(long samples) {
  if (samples < 1) throw PreconditionViolated("samples must be >= 1");
}

// Range of x for the DE log and log-log variants; beyond it |π sinh x|
// exceeds ~2e3 and double rounding of the lhs approaches the tolerance.
constexpr double kDeLogRange = 6.0;

}  // namespace

double logistic_margin_se(double x, double y, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double lhs = inv_one_plus_exp_abs(s * cplx(x, y));
  const double rhs = 1.0 / ((1.0 + std::exp(s * x)) * std::cos(y / 2.0));
  return rhs - lhs;
}

double logistic_margin_de(double x, double y, int sign) {
  const double s = sign >= 0 ? 1.0 : -1.0;
  const double lhs = inv_one_plus_exp_abs(s * kPi * std::sinh(cplx(x, y)));
  const double rhs = 1.0 / ((1.0 + std::exp(s * kPi * std::sinh(x) * std::cos(y))) * std::cos(kPi / 2.0 * std::sin(y)));
  return rhs - lhs;
}

double log_margin_se(double x, double y, double T) {
  const double lhs = std::abs(std::log(T) - softplus_c(-cplx(x, y)));
  const double rhs = std::abs(std::log(T)) + softplus_r(-x) / std::cos(y / 2.0);
  return rhs - lhs;
}

double log_margin_de(double x, double y, double T) {
  const double lhs = std::abs(std::log(T) - softplus_c(-kPi * std::sinh(cplx(x, y))));
  const double rhs = std::abs(std::log(T)) + softplus_r(-kPi * std::sinh(x) * std::cos(y)) /
                                                 (std::cos(kPi / 2.0 * std::sin(y)) * std::cos(y));
  return rhs - lhs;
}

double loglog_margin_se(double x, double y, double d) {
  const double ct = 1.0 / std::cos(d / 2.0);
  const double lhs = std::abs(loglog_c(cplx(x, y)));
  const double rhs = (1.0 + ct) / std::log(2.0 + ct) * std::hypot(x, y) - kLogLog2;
  return rhs - lhs;
}

double loglog_margin_se_real(double x) {
  const double lhs = std::abs(loglog_c(cplx(x, 0.0)));
  return std::abs(x) - kLogLog2 - lhs;
}

double loglog_margin_de(double x, double y, double d) {
  const double c = 1.0 / std::cos(kPi / 2.0 * std::sin(d));
  const double lhs = std::abs(loglog_c(kPi * std::sinh(cplx(x, y))));
  const double rhs = kPi * (1.0 + c) / std::log(2.0 + c) * (1.0 + std::abs(y)) * std::cosh(x) - kLogLog2;
  return rhs - lhs;
}

double loglog_margin_de_real(double x) {
  const double lhs = std::abs(loglog_c(cplx(kPi * std::sinh(x), 0.0)));
  return std::abs(kPi * std::sinh(x)) - kLogLog2 - lhs;
}

double g_minus_se(double x, double alpha) { return -x * std::exp(alpha * x); }
double g_plus_se(double x, double beta) { return x * std::exp(-beta * x); }
double g_minus_de(double x, double alpha) { return -std::sinh(x) * std::cosh(x) * std::exp(kPi * alpha * std::sinh(x)); }
double g_plus_de(double x, double beta) { return std::sinh(x) * std::cosh(x) * std::exp(-kPi * beta * std::sinh(x)); }
double g_tilde_minus_de(double x, double alpha) { return std::cosh(x) * std::exp(kPi * alpha * std::sinh(x)); }
double g_tilde_plus_de(double x, double beta) { return std::cosh(x) * std::exp(-kPi * beta * std::sinh(x)); }

double monotone_margin(double g1, double g2, bool increasing) { return increasing ? g2 - g1 : g1 - g2; }

CheckReport check_logistic_bounds(long samples, std::uint64_t seed) {
  require_samples(samples);
  CheckReport r = start("logistic_bounds");
  Sampler rng(seed);
  for (long i = 0; i < samples; ++i) {
    const double x = rng.uniform(-30.0, 30.0);
    const double y_se = rng.symmetric_open(kPi);
    const double y_de = rng.symmetric_open(kPi / 2.0);
    bool violated = false;
    for (const int sign : {1, -1}) {
      record(r, logistic_margin_se(x, y_se, sign), violated);
      record(r, logistic_margin_de(x, y_de, sign), violated);
    }
    r.violations += violated;
    ++r.samples;
  }
  return r;
}

CheckReport check_log_bounds(long samples, std::uint64_t seed) {
  require_samples(samples);
  CheckReport r = start("log_bounds");
  Sampler rng(seed);
  for (long i = 0; i < samples; ++i) {
    const double T = rng.uniform(0.1, 10.0);
    const double x_se = rng.uniform(-30.0, 30.0);
    const double y_se = rng.symmetric_open(kPi);
    const double x_de = rng.uniform(-kDeLogRange, kDeLogRange);
    const double y_de = rng.symmetric_open(kPi / 2.0);
    bool violated = false;
    record(r, log_margin_se(x_se, y_se, T), violated);
    record(r, log_margin_de(x_de, y_de, T), violated);
    r.violations += violated;
    ++r.samples;
  }
  return r;
}

CheckReport check_loglog_bounds(long samples, std::uint64_t seed) {
  require_samples(samples);
  CheckReport r = start("loglog_bounds");
  Sampler rng(seed);
  for (long i = 0; i < samples; ++i) {
    const double d_se = rng.symmetric_open(kPi / 2.0) + kPi / 2.0;  // (0, π)
    const double d_de = rng.symmetric_open(kPi / 4.0) + kPi / 4.0;  // (0, π/2)
    const double x_se = rng.uniform(-30.0, 30.0);
    const double y_se = rng.uniform(-d_se, d_se);
    const double x_de = rng.uniform(-kDeLogRange, kDeLogRange);
    const double y_de = rng.uniform(-d_de, d_de);
    bool violated = false;
    record(r, loglog_margin_se(x_se, y_se, d_se), violated);
    record(r, loglog_margin_se_real(x_se), violated);
    record(r, loglog_margin_de(x_de, y_de, d_de), violated);
    record(r, loglog_margin_de_real(x_de), violated);
    r.violations += violated;
    ++r.samples;
  }
  return r;
}

CheckReport check_monotonicity(long samples, std::uint64_t seed) {
  require_samples(samples);
  CheckReport r = start("monotonicity");
  Sampler rng(seed);
  for (long i = 0; i < samples; ++i) {
    const double alpha = rng.left_open(0.05, 4.0);
    const double beta = rng.left_open(0.05, 4.0);
    bool violated = false;

    const double se_left = -1.0 / alpha;
    const auto [a1, a2] = rng.ordered(se_left - 30.0, se_left);
    record(r, monotone_margin(g_minus_se(a1, alpha), g_minus_se(a2, alpha), true), violated);

    const double se_right = 1.0 / beta;
    const auto [b1, b2] = rng.ordered(se_right, se_right + 30.0);
    record(r, monotone_margin(g_plus_se(b1, beta), g_plus_se(b2, beta), false), violated);

    const double de_left = -std::asinh(2.0 / (kPi * alpha));
    const auto [c1, c2] = rng.ordered(de_left - 4.0, de_left);
    record(r, monotone_margin(g_minus_de(c1, alpha), g_minus_de(c2, alpha), true), violated);
    record(r, monotone_margin(g_tilde_minus_de(c1, alpha), g_tilde_minus_de(c2, alpha), true), violated);

    const double de_right = std::asinh(2.0 / (kPi * beta));
    const auto [e1, e2] = rng.ordered(de_right, de_right + 4.0);
    record(r, monotone_margin(g_plus_de(e1, beta), g_plus_de(e2, beta), false), violated);
    record(r, monotone_margin(g_tilde_plus_de(e1, beta), g_tilde_plus_de(e2, beta), false), violated);

    r.violations += violated;
    ++r.samples;
  }
  return r;
}

std::vector<CheckReport> run_all(long samples, std::uint64_t seed) {
  return {check_logistic_bounds(samples, seed), check_log_bounds(samples, seed), check_loglog_bounds(samples, seed),
          check_monotonicity(samples, seed)};
}

}  // namespace logquad::checks
