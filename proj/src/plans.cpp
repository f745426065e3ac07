// SPDX-License-Identifier: Apache-2.0
#include "logquad/plans.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "logquad/errors.hpp"

namespace logquad {
namespace {

constexpr double kPi = std::numbers::pi;

std::string describe(Method method) { return std::string(to_string(method)); }

[[noreturn]] void violated(Method method, const std::string& what) {
  throw PreconditionViolated(describe(method) + ": " + what);
}

/// Argument c of arsinh in h = arsinh(c)/n for the DE-new rules.
double de_new_argument(Method method, int n, double d, double mu) {
  const double scale = method == Method::DeAlgNew ? 4.0 : 2.0;
  return scale * d * n / mu;
}

}  // namespace

double existing_gamma() { return (2.0 * kPi - 1.0) / (2.0 * kPi); }

double q_ratio(double x) {
  // x/arsinh x = 1 + x²/6 − 17x⁴/360 + …
  if (std::abs(x) < 1e-4) return 1.0 + x * x / 6.0;
  return x / std::asinh(x);
}

std::optional<RuleName> parse_rule_name(std::string_view text) {
  if (text == "se-new") return RuleName::SeNew;
  if (text == "de-new") return RuleName::DeNew;
  if (text == "se-existing") return RuleName::SeExisting;
  if (text == "de-existing") return RuleName::DeExisting;
  return std::nullopt;
}

std::string_view to_string(RuleName rule) {
  switch (rule) {
    case RuleName::SeNew: return "se-new";
    case RuleName::DeNew: return "de-new";
    case RuleName::SeExisting: return "se-existing";
    case RuleName::DeExisting: return "de-existing";
  }
  return "?";
}

std::optional<Method> resolve_method(RuleName rule, Family family) {
  switch (rule) {
    case RuleName::SeNew:
      return family == Family::Finite ? Method::SeFiniteNew
             : family == Family::SemiAlg ? Method::SeAlgNew
                                         : Method::SeExpNew;
    case RuleName::DeNew:
      return family == Family::Finite ? Method::DeFiniteNew
             : family == Family::SemiAlg ? Method::DeAlgNew
                                         : Method::DeExpNew;
    case RuleName::SeExisting:
      if (family == Family::Finite) return Method::SeFiniteExisting;
      return std::nullopt;
    case RuleName::DeExisting:
      if (family == Family::Finite) return Method::DeFiniteExisting;
      return std::nullopt;
  }
  return std::nullopt;
}

void validate_profile(Method method, const SingularityProfile& p) {
  if (p.family != family_of(method)) {
    throw MismatchedFamily(describe(method) + " requires a " + std::string(to_string(family_of(method))) +
                           " profile, got " + std::string(to_string(p.family)));
  }
  if (!(p.K > 0.0) || !std::isfinite(p.K)) violated(method, "K must be positive");
  if (!(p.d > 0.0) || !std::isfinite(p.d)) violated(method, "d must be positive");
  if (!is_existing(method)) {
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) violated(method, "alpha must be positive");
    if (!(p.beta > 0.0) || !std::isfinite(p.beta)) violated(method, "beta must be positive");
  }
  if (p.family == Family::Finite) {
    if (!p.T || !(*p.T > 0.0) || !std::isfinite(*p.T)) violated(method, "finite interval length T must be positive");
  }

  // Strip half-width limits d < π (SE on (0,T), SE exponential decay) and
  // d < π/2 (all DE rules, and both rules under algebraic decay).
  const bool half_pi = is_double_exponential(method) || p.family == Family::SemiAlg;
  const double limit = half_pi ? kPi / 2.0 : kPi;
  if (!(p.d < limit)) violated(method, half_pi ? "requires d < pi/2" : "requires d < pi");
  if (p.family == Family::SemiExp && !(p.alpha <= 1.0)) violated(method, "requires alpha <= 1");
}

QuadPlan make_plan(Method method, int n, const SingularityProfile& p) {
  validate_profile(method, p);
  if (n < 1) violated(method, "n must be a positive integer");

  const double d = p.d;
  QuadPlan plan{n, 0.0, 0, 0};

  switch (method) {
    case Method::SeFiniteNew:
    case Method::SeAlgNew:
    case Method::SeExpNew: {
      const double mu = p.mu();
      if (!(n >= 1.0 / (2.0 * kPi * d * mu))) violated(method, "requires n >= 1/(2 pi d mu)");
      plan.h = std::sqrt(2.0 * kPi * d / (mu * n));
      plan.M = static_cast<int>(std::ceil(mu / p.alpha * n));
      plan.N = static_cast<int>(std::ceil(mu / p.beta * n));
      return plan;
    }
    case Method::DeFiniteNew:
    case Method::DeAlgNew:
    case Method::DeExpNew: {
      const double mu = p.mu();
      const double scale = method == Method::DeAlgNew ? 4.0 : 2.0;
      if (!(n >= mu * std::sinh(1.0) / (scale * d))) {
        violated(method, method == Method::DeAlgNew ? "requires n >= mu sinh(1)/(4d)" : "requires n >= mu sinh(1)/(2d)");
      }
      const double c = de_new_argument(method, n, d, mu);
      plan.h = std::asinh(c) / n;
      if (!(plan.h <= kPi * d)) violated(method, "requires h <= pi d");
      const double q = q_ratio(c);
      plan.M = static_cast<int>(std::ceil(std::asinh(mu / p.alpha * q) / plan.h));
      plan.N = static_cast<int>(std::ceil(std::asinh(mu / p.beta * q) / plan.h));
      return plan;
    }
    case Method::SeFiniteExisting: {
      const double gamma = existing_gamma();
      plan.h = std::sqrt(2.0 * kPi * d / (gamma * n));
      plan.M = n;
      plan.N = static_cast<int>(std::ceil(gamma * n));
      return plan;
    }
    case Method::DeFiniteExisting: {
      const double gamma = existing_gamma();
      const double arg = 4.0 * d * n / gamma;
      if (!(arg > 1.0)) violated(method, "requires 4dn/gamma > 1 so that h > 0");
      plan.h = std::log(arg) / n;
      plan.M = n;
      plan.N = n - static_cast<int>(std::floor(std::log(1.0 / gamma) / plan.h));
      if (plan.N < 0) violated(method, "truncation index N = n - floor(log(1/gamma)/h) is negative");
      return plan;
    }
  }
  violated(method, "unknown method");
}

int min_admissible_n(Method method, const SingularityProfile& profile, int limit) {
  for (int n = 1; n <= limit; ++n) {
    try {
      make_plan(method, n, profile);
      return n;
    } catch (const PreconditionViolated&) {
    }
  }
  return 0;
}

}  // namespace logquad
