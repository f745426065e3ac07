// SPDX-License-Identifier: Apache-2.0
//
// Built-in test integrals with known closed forms:
//
//   1: ∫₀¹ log t/(1+t) dt            = −π²/12
//   2: ∫₀¹ log t/(√t (1+t)) dt       = −4G          (G: Catalan's constant)
//   3: ∫₀^∞ log t/(t^{1/3}(1+t²)) dt = −π²/6
//   4: ∫₀^∞ e^{−t} log t/√t dt       = −√π(γ + 2 log 2)  (γ: Euler's constant)
#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "logquad/errors.hpp"
#include "logquad/problem.hpp"

namespace logquad {

/// G = Σ_{k≥0} (−1)^k/(2k+1)². Checked in the test suite against
/// G = (π/8) log(2+√3) + (3/8) Σ_{k≥0} (k!)²/((2k)!(2k+1)²) at 50 digits.
inline constexpr long double kCatalan = 0.91596559417721901505460351493238411L;

/// γ = lim (H_n − log n). Checked in the test suite against Boost's 50-digit constant.
inline constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;

inline constexpr int kBuiltinCount = 4;

template <typename Scalar>
Problem<Scalar> builtin(int id) {
  using std::exp;
  using std::log;
  using std::log1p;
  using std::sqrt;
  const Scalar pi = pi_value<Scalar>();
  const double e = std::numbers::e;

  Problem<Scalar> p;
  p.log_weighted = true;
  switch (id) {
    case 1: {
      p.label = "log(t)/(1+t) on (0,1)";
      p.family = Family::Finite;
      p.length = 1.0;
      p.integrand = [](const MapPoint<Scalar>& x) { return Scalar(1) / (Scalar(1) + x.t); };
      p.log_space = [](const MapPoint<Scalar>& x) { return LogValue<Scalar>{1, -log1p(x.t)}; };
      p.exact = -pi * pi / Scalar(12);
      p.se_profile = SingularityProfile{1.0 + e, 1.0, 1.0, 3.0, 1.0, Family::Finite};
      p.de_profile = SingularityProfile{3.0 * std::numbers::sqrt2, 1.0, 1.0, std::numbers::pi / 3.0, 1.0, Family::Finite};
      return p;
    }
    case 2: {
      p.label = "log(t)/(sqrt(t)(1+t)) on (0,1)";
      p.family = Family::Finite;
      p.length = 1.0;
      p.integrand = [](const MapPoint<Scalar>& x) { return Scalar(1) / (sqrt(x.t) * (Scalar(1) + x.t)); };
      p.log_space = [](const MapPoint<Scalar>& x) {
        return LogValue<Scalar>{1, -x.log_t / Scalar(2) - log1p(x.t)};
      };
      p.exact = Scalar(-4) * static_cast<Scalar>(kCatalan);
      p.se_profile = SingularityProfile{1.0 + e, 0.5, 1.0, 3.0, 1.0, Family::Finite};
      p.de_profile = SingularityProfile{3.0 * std::numbers::sqrt2, 0.5, 1.0, std::numbers::pi / 3.0, 1.0, Family::Finite};
      return p;
    }
    case 3: {
      p.label = "log(t)/(t^(1/3)(1+t^2)) on (0,inf)";
      p.family = Family::SemiAlg;
      // t^{-1/3} through log_t: t itself may sit near the under/overflow edge.
      p.integrand = [](const MapPoint<Scalar>& x) {
        return exp(-x.log_t / Scalar(3)) / (Scalar(1) + x.t * x.t);
      };
      p.log_space = [](const MapPoint<Scalar>& x) {
        // log(1+t²) = 2 log t + log1p(t⁻²) for t > 1.
        const Scalar log_den =
            x.log_t > Scalar(0) ? Scalar(2) * x.log_t + log1p(exp(Scalar(-2) * x.log_t)) : log1p(exp(Scalar(2) * x.log_t));
        return LogValue<Scalar>{1, -x.log_t / Scalar(3) - log_den};
      };
      p.exact = -pi * pi / Scalar(6);
      const SingularityProfile prof{1.0, 2.0 / 3.0, 4.0 / 3.0, 1.5, std::nullopt, Family::SemiAlg};
      p.se_profile = prof;
      p.de_profile = prof;
      return p;
    }
    case 4: {
      p.label = "exp(-t)log(t)/sqrt(t) on (0,inf)";
      p.family = Family::SemiExp;
      p.integrand = [](const MapPoint<Scalar>& x) { return exp(-x.t - x.log_t / Scalar(2)); };
      p.log_space = [](const MapPoint<Scalar>& x) { return LogValue<Scalar>{1, -x.t - x.log_t / Scalar(2)}; };
      p.exact = -sqrt(pi) * (static_cast<Scalar>(kEulerGamma) + Scalar(2) * log(Scalar(2)));
      p.se_profile = SingularityProfile{2.0 * std::numbers::pi / 3.0, 0.5, 1.0, 3.0, std::nullopt, Family::SemiExp};
      p.de_profile = SingularityProfile{2.0 * std::numbers::pi / 3.0, 0.5, 1.0, 1.5, std::nullopt, Family::SemiExp};
      return p;
    }
    default: throw UnknownExample("unknown example " + std::to_string(id) + " (expected 1..4)");
  }
}

}  // namespace logquad
