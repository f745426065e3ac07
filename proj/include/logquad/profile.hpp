// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <string_view>

namespace logquad {

/// Interval family of an integral: (0, T), or (0, ∞) with algebraic or
/// exponential decay at infinity.
enum class Family { Finite, SemiAlg, SemiExp };

constexpr std::string_view to_string(Family family) {
  switch (family) {
    case Family::Finite: return "finite";
    case Family::SemiAlg: return "semi-infinite/algebraic";
    case Family::SemiExp: return "semi-infinite/exponential";
  }
  return "?";
}

/// Constants of the analyticity/growth assumption an integrand satisfies.
///
/// Finite:  |f(z)| ≤ K |z|^{α−1} |T−z|^{β−1} |log z|
/// SemiAlg: |f(z)| ≤ K |z|^{α−1} / |1+z²|^{(α+β)/2} |log z|
/// SemiExp: |f(z)| ≤ K |z/(1+z)|^{α−1} |e^{−z}|^β |log z|
///
/// on the image of the strip |Im ζ| < d under the chosen map.
struct SingularityProfile {
  double K = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double d = 1.0;
  std::optional<double> T;  // finite family only
  Family family = Family::Finite;

  double mu() const { return std::min(alpha, beta); }
  double length() const { return T.value_or(1.0); }
};

}  // namespace logquad
