// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "logquad/method.hpp"
#include "logquad/profile.hpp"
#include "logquad/transforms.hpp"

namespace logquad {

/// sign · e^{log_abs}
template <typename Scalar>
struct LogValue {
  int sign = 1;
  Scalar log_abs{0};
};

/// An integrand over (0, T) or (0, ∞) with the profile(s) that certify it.
///
/// When `log_weighted` is set, `integrand` returns g(t) and the engine
/// supplies the log t factor from MapPoint::log_t. `log_space`, when present,
/// returns log|integrand| and is used to recover tail terms whose direct
/// evaluation hit ∞·0.
template <typename Scalar>
struct Problem {
  using Integrand = std::function<Scalar(const MapPoint<Scalar>&)>;
  using LogIntegrand = std::function<LogValue<Scalar>(const MapPoint<Scalar>&)>;

  std::string label;
  Family family = Family::Finite;
  double length = 1.0;  // T for the finite family
  Integrand integrand;
  LogIntegrand log_space;
  bool log_weighted = false;
  std::optional<Scalar> exact;
  std::optional<SingularityProfile> se_profile;
  std::optional<SingularityProfile> de_profile;

  /// Profile certifying `method` (SE rules read the SE profile, DE rules the DE one).
  const std::optional<SingularityProfile>& profile_for(Method method) const {
    return is_double_exponential(method) ? de_profile : se_profile;
  }

  MapKind map_kind(Method method) const { return {map_tag(method), length}; }
};

}  // namespace logquad
