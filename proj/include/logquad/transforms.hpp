// SPDX-License-Identifier: Apache-2.0
//
// SE/DE variable transformations onto (0, T) and (0, ∞).
//
// Every map is evaluated through the logistic function 1/(1+e^{-u}) and the
// softplus log(1+e^u) rather than through tanh, so that t and T − t both keep
// full relative accuracy near their respective endpoints.
#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string_view>
#include <type_traits>

namespace logquad {

enum class MapTag { SeFinite, DeFinite, SeAlg, DeAlg, SeExp, DeExp };

constexpr bool is_finite_map(MapTag tag) { return tag == MapTag::SeFinite || tag == MapTag::DeFinite; }

constexpr bool is_double_exponential(MapTag tag) {
  return tag == MapTag::DeFinite || tag == MapTag::DeAlg || tag == MapTag::DeExp;
}

constexpr std::string_view to_string(MapTag tag) {
  switch (tag) {
    case MapTag::SeFinite: return "se-finite";
    case MapTag::DeFinite: return "de-finite";
    case MapTag::SeAlg: return "se-alg";
    case MapTag::DeAlg: return "de-alg";
    case MapTag::SeExp: return "se-exp";
    case MapTag::DeExp: return "de-exp";
  }
  return "?";
}

/// A transformation together with its interval length. Only the finite maps
/// carry a length; for the semi-infinite ones it is ignored.
struct MapKind {
  MapTag tag = MapTag::SeFinite;
  double length = 1.0;

  static constexpr MapKind se_finite(double T) { return {MapTag::SeFinite, T}; }
  static constexpr MapKind de_finite(double T) { return {MapTag::DeFinite, T}; }
  static constexpr MapKind se_alg() { return {MapTag::SeAlg, 1.0}; }
  static constexpr MapKind de_alg() { return {MapTag::DeAlg, 1.0}; }
  static constexpr MapKind se_exp() { return {MapTag::SeExp, 1.0}; }
  static constexpr MapKind de_exp() { return {MapTag::DeExp, 1.0}; }

  constexpr bool finite() const { return is_finite_map(tag); }
};

/// One abscissa of a transformed trapezoidal sum.
///
/// `log_t` and `log_weight` are computed analytically from x, not as log(t):
/// the semi-infinite formulas multiply by log t far into the range where t
/// itself underflows or overflows.
template <typename Scalar>
struct MapPoint {
  Scalar t;
  std::optional<Scalar> t_complement;  // T − t, finite maps only
  Scalar weight;                       // dt/dx
  Scalar log_t;
  Scalar log_weight;
};

// ---------------------------------------------------------------------------
// Constants for builtin and user-defined scalar types

template <typename Scalar>
Scalar pi_value() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::numbers::pi_v<Scalar>;
  } else {
    using std::acos;
    return acos(Scalar(-1));
  }
}

template <typename Scalar>
Scalar e_value() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::numbers::e_v<Scalar>;
  } else {
    using std::exp;
    return exp(Scalar(1));
  }
}

template <typename Scalar>
Scalar ln2_value() {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::numbers::ln2_v<Scalar>;
  } else {
    using std::log;
    return log(Scalar(2));
  }
}

// ---------------------------------------------------------------------------
// Stable scalar kernels

/// 1/(1+e^{-u}) without overflow for either sign of u.
template <typename Scalar>
Scalar logistic(Scalar u) {
  using std::exp;
  if (u >= Scalar(0)) {
    return Scalar(1) / (Scalar(1) + exp(-u));
  }
  const Scalar e = exp(u);
  return e / (Scalar(1) + e);
}

/// log(1+e^u): u + log1p(e^{-u}) for u > 0, log1p(e^u) otherwise.
template <typename Scalar>
Scalar softplus(Scalar u) {
  using std::exp;
  using std::log1p;
  if (u > Scalar(0)) {
    return u + log1p(exp(-u));
  }
  return log1p(exp(u));
}

/// log(softplus(u)). For u ≪ 0, softplus(u) = e^u(1 − e^u/2 + …), so the
/// logarithm is u up to an absolute error below e^u/2; that shortcut is taken
/// once e^u drops under the scalar's epsilon.
template <typename Scalar>
Scalar log_softplus(Scalar u) {
  using std::exp;
  using std::log;
  using std::log1p;
  if (u < log(std::numeric_limits<Scalar>::epsilon())) {
    return u;
  }
  if (u < Scalar(-1)) {
    const Scalar e = exp(u);
    return u + log(log1p(e) / e);
  }
  return log(softplus(u));
}

/// log(cosh x) without overflow.
template <typename Scalar>
Scalar log_cosh(Scalar x) {
  using std::abs;
  using std::exp;
  using std::log1p;
  const Scalar a = abs(x);
  return a + log1p(exp(Scalar(-2) * a)) - ln2_value<Scalar>();
}

// ---------------------------------------------------------------------------

template <typename Scalar>
MapPoint<Scalar> map_point(const MapKind& kind, Scalar x) {
  using std::cosh;
  using std::exp;
  using std::log;
  using std::sinh;
  const Scalar pi = pi_value<Scalar>();
  const Scalar T = static_cast<Scalar>(kind.length);

  switch (kind.tag) {
    case MapTag::SeFinite:
    case MapTag::DeFinite: {
      const bool de = kind.tag == MapTag::DeFinite;
      const Scalar u = de ? pi * sinh(x) : x;
      const Scalar lo = logistic(u);
      const Scalar hi = logistic(-u);
      Scalar weight = T * lo * hi;
      Scalar log_weight = log(T) - softplus(u) - softplus(-u);
      if (de) {
        weight *= pi * cosh(x);
        log_weight += log(pi) + log_cosh(x);
      }
      return {T * lo, T * hi, weight, log(T) - softplus(-u), log_weight};
    }
    case MapTag::SeAlg: {
      const Scalar t = exp(x);
      return {t, std::nullopt, t, x, x};
    }
    case MapTag::DeAlg: {
      const Scalar s = pi / Scalar(2) * sinh(x);
      const Scalar t = exp(s);
      return {t, std::nullopt, pi / Scalar(2) * cosh(x) * t, s, log(pi / Scalar(2)) + log_cosh(x) + s};
    }
    case MapTag::SeExp:
      return {softplus(x), std::nullopt, logistic(x), log_softplus(x), -softplus(-x)};
    case MapTag::DeExp: {
      const Scalar u = pi * sinh(x);
      return {softplus(u), std::nullopt, pi * cosh(x) * logistic(u), log_softplus(u),
              log(pi) + log_cosh(x) - softplus(-u)};
    }
  }
  return {std::numeric_limits<Scalar>::quiet_NaN(), std::nullopt, std::numeric_limits<Scalar>::quiet_NaN(),
          std::numeric_limits<Scalar>::quiet_NaN(), std::numeric_limits<Scalar>::quiet_NaN()};
}

}  // namespace logquad
