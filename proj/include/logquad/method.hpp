// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

#include "logquad/profile.hpp"
#include "logquad/transforms.hpp"

namespace logquad {

/// The eight quadrature rules with explicit error bounds. `*New` are the
/// log-and-algebraic-singularity rules; `*Existing` are the earlier log-only
/// rules on (0, T), kept for comparison.
enum class Method {
  SeFiniteNew,
  DeFiniteNew,
  SeAlgNew,
  DeAlgNew,
  SeExpNew,
  DeExpNew,
  SeFiniteExisting,
  DeFiniteExisting,
};

inline constexpr Method kAllMethods[] = {
    Method::SeFiniteNew, Method::DeFiniteNew, Method::SeAlgNew,         Method::DeAlgNew,
    Method::SeExpNew,    Method::DeExpNew,    Method::SeFiniteExisting, Method::DeFiniteExisting,
};

constexpr MapTag map_tag(Method m) {
  switch (m) {
    case Method::SeFiniteNew:
    case Method::SeFiniteExisting: return MapTag::SeFinite;
    case Method::DeFiniteNew:
    case Method::DeFiniteExisting: return MapTag::DeFinite;
    case Method::SeAlgNew: return MapTag::SeAlg;
    case Method::DeAlgNew: return MapTag::DeAlg;
    case Method::SeExpNew: return MapTag::SeExp;
    case Method::DeExpNew: return MapTag::DeExp;
  }
  return MapTag::SeFinite;
}

constexpr Family family_of(Method m) {
  switch (map_tag(m)) {
    case MapTag::SeFinite:
    case MapTag::DeFinite: return Family::Finite;
    case MapTag::SeAlg:
    case MapTag::DeAlg: return Family::SemiAlg;
    case MapTag::SeExp:
    case MapTag::DeExp: return Family::SemiExp;
  }
  return Family::Finite;
}

constexpr bool is_double_exponential(Method m) { return is_double_exponential(map_tag(m)); }

constexpr bool is_existing(Method m) { return m == Method::SeFiniteExisting || m == Method::DeFiniteExisting; }

constexpr std::string_view to_string(Method m) {
  switch (m) {
    case Method::SeFiniteNew: return "se-finite-new";
    case Method::DeFiniteNew: return "de-finite-new";
    case Method::SeAlgNew: return "se-alg-new";
    case Method::DeAlgNew: return "de-alg-new";
    case Method::SeExpNew: return "se-exp-new";
    case Method::DeExpNew: return "de-exp-new";
    case Method::SeFiniteExisting: return "se-finite-existing";
    case Method::DeFiniteExisting: return "de-finite-existing";
  }
  return "?";
}

/// User-facing rule names (`se-new`, `de-new`, `se-existing`, `de-existing`)
/// resolved against an interval family.
enum class RuleName { SeNew, DeNew, SeExisting, DeExisting };

std::optional<RuleName> parse_rule_name(std::string_view text);
std::string_view to_string(RuleName rule);

/// Resolves a rule against a family; nullopt when the combination has no
/// certified bound (existing rules exist only on finite intervals).
std::optional<Method> resolve_method(RuleName rule, Family family);

}  // namespace logquad
