// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "logquad/method.hpp"
#include "logquad/profile.hpp"

namespace logquad {

/// Mesh size and truncation of a sum h Σ_{k=−M}^{N}.
struct QuadPlan {
  int n = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;

  int evals() const { return M + N + 1; }
  bool operator==(const QuadPlan&) const = default;
};

/// γ = (2π − 1)/(2π) of the log-only rules (not Euler's constant).
double existing_gamma();

/// x / arsinh(x).
double q_ratio(double x);

/// Throws PreconditionViolated unless `profile` lies in the parameter range
/// of the error bound behind `method`; MismatchedFamily if the families differ.
void validate_profile(Method method, const SingularityProfile& profile);

/// Mesh size and truncation for `method` at level n, rounded exactly as the
/// selection formulas prescribe. Throws PreconditionViolated when n is below
/// the rule's smallness threshold; n is never adjusted.
QuadPlan make_plan(Method method, int n, const SingularityProfile& profile);

/// Smallest n ≥ 1 for which make_plan succeeds, searching up to `limit`;
/// returns 0 if none.
int min_admissible_n(Method method, const SingularityProfile& profile, int limit = 100000);

}  // namespace logquad
