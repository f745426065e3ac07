// SPDX-License-Identifier: Apache-2.0
//
// Explicit a-priori error bounds |I − h Σ_{k=−M}^{N} F(kh)| ≤ C · amplitude(n) · decay(n).
#pragma once

#include "logquad/method.hpp"
#include "logquad/profile.hpp"

namespace logquad {

struct AuxConstants {
  double mu;         // min{α, β}
  double l_mu;       // 2 log 2 + 1/μ
  double c_d;        // 1/cos((π/2) sin d)
  double c_tilde_d;  // 1/cos(d/2)
  double L_d;        // (1 + log(2 + c_d))/log(2 + c_d) · (1 + c_d)
  double L_tilde_d;  // same with c̃_d
};

AuxConstants aux_constants(const SingularityProfile& profile);

struct BoundReport {
  double C;          // n-independent constant
  double amplitude;  // √n, n or 1
  double decay;      // e^{−rate(n)}
  double bound;      // C · amplitude · decay
};

/// Exponent rate(n) in decay = e^{−rate(n)}:
///   √(2πdμn) (SE new), 2πdn/arsinh(2dn/μ) (DE new, finite and exp),
///   2πdn/arsinh(4dn/μ) (DE new, algebraic), √(2πdγn) (SE existing),
///   2πdn/log(4dn/γ) (DE existing).
double decay_exponent(Method method, int n, const SingularityProfile& profile);

/// Bound of one method under one profile. The constant C and its
/// n-independent subterms are evaluated once at construction.
class BoundModel {
 public:
  /// Throws PreconditionViolated / MismatchedFamily for an invalid profile.
  BoundModel(Method method, const SingularityProfile& profile);

  Method method() const { return method_; }
  const SingularityProfile& profile() const { return profile_; }
  double constant() const { return C_; }

  /// Throws PreconditionViolated when n fails the rule's smallness test.
  BoundReport report(int n) const;

 private:
  Method method_;
  SingularityProfile profile_;
  double C_;
};

BoundReport bound(Method method, int n, const SingularityProfile& profile);

}  // namespace logquad
