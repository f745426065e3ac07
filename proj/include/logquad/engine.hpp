// SPDX-License-Identifier: Apache-2.0
//
// Truncated trapezoidal sums h Σ_{k=−M}^{N} f(map(kh)) map'(kh).
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logquad/accumulator.hpp"
#include "logquad/bounds.hpp"
#include "logquad/errors.hpp"
#include "logquad/plans.hpp"
#include "logquad/problem.hpp"
#include "logquad/transforms.hpp"

namespace logquad {

/// Working precision of the CLI and acceptance suite.
using WorkingScalar = long double;

/// Absolute slack allowed on top of a certified bound when comparing it with
/// an observed error; covers the rounding of the exact reference value.
inline constexpr double kRoundoffSlack = 1e-16;

template <typename Scalar>
struct QuadResult {
  Scalar approx{0};
  QuadPlan plan;
  std::optional<BoundReport> bound;
  int terms_evaluated = 0;
  int terms_underflowed = 0;
};

template <typename Scalar>
struct QuadTerms {
  std::vector<Scalar> values;  // f(map(kh))·map'(kh), k = −M … N, without the factor h
  int underflowed = 0;
};

namespace detail {

template <typename Scalar>
bool map_saturated(const MapPoint<Scalar>& p) {
  using std::isinf;
  return isinf(p.t) || p.t == Scalar(0) || isinf(p.weight) || p.weight == Scalar(0);
}

}  // namespace detail

/// Evaluates every term of the sum for `plan`.
///
/// A term that comes out NaN or ±∞ because the abscissa or weight saturated
/// (t = ∞ against a decaying integrand, t = 0 against a singular one) is
/// recomputed via `problem.log_space` if available, otherwise set to 0; both
/// cases count as underflowed unless the log form recovers a nonzero value.
/// Any other non-finite term throws NonFiniteTerm.
template <typename Scalar>
QuadTerms<Scalar> evaluate_terms(const Problem<Scalar>& problem, Method method, const QuadPlan& plan) {
  using std::abs;
  using std::exp;
  using std::isfinite;
  using std::log;

  if (problem.family != family_of(method)) {
    throw MismatchedFamily(std::string(to_string(method)) + " cannot integrate a " +
                           std::string(to_string(problem.family)) + " problem");
  }
  const MapKind kind = problem.map_kind(method);
  const Scalar h = static_cast<Scalar>(plan.h);

  QuadTerms<Scalar> out;
  out.values.reserve(static_cast<std::size_t>(plan.evals()));
  for (int k = -plan.M; k <= plan.N; ++k) {
    const MapPoint<Scalar> point = map_point(kind, static_cast<Scalar>(k) * h);
    const Scalar f = problem.integrand(point);
    Scalar term = f * point.weight;
    if (problem.log_weighted) term *= point.log_t;

    if (!isfinite(term)) {
      if (!detail::map_saturated(point)) {
        throw NonFiniteTerm("non-finite term at k = " + std::to_string(k) + " for " + problem.label);
      }
      term = Scalar(0);
      if (problem.log_space) {
        const LogValue<Scalar> lv = problem.log_space(point);
        Scalar log_abs = lv.log_abs + point.log_weight;
        int sign = lv.sign;
        if (problem.log_weighted) {
          log_abs += log(abs(point.log_t));
          if (point.log_t < Scalar(0)) sign = -sign;
        }
        const Scalar recovered = static_cast<Scalar>(sign) * exp(log_abs);
        if (isfinite(recovered)) term = recovered;
      }
      if (term == Scalar(0)) ++out.underflowed;
    } else if (term == Scalar(0) && detail::map_saturated(point)) {
      ++out.underflowed;
    }
    out.values.push_back(term);
  }
  return out;
}

/// Sum for an explicit plan; no bound is attached.
template <typename Scalar>
QuadResult<Scalar> integrate_with_plan(const Problem<Scalar>& problem, Method method, const QuadPlan& plan) {
  const QuadTerms<Scalar> terms = evaluate_terms(problem, method, plan);
  NeumaierSum<Scalar> sum;
  for (const Scalar& v : terms.values) sum += v;

  QuadResult<Scalar> r;
  r.approx = static_cast<Scalar>(plan.h) * sum.value();
  r.plan = plan;
  r.terms_evaluated = static_cast<int>(terms.values.size());
  r.terms_underflowed = terms.underflowed;
  return r;
}

/// Plans with the problem's profile for `method`, evaluates the sum and
/// attaches the certified bound.
template <typename Scalar>
QuadResult<Scalar> integrate(const Problem<Scalar>& problem, Method method, int n) {
  if (problem.family != family_of(method)) {
    throw MismatchedFamily(std::string(to_string(method)) + " cannot integrate a " +
                           std::string(to_string(problem.family)) + " problem");
  }
  const auto& profile = problem.profile_for(method);
  if (!profile) throw PreconditionViolated(problem.label + ": no profile for " + std::string(to_string(method)));
  QuadResult<Scalar> r = integrate_with_plan(problem, method, make_plan(method, n, *profile));
  r.bound = bound(method, n, *profile);
  return r;
}

/// One row of a convergence experiment.
struct SweepRecord {
  int n = 0;
  double h = 0.0;
  int M = 0;
  int N = 0;
  int evals = 0;
  double approx = 0.0;
  std::optional<double> abs_error;
  double bound = 0.0;
  bool skipped = false;
  std::string skip_reason;

  /// abs_error ≤ bound + kRoundoffSlack; rows without an error or skipped rows pass.
  bool within_bound() const { return skipped || !abs_error || *abs_error <= bound + kRoundoffSlack; }
};

/// Runs `method` at every n; n failing the rule's preconditions yields a
/// skipped row instead of an exception. `n_values` must be nonempty and
/// strictly increasing.
template <typename Scalar>
std::vector<SweepRecord> sweep(const Problem<Scalar>& problem, Method method, std::span<const int> n_values) {
  using std::abs;
  if (n_values.empty()) throw PreconditionViolated("sweep needs at least one n");
  for (std::size_t i = 1; i < n_values.size(); ++i) {
    if (n_values[i] <= n_values[i - 1]) throw PreconditionViolated("sweep n values must be strictly increasing");
  }
  if (problem.family != family_of(method)) {
    throw MismatchedFamily(std::string(to_string(method)) + " cannot integrate a " +
                           std::string(to_string(problem.family)) + " problem");
  }
  const auto& profile = problem.profile_for(method);
  if (!profile) throw PreconditionViolated(problem.label + ": no profile for " + std::string(to_string(method)));
  const BoundModel model(method, *profile);

  std::vector<SweepRecord> rows;
  rows.reserve(n_values.size());
  for (const int n : n_values) {
    SweepRecord row;
    row.n = n;
    try {
      const QuadPlan plan = make_plan(method, n, *profile);
      const BoundReport b = model.report(n);
      const QuadResult<Scalar> q = integrate_with_plan(problem, method, plan);
      row.h = plan.h;
      row.M = plan.M;
      row.N = plan.N;
      row.evals = plan.evals();
      row.approx = static_cast<double>(q.approx);
      if (problem.exact) row.abs_error = static_cast<double>(abs(q.approx - *problem.exact));
      row.bound = b.bound;
    } catch (const PreconditionViolated& e) {
      row = SweepRecord{};
      row.n = n;
      row.skipped = true;
      row.skip_reason = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace logquad
