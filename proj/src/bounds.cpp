// SPDX-License-Identifier: Apache-2.0
#include "logquad/bounds.hpp"

#include <cmath>
#include <numbers>

#include "logquad/errors.hpp"
#include "logquad/plans.hpp"

namespace logquad {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

// Constants are written with the same grouping as the closed forms they come
// from so they can be checked term by term.

// Finite interval, SE, |f| ≤ K|z|^{α−1}|T−z|^{β−1}|log z|.
double constant_se_finite_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, T = p.length(), d = p.d, mu = a.mu, l_mu = a.l_mu;
  const double abs_log_T = std::abs(std::log(T));
  const double cos_half = std::cos(d / 2.0);
  return K * std::pow(T, p.alpha + p.beta - 1.0) / mu *
         ((4.0 * abs_log_T * cos_half + 2.0 * l_mu) /
              ((1.0 - std::exp(-std::sqrt(2.0 * kPi * d * mu))) * std::pow(cos_half, p.alpha + p.beta + 1.0)) +
          2.0 * abs_log_T + l_mu + std::sqrt(2.0 * kPi * d / mu));
}

// Finite interval, DE.
double constant_de_finite_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, T = p.length(), d = p.d, mu = a.mu, l_mu = a.l_mu, c_d = a.c_d;
  const double abs_log_T = std::abs(std::log(T));
  return K * std::pow(T, p.alpha + p.beta - 1.0) / mu *
         (std::pow(c_d, p.alpha + p.beta) * (4.0 * abs_log_T * std::cos(d) + 2.0 * l_mu * c_d) /
              ((1.0 - std::exp(-kPi * mu * q_ratio(2.0 * d / mu))) * std::pow(std::cos(d), 2)) +
          2.0 * abs_log_T + l_mu + 2.0 * kPi * d / mu);
}

// (0,∞), algebraic decay, SE.
double constant_se_alg_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, d = p.d, mu = a.mu;
  return 2.0 * K / (mu * mu) *
         (2.0 * (1.0 + mu * d) /
              ((1.0 - std::exp(-std::sqrt(2.0 * kPi * d * mu))) * std::pow(std::cos(d), (p.alpha + p.beta) / 2.0)) +
          std::sqrt(2.0 * kPi * d * mu) + 1.0);
}

// (0,∞), algebraic decay, DE.
double constant_de_alg_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, d = p.d, mu = a.mu, c_d = a.c_d;
  return 2.0 * K / (mu * mu) *
         ((2.0 + kPi * mu * std::cos(d)) * std::pow(c_d, (p.alpha + p.beta) / 2.0) /
              ((1.0 - std::exp(-kPi * mu * q_ratio(4.0 * d / mu) / 2.0)) * std::pow(std::cos(d), 2)) +
          2.0 * kPi * d + 1.0);
}

// (0,∞), exponential decay, SE.
double constant_se_exp_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, d = p.d, mu = a.mu, ct = a.c_tilde_d, Lt = a.L_tilde_d, alpha = p.alpha;
  const double log_log_2 = std::log(std::log(2.0));
  return 2.0 * K / (mu * mu) *
         (2.0 * std::pow(Lt, 1.0 - alpha) * std::pow(ct, alpha + p.beta) *
              ((1.0 + ct) * (1.0 + mu * d) - mu * log_log_2 * std::log(2.0 + ct)) /
              ((1.0 - std::exp(-std::sqrt(2.0 * kPi * d * mu))) * std::log(2.0 + ct)) +
          std::exp(kPi * (1.0 - alpha) / 12.0) * (std::sqrt(2.0 * kPi * d * mu) + 1.0 - mu * log_log_2));
}

// (0,∞), exponential decay, DE. Stated against the exponential-decay
// assumption, which is what its truncation and discretization estimates use.
double constant_de_exp_new(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, d = p.d, mu = a.mu, c_d = a.c_d, L_d = a.L_d, alpha = p.alpha;
  const double log_log_2 = std::log(std::log(2.0));
  return 2.0 * K / (mu * mu) *
         (2.0 * std::pow(L_d, 1.0 - alpha) * std::pow(c_d, alpha + p.beta) *
              ((1.0 + c_d) * (1.0 + d) * (1.0 + kPi * mu * std::cos(d)) -
               mu * log_log_2 * std::log(2.0 + c_d) * std::cos(d)) /
              ((1.0 - std::exp(-kPi * mu * q_ratio(2.0 * d / mu))) * std::log(2.0 + c_d) *
               std::pow(std::cos(d), 2)) +
          std::exp(kPi * (1.0 - alpha) / 12.0) * (2.0 * kPi * d + 1.0 - mu * log_log_2));
}

// Finite interval, SE, |f| ≤ K|log z|.
double constant_se_finite_existing(const SingularityProfile& p) {
  const double K = p.K, T = p.length(), d = p.d, gamma = existing_gamma();
  const double cos_half = std::cos(d / 2.0);
  return 2.0 * K * T / (gamma * std::pow(cos_half, 1.0 / (2.0 * kPi))) *
         std::sqrt(kPi * kPi + std::pow(std::log(T / cos_half), 2)) *
         (2.0 / ((1.0 - std::exp(-std::sqrt(2.0 * kPi * d * gamma))) * std::pow(cos_half, gamma + 1.0)) + 1.0);
}

// Finite interval, DE, |f| ≤ K|log z|.
double constant_de_finite_existing(const SingularityProfile& p, const AuxConstants& a) {
  const double K = p.K, T = p.length(), d = p.d, c_d = a.c_d, gamma = existing_gamma();
  return 2.0 * K * T * std::pow(c_d, 1.0 / (2.0 * kPi)) / gamma *
         std::sqrt(kPi * kPi + std::pow(std::log(T * c_d), 2)) *
         (2.0 * std::pow(c_d, gamma + 1.0) / ((1.0 - std::exp(-kPi * gamma * kE / 2.0)) * std::cos(d)) +
          std::exp(kPi / 2.0));
}

double amplitude(Method method, int n) {
  switch (method) {
    case Method::SeFiniteNew:
    case Method::SeAlgNew:
    case Method::SeExpNew: return std::sqrt(static_cast<double>(n));
    case Method::DeFiniteNew:
    case Method::DeAlgNew:
    case Method::DeExpNew: return static_cast<double>(n);
    case Method::SeFiniteExisting:
    case Method::DeFiniteExisting: return 1.0;
  }
  return 1.0;
}

}  // namespace

AuxConstants aux_constants(const SingularityProfile& p) {
  AuxConstants a{};
  a.mu = p.mu();
  a.l_mu = 2.0 * std::log(2.0) + 1.0 / a.mu;
  a.c_d = 1.0 / std::cos(kPi / 2.0 * std::sin(p.d));
  a.c_tilde_d = 1.0 / std::cos(p.d / 2.0);
  a.L_d = (1.0 + std::log(2.0 + a.c_d)) / std::log(2.0 + a.c_d) * (1.0 + a.c_d);
  a.L_tilde_d = (1.0 + std::log(2.0 + a.c_tilde_d)) / std::log(2.0 + a.c_tilde_d) * (1.0 + a.c_tilde_d);
  return a;
}

double decay_exponent(Method method, int n, const SingularityProfile& p) {
  const double d = p.d, mu = p.mu();
  switch (method) {
    case Method::SeFiniteNew:
    case Method::SeAlgNew:
    case Method::SeExpNew: return std::sqrt(2.0 * kPi * d * mu * n);
    case Method::DeFiniteNew:
    case Method::DeExpNew: return 2.0 * kPi * d * n / std::asinh(2.0 * d * n / mu);
    case Method::DeAlgNew: return 2.0 * kPi * d * n / std::asinh(4.0 * d * n / mu);
    case Method::SeFiniteExisting: return std::sqrt(2.0 * kPi * d * existing_gamma() * n);
    case Method::DeFiniteExisting: return 2.0 * kPi * d * n / std::log(4.0 * d * n / existing_gamma());
  }
  return 0.0;
}

BoundModel::BoundModel(Method method, const SingularityProfile& profile)
    : method_(method), profile_(profile), C_(0.0) {
  validate_profile(method, profile);
  const AuxConstants a = aux_constants(profile);
  switch (method) {
    case Method::SeFiniteNew: C_ = constant_se_finite_new(profile, a); break;
    case Method::DeFiniteNew: C_ = constant_de_finite_new(profile, a); break;
    case Method::SeAlgNew: C_ = constant_se_alg_new(profile, a); break;
    case Method::DeAlgNew: C_ = constant_de_alg_new(profile, a); break;
    case Method::SeExpNew: C_ = constant_se_exp_new(profile, a); break;
    case Method::DeExpNew: C_ = constant_de_exp_new(profile, a); break;
    case Method::SeFiniteExisting: C_ = constant_se_finite_existing(profile); break;
    case Method::DeFiniteExisting: C_ = constant_de_finite_existing(profile, a); break;
  }
}

BoundReport BoundModel::report(int n) const {
  make_plan(method_, n, profile_);
  BoundReport r{};
  r.C = C_;
  r.amplitude = amplitude(method_, n);
  r.decay = std::exp(-decay_exponent(method_, n, profile_));
  r.bound = r.C * r.amplitude * r.decay;
  return r;
}

BoundReport bound(Method method, int n, const SingularityProfile& profile) {
  return BoundModel(method, profile).report(n);
}

}  // namespace logquad
