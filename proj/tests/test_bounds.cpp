// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "logquad/bounds.hpp"
#include "logquad/errors.hpp"
#include "logquad/plans.hpp"

using namespace logquad;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
const double kSqrt18 = 3.0 * std::numbers::sqrt2;

const SingularityProfile ex1_se{1.0 + kE, 1.0, 1.0, 3.0, 1.0, Family::Finite};
const SingularityProfile ex1_de{kSqrt18, 1.0, 1.0, kPi / 3.0, 1.0, Family::Finite};
const SingularityProfile ex2_se{1.0 + kE, 0.5, 1.0, 3.0, 1.0, Family::Finite};
const SingularityProfile ex2_de{kSqrt18, 0.5, 1.0, kPi / 3.0, 1.0, Family::Finite};
const SingularityProfile ex3{1.0, 2.0 / 3.0, 4.0 / 3.0, 1.5, {}, Family::SemiAlg};
const SingularityProfile ex4_se{2.0 * kPi / 3.0, 0.5, 1.0, 3.0, {}, Family::SemiExp};
const SingularityProfile ex4_de{2.0 * kPi / 3.0, 0.5, 1.0, 1.5, {}, Family::SemiExp};

struct Golden {
  Method method;
  const SingularityProfile* profile;
  int n;
  double C;
  double bound;
};

// mpmath at 400 digits (tests/oracle/oracle.py).
const Golden kGolden[] = {
    {Method::SeFiniteNew, &ex1_se, 100, 50822.522834119823, 7.0907847579432947e-14},
    {Method::SeFiniteExisting, &ex1_se, 100, 14857.79135706416, 7.6214773337063271e-14},
    {Method::DeFiniteNew, &ex1_de, 50, 9030.0513681409143, 8.3359505199416083e-22},
    {Method::DeFiniteNew, &ex1_de, 20, 9030.0513681409143, 2.2431422295068492e-8},
    {Method::DeFiniteExisting, &ex1_de, 50, 3557.7517682165021, 4.5418420284997119e-23},
    {Method::SeFiniteNew, &ex2_se, 20, 39758.103576437374, 0.19379906708959444},
    {Method::DeFiniteNew, &ex2_de, 20, 12223.592343673961, 1.6937264315382665e-6},
    {Method::SeAlgNew, &ex3, 20, 292.83461972012246, 0.017729802749952933},
    {Method::DeAlgNew, &ex3, 20, 510669.82199657568, 1.2630437466379332e-7},
    {Method::DeAlgNew, &ex3, 40, 510669.82199657568, 2.661534410030096e-18},
    {Method::SeExpNew, &ex4_se, 20, 116933.33576326593, 0.56998622529937818},
    {Method::DeExpNew, &ex4_de, 20, 61580320148.518801, 0.0014250612004142003},
    {Method::DeExpNew, &ex4_de, 40, 61580320148.518801, 7.4492230601015774e-15},
};

}  // namespace

TEST_CASE("auxiliary constants") {
  const auto a = aux_constants(ex1_de);
  CHECK(a.mu == 1.0);
  CHECK(a.l_mu == doctest::Approx(2.3862943611198906).epsilon(1e-15));
  CHECK(a.c_d == doctest::Approx(1.0 / std::cos(kPi / 2.0 * std::sqrt(3.0) / 2.0)).epsilon(1e-15));
  CHECK(a.c_tilde_d == doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-15));
  const auto small = aux_constants({1.0, 0.5, 2.0, 1e-9, 1.0, Family::Finite});
  CHECK(small.mu == 0.5);
  CHECK(small.l_mu == doctest::Approx(2.0 * std::log(2.0) + 2.0).epsilon(1e-15));
  CHECK(small.c_d == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(small.c_tilde_d == doctest::Approx(1.0).epsilon(1e-15));
  const double L1 = (1.0 + std::log(3.0)) / std::log(3.0) * 2.0;
  CHECK(small.L_d == doctest::Approx(L1).epsilon(1e-12));
  CHECK(small.L_tilde_d == doctest::Approx(L1).epsilon(1e-12));
}

TEST_CASE("golden constants and bounds") {
  for (const auto& g : kGolden) {
    INFO(to_string(g.method), " n=", g.n);
    const BoundReport r = bound(g.method, g.n, *g.profile);
    CHECK(r.C == doctest::Approx(g.C).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(g.bound).epsilon(1e-12));
    CHECK(r.bound == doctest::Approx(r.C * r.amplitude * r.decay).epsilon(1e-15));
  }
}

TEST_CASE("amplitudes") {
  CHECK(bound(Method::SeFiniteNew, 49, ex1_se).amplitude == doctest::Approx(7.0));
  CHECK(bound(Method::DeFiniteNew, 49, ex1_de).amplitude == 49.0);
  CHECK(bound(Method::SeFiniteExisting, 49, ex1_se).amplitude == 1.0);
  CHECK(bound(Method::DeFiniteExisting, 49, ex1_de).amplitude == 1.0);
}

TEST_CASE("DE bounds at n = 50 on Example 1") {
  // The log-only DE rule has the smaller bound here; its decay exponent
  // overtakes only for larger n.
  const double fresh = bound(Method::DeFiniteNew, 50, ex1_de).bound;
  const double old = bound(Method::DeFiniteExisting, 50, ex1_de).bound;
  CHECK(old < fresh);
}

TEST_CASE("decay exponent of the new rules beats the log-only ones") {
  for (int n = 10; n <= 400; n += 10) {
    CHECK(decay_exponent(Method::SeFiniteNew, n, ex1_se) > decay_exponent(Method::SeFiniteExisting, n, ex1_se));
  }
  for (int n = 50; n <= 400; n += 10) {
    CHECK(decay_exponent(Method::DeFiniteNew, n, ex1_de) > decay_exponent(Method::DeFiniteExisting, n, ex1_de));
  }
}

TEST_CASE("DE decay equals exp(-pi mu q(2dn/mu))") {
  for (const auto* p : {&ex1_de, &ex2_de, &ex4_de}) {
    for (int n = 1; n <= 60; ++n) {
      const double c = 2.0 * p->d * n / p->mu();
      CHECK(decay_exponent(Method::DeFiniteNew, n, *p) == doctest::Approx(kPi * p->mu() * q_ratio(c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("bounds are linear in K") {
  for (const auto& g : kGolden) {
    SingularityProfile twice = *g.profile;
    twice.K *= 2.0;
    const double b1 = bound(g.method, g.n, *g.profile).bound;
    const double b2 = bound(g.method, g.n, twice).bound;
    CHECK(b2 == 2.0 * b1);
    SingularityProfile thrice = *g.profile;
    thrice.K *= 3.0;
    CHECK(bound(g.method, g.n, thrice).bound == doctest::Approx(3.0 * b1).epsilon(1e-15));
  }
}

TEST_CASE("bounds decrease strictly in n") {
  const std::pair<Method, const SingularityProfile*> cases[] = {
      {Method::SeFiniteNew, &ex1_se}, {Method::DeFiniteNew, &ex1_de},     {Method::SeAlgNew, &ex3},
      {Method::DeAlgNew, &ex3},       {Method::SeExpNew, &ex4_se},        {Method::DeExpNew, &ex4_de},
      {Method::SeFiniteExisting, &ex1_se}, {Method::DeFiniteExisting, &ex1_de},
  };
  for (const auto& [m, p] : cases) {
    const BoundModel model(m, *p);
    const int n0 = min_admissible_n(m, *p);
    double prev = model.report(n0).bound;
    for (int n = n0 + 1; n <= 200; ++n) {
      const double b = model.report(n).bound;
      INFO(to_string(m), " n=", n);
      CHECK(b < prev);
      prev = b;
    }
  }
}

TEST_CASE("bound model agrees with the free function") {
  const BoundModel model(Method::DeAlgNew, ex3);
  CHECK(model.constant() == bound(Method::DeAlgNew, 25, ex3).C);
  CHECK(model.report(25).bound == bound(Method::DeAlgNew, 25, ex3).bound);
}

TEST_CASE("bound propagates plan and profile failures") {
  CHECK_THROWS_AS(bound(Method::DeFiniteNew, 0, ex1_de), PreconditionViolated);
  CHECK_THROWS_AS(bound(Method::SeFiniteNew, 10, {1, 1, 1, kPi, 1.0, Family::Finite}), PreconditionViolated);
  CHECK_THROWS_AS(bound(Method::SeAlgNew, 10, ex1_se), MismatchedFamily);
  CHECK_THROWS_AS(BoundModel(Method::SeExpNew, {1, 1.5, 1, 1, {}, Family::SemiExp}), PreconditionViolated);
}
