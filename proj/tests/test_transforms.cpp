// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "logquad/transforms.hpp"

using namespace logquad;

namespace {

constexpr double kPi = std::numbers::pi;

double ulp(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()) - v; }

const MapKind kAllKinds[] = {MapKind::se_finite(1.0), MapKind::de_finite(1.0), MapKind::se_alg(),
                             MapKind::de_alg(),       MapKind::se_exp(),       MapKind::de_exp()};

// Range of x over which t is neither saturated nor overflowing.
double safe_range(const MapKind& k) {
  switch (k.tag) {
    case MapTag::SeFinite: return 30.0;
    case MapTag::DeFinite: return 3.0;
    case MapTag::SeAlg: return 600.0;
    case MapTag::DeAlg: return 6.0;
    case MapTag::SeExp: return 600.0;
    case MapTag::DeExp: return 6.0;
  }
  return 1.0;
}

}  // namespace

TEST_CASE("map_point at the origin") {
  SUBCASE("SE finite, T = 1") {
    const auto p = map_point(MapKind::se_finite(1.0), 0.0);
    CHECK(p.t == 0.5);
    REQUIRE(p.t_complement);
    CHECK(*p.t_complement == 0.5);
    CHECK(p.weight == 0.25);
  }
  SUBCASE("SE algebraic") {
    const auto p = map_point(MapKind::se_alg(), 0.0);
    CHECK(p.t == 1.0);
    CHECK(p.weight == 1.0);
    CHECK(p.log_t == 0.0);
    CHECK_FALSE(p.t_complement);
  }
  SUBCASE("SE exponential") {
    const auto p = map_point(MapKind::se_exp(), 0.0);
    CHECK(p.t == doctest::Approx(std::log(2.0)).epsilon(1e-16));
    CHECK(p.weight == 0.5);
  }
  SUBCASE("DE finite, T = 1") {
    const auto p = map_point(MapKind::de_finite(1.0), 0.0);
    CHECK(p.t == 0.5);
    CHECK(p.weight == doctest::Approx(kPi / 4.0).epsilon(1e-16));
  }
}

TEST_CASE("semi-infinite log_t is exact in x") {
  CHECK(map_point(MapKind::se_alg(), -40.0).log_t == -40.0);
  CHECK(map_point(MapKind::se_alg(), -800.0).log_t == -800.0);
  CHECK(map_point(MapKind::de_alg(), 2.5).log_t == kPi / 2.0 * std::sinh(2.5));
}

TEST_CASE("finite maps: reflection t(x) + t(-x) = T") {
  for (const double T : {1.0, 0.3, 7.0}) {
    for (const auto tag : {MapTag::SeFinite, MapTag::DeFinite}) {
      const MapKind kind{tag, T};
      for (int i = 0; i <= 1000; ++i) {
        const double x = -50.0 + 0.1 * i;
        const double sum = map_point(kind, x).t + map_point(kind, -x).t;
        CHECK(std::abs(sum - T) <= 2.0 * ulp(T));
      }
    }
  }
}

TEST_CASE("finite maps: complement keeps relative accuracy at the right end") {
  const auto p = map_point(MapKind::se_finite(1.0), 40.0);
  REQUIRE(p.t_complement);
  CHECK(*p.t_complement == doctest::Approx(std::exp(-40.0)).epsilon(1e-14));
  CHECK(p.t == 1.0);
  for (double x = -20.0; x <= 20.0; x += 0.37) {
    const auto q = map_point(MapKind::de_finite(2.0), x / 8.0);
    CHECK(std::abs(q.t + *q.t_complement - 2.0) <= 2.0 * ulp(2.0));
  }
}

TEST_CASE("weights are positive and t strictly increasing") {
  for (const auto& kind : kAllKinds) {
    const double r = safe_range(kind);
    double prev = -std::numeric_limits<double>::infinity();
    for (double x = -r; x <= r; x += 1e-2) {
      const auto p = map_point(kind, x);
      CHECK(p.weight > 0.0);
      CHECK(p.t > prev);
      prev = p.t;
    }
  }
}

TEST_CASE("weight matches a central difference of t") {
  constexpr double step = 1e-5;
  for (const auto& kind : kAllKinds) {
    // DE tails vary like exp(pi cosh x); keep the step's truncation error small.
    const double r = is_double_exponential(kind.tag) ? 4.0 : 20.0;
    for (double x = -r; x <= r; x += r / 50.0) {
      // Near the right end t rounds to T; difference −(T − t) there instead.
      const auto pos = [&](double v) {
        const auto p = map_point(kind, v);
        return kind.finite() && x > 0.0 ? -*p.t_complement : p.t;
      };
      const double fd = (pos(x + step) - pos(x - step)) / (2.0 * step);
      const double w = map_point(kind, x).weight;
      INFO(to_string(kind.tag), " x=", x);
      CHECK(std::abs(fd - w) <= 1e-6 * w);
    }
  }
}

TEST_CASE("log_t and log_weight agree with direct logarithms") {
  for (const auto& kind : kAllKinds) {
    const double r = safe_range(kind);
    for (double x = -r; x <= r; x += r / 97.0) {
      const auto p = map_point(kind, x);
      if (p.t > 0.0 && std::isfinite(p.t)) {
        INFO(to_string(kind.tag), " x=", x);
        CHECK(std::exp(p.log_t) == doctest::Approx(p.t).epsilon(1e-12));
        CHECK(std::abs(p.log_t - std::log(p.t)) <= 1e-12 * std::max(1.0, std::abs(p.log_t)));
      }
      if (p.weight > 0.0 && std::isfinite(p.weight)) {
        CHECK(std::abs(p.log_weight - std::log(p.weight)) <= 1e-12 * std::max(1.0, std::abs(p.log_weight)));
      }
    }
  }
}

TEST_CASE("DE algebraic overflow leaves log_t finite") {
  const auto p = map_point(MapKind::de_alg(), 8.0);
  CHECK(std::isinf(p.t));
  CHECK(std::isfinite(p.log_t));
  CHECK(std::isfinite(p.log_weight));
  CHECK(p.log_t == doctest::Approx(kPi / 2.0 * std::sinh(8.0)));
}

TEST_CASE("stable kernels do not overflow") {
  CHECK(softplus(800.0) == 800.0);
  CHECK(softplus(-800.0) == 0.0);
  CHECK(logistic(800.0) == 1.0);
  CHECK(logistic(-800.0) == 0.0);
  CHECK(log_softplus(-800.0) == -800.0);
  CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::log(2.0)));
  CHECK(log_softplus(-5.0) == doctest::Approx(std::log(std::log1p(std::exp(-5.0)))).epsilon(1e-15));
}

TEST_CASE("long double instantiation matches double") {
  for (const auto& kind : kAllKinds) {
    for (const double x : {-2.5, -0.3, 0.0, 1.1, 2.0}) {
      const auto a = map_point<double>(kind, x);
      const auto b = map_point<long double>(kind, static_cast<long double>(x));
      CHECK(static_cast<double>(b.t) == doctest::Approx(a.t).epsilon(1e-15));
      CHECK(static_cast<double>(b.weight) == doctest::Approx(a.weight).epsilon(1e-15));
    }
  }
}
