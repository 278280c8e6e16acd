// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include "risbeam/uncertainty.hpp"

using namespace risbeam;
using namespace risbeam::uncertainty;

TEST_CASE("variance_from_level") {
  REQUIRE(variance_from_level(0.0, 123.0) == 0.0);
  REQUIRE(variance_from_level(0.1, 4.0) == Catch::Approx(0.04));
  REQUIRE(variance_from_level(0.01, 1.0) == Catch::Approx(1e-4));
  REQUIRE_THROWS_AS(variance_from_level(1.0, 1.0), ConfigError);
  REQUIRE_THROWS_AS(variance_from_level(-0.1, 1.0), ConfigError);
  // exact quadratic scaling
  for (double w : {0.05, 0.2, 0.7})
    REQUIRE(variance_from_level(w, 3.0) == w * w * 3.0);
}

TEST_CASE("chi-square quantile closed forms at 2 dof") {
  REQUIRE(chi2_inv_cdf(0.95, 2) == Catch::Approx(-2.0 * std::log(0.05)).epsilon(1e-10));
  REQUIRE(chi2_inv_cdf(0.5, 2) == Catch::Approx(-2.0 * std::log(0.5)).epsilon(1e-10));
  REQUIRE_THROWS_AS(chi2_inv_cdf(0.0, 2), ConfigError);
  REQUIRE_THROWS_AS(chi2_inv_cdf(1.0, 2), ConfigError);
  REQUIRE_THROWS_AS(chi2_inv_cdf(0.5, 0), ConfigError);
}

TEST_CASE("chi-square quantile is a fixed point of the cdf") {
  for (int dof : {1, 2, 5, 72, 144}) {
    for (double p : {0.05, 0.5, 0.95, 0.999}) {
      const double x = chi2_inv_cdf(p, dof);
      REQUIRE(detail::gammp(0.5 * dof, 0.5 * x) == Catch::Approx(p).epsilon(1e-10));
    }
  }
}

TEST_CASE("chi-square quantile against empirical quantile at 72 dof") {
  const double q = chi2_inv_cdf(0.95, 72);
  RngStream rng(1234);
  const int draws = 1000000;
  int below = 0;
  for (int t = 0; t < draws; ++t) {
    double s = 0.0;
    for (int i = 0; i < 36; ++i) s += std::norm(rng.cgaussian(2.0));  // chi2_72
    if (s <= q) ++below;
  }
  REQUIRE(static_cast<double>(below) / draws == Catch::Approx(0.95).margin(0.01));
}

TEST_CASE("radius_from_statistics closed form and calibration") {
  REQUIRE(radius_from_statistics(0.0, 18, 0.05) == 0.0);
  REQUIRE(radius_from_statistics(2.0, 2, 0.05) ==
          Catch::Approx(std::sqrt(-2.0 * std::log(0.05))).epsilon(1e-9));

  // P(||draw|| <= radius) should be 1 - eps
  const int n_c = 6;  // complex dimension
  const double delta2 = 0.37;
  const double eps = 0.05;
  const double radius = radius_from_statistics(delta2, 2 * n_c, eps);
  RngStream rng(77);
  const int draws = 100000;
  int inside = 0;
  for (int t = 0; t < draws; ++t)
    if (rng.cgaussian_vector(n_c, delta2).norm() <= radius) ++inside;
  REQUIRE(static_cast<double>(inside) / draws == Catch::Approx(1.0 - eps).margin(0.005));
}

TEST_CASE("statistical sampler mean norm and determinism") {
  StatisticalErrorModel m;
  m.delta2_h = {0.5};
  m.delta2_d = {0.0};
  m.epsilon = {0.05};
  const int n = 3, mm = 2;
  RngStream rng(42);
  double acc = 0.0;
  const int draws = 10000;
  for (int t = 0; t < draws; ++t) {
    const ErrorRealization e = sample_statistical(m, 0, n, mm, rng);
    REQUIRE(e.d_h_dir.norm() == 0.0);
    acc += e.d_h_cas.squaredNorm();
  }
  REQUIRE(acc / draws == Catch::Approx(n * mm * 0.5).epsilon(0.03));

  RngStream r1(9), r2(9);
  const ErrorRealization a = sample_statistical(m, 0, n, mm, r1);
  const ErrorRealization b = sample_statistical(m, 0, n, mm, r2);
  REQUIRE((a.d_h_cas - b.d_h_cas).norm() == 0.0);
}

TEST_CASE("zero variance gives zero realization") {
  StatisticalErrorModel m;
  m.delta2_h = {0.0};
  m.delta2_d = {0.0};
  m.epsilon = {0.05};
  RngStream rng(1);
  const ErrorRealization e = sample_statistical(m, 0, 4, 3, rng);
  REQUIRE(e.d_h_cas.norm() == 0.0);
  REQUIRE(e.d_h_dir.norm() == 0.0);
}

TEST_CASE("bounded sampler stays in the ball and hits the boundary") {
  BoundedErrorModel m;
  m.xi_h = {0.8};
  m.xi_d = {0.3};
  RngStream rng(5);
  double max_norm = 0.0;
  for (int t = 0; t < 100000; ++t) {
    const ErrorRealization e = sample_bounded(m, 0, 2, 2, rng, false);
    REQUIRE(e.d_h_cas.norm() <= m.xi_h[0] + 1e-12);
    REQUIRE(e.d_h_dir.norm() <= m.xi_d[0] + 1e-12);
    max_norm = std::max(max_norm, e.d_h_cas.norm());
  }
  REQUIRE(max_norm > 0.7);  // interior sampling actually fills the ball

  for (int t = 0; t < 100; ++t) {
    const ErrorRealization e = sample_bounded(m, 0, 2, 2, rng, true);
    REQUIRE(e.d_h_cas.norm() == Catch::Approx(m.xi_h[0]).margin(1e-12));
    REQUIRE(e.d_h_dir.norm() == Catch::Approx(m.xi_d[0]).margin(1e-12));
  }

  BoundedErrorModel zero;
  zero.xi_h = {0.0};
  zero.xi_d = {0.0};
  const ErrorRealization e = sample_bounded(zero, 0, 2, 2, rng, true);
  REQUIRE(e.d_h_cas.norm() == 0.0);
}

TEST_CASE("isotropic covariance extraction") {
  const double v = isotropic_variance(0.7 * CMat::Identity(5, 5));
  REQUIRE(v == Catch::Approx(0.7));
  CMat bad = 0.7 * CMat::Identity(5, 5);
  bad(0, 1) = cxd(0.2, 0.0);
  bad(1, 0) = cxd(0.2, 0.0);
  REQUIRE_THROWS_AS(isotropic_variance(bad), ConfigError);
}

TEST_CASE("level-to-model mapping ties radii to quantiles") {
  scenario::SystemConfig cfg;
  cfg.m_h = 2;
  cfg.m_v = 1;
  cfg.n_h = 3;
  cfg.n_v = 1;
  cfg.k_users = 2;
  cfg.default_user_positions();
  RngStream rng(3);
  const auto cs = scenario::generate_channels(cfg, rng);
  const auto s = statistical_from_levels(cs, 0.1, 0.05, 0.05);
  REQUIRE(s.delta2_h[0] == Catch::Approx(0.01 * cs.h_cas[0].squaredNorm()));
  REQUIRE(s.delta2_d[1] == Catch::Approx(0.0025 * cs.h_d.col(1).squaredNorm()));
  const auto b = bounded_from_statistics(s, cfg.ris_elements(), cfg.bs_antennas());
  REQUIRE(b.xi_h[0] ==
          Catch::Approx(std::sqrt(0.5 * s.delta2_h[0] * chi2_inv_cdf(0.95, 2 * 6))));
}
