// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "risbeam/robust_bounded.hpp"

using namespace risbeam;
using namespace risbeam::bounded;
using conic::Program;

namespace {

double true_signal_power(const CVec& h, const CMat& h_cas, const CVec& dh,
                         const CMat& d_cas, const CVec& theta, const CVec& w) {
  const cxd x = ((h + dh).adjoint() * w)(0) +
                (theta.adjoint() * ((h_cas + d_cas) * w))(0);
  return std::norm(x);
}

scenario::ChannelSet tiny_channels(int m, int n, int k, std::uint64_t seed) {
  scenario::SystemConfig cfg;
  cfg.m_h = m;
  cfg.m_v = 1;
  cfg.n_h = n;
  cfg.n_v = 1;
  cfg.k_users = k;
  cfg.default_user_positions();
  RngStream rng(seed);
  return scenario::generate_channels(cfg, rng);
}

}  // namespace

TEST_CASE("surrogate tangency at the expansion point") {
  RngStream rng(101);
  const int m = 2, n = 2;
  const CVec h = rng.cgaussian_vector(m);
  const CMat hc = rng.cgaussian_matrix(n, m);
  const CVec w_prev = rng.cgaussian_vector(m);
  const CVec theta_prev = rng.unit_modulus_vector(n);

  for (bool fcu : {false, true}) {
    // active block = w, with variables pinned to the expansion point
    Program prog;
    const auto w = prog.add_complex_vector(m, "w");
    const auto s = signal_power_surrogate(h, hc, w.entries(), conic::to_affine(theta_prev),
                                          w_prev, theta_prev, fcu);
    RVec x = RVec::Zero(prog.num_vars());
    for (int i = 0; i < m; ++i) {
      x(w.offset + 2 * i) = w_prev(i).real();
      x(w.offset + 2 * i + 1) = w_prev(i).imag();
    }
    const double tangent = surrogate_value(s, x, CVec::Zero(m), CMat::Zero(n, m));
    const double truth =
        true_signal_power(h, hc, CVec::Zero(m), CMat::Zero(n, m), theta_prev, w_prev);
    REQUIRE(tangent == Catch::Approx(truth).epsilon(1e-9));
  }
}

TEST_CASE("surrogate is a global lower bound (1000 draws, M=N=2)") {
  RngStream rng(202);
  const int m = 2, n = 2;
  const CVec h = rng.cgaussian_vector(m);
  const CMat hc = rng.cgaussian_matrix(n, m);
  const CVec w_prev = rng.cgaussian_vector(m);
  const CVec theta_prev = rng.unit_modulus_vector(n);

  for (bool fcu : {false, true}) {
    Program prog;
    const auto w = prog.add_complex_vector(m, "w");
    const auto theta = prog.add_complex_vector(n, "theta");
    // build two surrogates to exercise both active blocks
    const auto s_w = signal_power_surrogate(h, hc, w.entries(), conic::to_affine(theta_prev),
                                            w_prev, theta_prev, fcu);
    const auto s_t = signal_power_surrogate(h, hc, conic::to_affine(w_prev), theta.entries(),
                                            w_prev, theta_prev, fcu);
    for (int trial = 0; trial < 1000; ++trial) {
      const CVec w_val = rng.cgaussian_vector(m);
      const CVec th_val = rng.unit_modulus_vector(n);
      const CVec dh = fcu ? CVec(rng.cgaussian_vector(m)) : CVec(CVec::Zero(m));
      const CMat dc = rng.cgaussian_matrix(n, m);

      RVec x = RVec::Zero(prog.num_vars());
      for (int i = 0; i < m; ++i) {
        x(w.offset + 2 * i) = w_val(i).real();
        x(w.offset + 2 * i + 1) = w_val(i).imag();
      }
      for (int i = 0; i < n; ++i) {
        x(theta.offset + 2 * i) = th_val(i).real();
        x(theta.offset + 2 * i + 1) = th_val(i).imag();
      }
      const double t_w = true_signal_power(h, hc, dh, dc, theta_prev, w_val);
      REQUIRE(surrogate_value(s_w, x, dh, dc) <= t_w + 1e-9 * (1.0 + std::abs(t_w)));
      const double t_t = true_signal_power(h, hc, dh, dc, th_val, w_prev);
      REQUIRE(surrogate_value(s_t, x, dh, dc) <= t_t + 1e-9 * (1.0 + std::abs(t_t)));
    }
  }
}

TEST_CASE("fcu surrogate with zero direct error matches pcu surrogate") {
  RngStream rng(303);
  const int m = 2, n = 2;
  const CVec h = rng.cgaussian_vector(m);
  const CMat hc = rng.cgaussian_matrix(n, m);
  const CVec w_prev = rng.cgaussian_vector(m);
  const CVec theta_prev = rng.unit_modulus_vector(n);
  Program prog;
  const auto w = prog.add_complex_vector(m, "w");
  const auto s_p = signal_power_surrogate(h, hc, w.entries(), conic::to_affine(theta_prev),
                                          w_prev, theta_prev, false);
  const auto s_f = signal_power_surrogate(h, hc, w.entries(), conic::to_affine(theta_prev),
                                          w_prev, theta_prev, true);
  for (int trial = 0; trial < 50; ++trial) {
    const CVec w_val = rng.cgaussian_vector(m);
    RVec x = RVec::Zero(prog.num_vars());
    for (int i = 0; i < m; ++i) {
      x(w.offset + 2 * i) = w_val(i).real();
      x(w.offset + 2 * i + 1) = w_val(i).imag();
    }
    const CMat dc = rng.cgaussian_matrix(n, m);
    const double vp = surrogate_value(s_p, x, CVec::Zero(m), dc);
    const double vf = surrogate_value(s_f, x, CVec::Zero(m), dc);
    REQUIRE(vp == Catch::Approx(vf).margin(1e-9 * (1.0 + std::abs(vp))));
  }
}

TEST_CASE("single-user error-free design matches matched-filter closed form") {
  // cascaded path nulled: power* = gamma * sigma2 / ||h||^2
  scenario::ChannelSet est = tiny_channels(2, 1, 1, 5);
  est.g.setZero();
  est.h_cas[0].setZero();
  const double sigma2 = 1e-8;
  const double r_th = 2.0;
  const double gamma = std::pow(2.0, r_th) - 1.0;

  uncertainty::BoundedErrorModel err;
  err.xi_h = {0.0};
  err.xi_d = {0.0};
  DesignParams params;
  params.ao_tol = 1e-9;
  params.ao_max_iters = 40;
  RngStream rng(7);
  const auto sol = alternating_design(est, sigma2, r_th, err, params, Scenario::pcu, rng);
  const double closed = gamma * sigma2 / est.h_d.col(0).squaredNorm();
  REQUIRE(sol.power == Catch::Approx(closed).epsilon(1e-6));
}

TEST_CASE("ccp output is unit modulus and respects the slack exit") {
  scenario::ChannelSet est = tiny_channels(2, 3, 2, 11);
  const double sigma2 = scenario::SystemConfig{}.sigma2_mw();
  const auto prob = design::scale_problem(est, sigma2);
  uncertainty::BoundedErrorModel err;
  err.xi_h = {1e-3 * est.h_cas[0].norm(), 1e-3 * est.h_cas[1].norm()};
  err.xi_d = {0.0, 0.0};
  uncertainty::BoundedErrorModel err_s = err;
  for (auto& x : err_s.xi_h) x /= prob.scale;

  RngStream rng(13);
  CVec theta0 = rng.unit_modulus_vector(3);
  std::vector<CVec> v;
  for (int k = 0; k < 2; ++k)
    v.push_back(design::effective_channel(prob.h_d, prob.h_cas[k], theta0, k));
  const double gamma = std::pow(2.0, 1.0) - 1.0;
  const auto w0 = design::nominal_power_min(v, prob.sigma2, gamma);
  REQUIRE(w0.has_value());
  // give the anchor some robustness margin before the reflection step
  const CMat w_fixed = 1.5 * *w0;

  DesignParams params;
  const auto res = penalty_ccp(prob, 1.0, err_s, w_fixed, theta0, params,
                               Scenario::pcu, rng);
  REQUIRE(res.ok);
  for (Eigen::Index i = 0; i < res.theta.size(); ++i)
    REQUIRE(std::abs(std::abs(res.theta(i)) - 1.0) < 1e-12);
  REQUIRE(res.iterations >= 1);
}

TEST_CASE("alternating design: monotone trace, robust feasibility, ordering") {
  scenario::ChannelSet est = tiny_channels(2, 2, 2, 23);
  const double sigma2 = scenario::SystemConfig{}.sigma2_mw();
  const double r_th = 1.0;

  const auto stat = uncertainty::statistical_from_levels(est, 0.02, 0.0, 0.05);
  const auto err = uncertainty::bounded_from_statistics(stat, 2, 2);
  uncertainty::BoundedErrorModel zero;
  zero.xi_h = {0.0, 0.0};
  zero.xi_d = {0.0, 0.0};

  DesignParams params;
  RngStream rng1(31), rng2(31);
  const auto sol = alternating_design(est, sigma2, r_th, err, params, Scenario::pcu, rng1);
  const auto sol0 = alternating_design(est, sigma2, r_th, zero, params, Scenario::pcu, rng2);

  // trace monotone non-increasing within 1e-6 relative
  for (size_t i = 1; i < sol.trace.size(); ++i)
    REQUIRE(sol.trace[i].power_w_step <=
            sol.trace[i - 1].power_w_step * (1.0 + 1e-6));

  // robust design never beats the error-free one
  REQUIRE(sol.power >= sol0.power * (1.0 - 1e-6));

  // unit modulus reflection
  for (Eigen::Index i = 0; i < sol.theta.size(); ++i)
    REQUIRE(std::abs(std::abs(sol.theta(i)) - 1.0) < 1e-9);

  // sampled worst-case QoS certification
  RngStream sampler(77);
  double worst = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 500; ++s) {
    const auto e = uncertainty::sample_bounded(err, 0, 2, 2, sampler, s % 10 < 7);
    CMat hc = est.h_cas[0] + e.d_h_cas;
    const CVec v = est.h_d.col(0) + hc.adjoint() * sol.theta;
    const double sig = std::norm((v.adjoint() * sol.w.col(0))(0));
    const double interf = std::norm((v.adjoint() * sol.w.col(1))(0)) + sigma2;
    worst = std::min(worst, std::log2(1.0 + sig / interf));
  }
  REQUIRE(worst >= r_th - 1e-3);
}

TEST_CASE("rate target monotonicity of the alternating design") {
  scenario::ChannelSet est = tiny_channels(2, 2, 2, 29);
  const double sigma2 = scenario::SystemConfig{}.sigma2_mw();
  const auto stat = uncertainty::statistical_from_levels(est, 0.01, 0.0, 0.05);
  const auto err = uncertainty::bounded_from_statistics(stat, 2, 2);
  DesignParams params;
  RngStream r1(3), r2(3);
  const auto lo = alternating_design(est, sigma2, 0.5, err, params, Scenario::pcu, r1);
  const auto hi = alternating_design(est, sigma2, 1.5, err, params, Scenario::pcu, r2);
  REQUIRE(hi.power >= lo.power * (1.0 - 1e-6));
}

TEST_CASE("fcu with zero direct radius reproduces pcu power") {
  scenario::ChannelSet est = tiny_channels(2, 2, 2, 41);
  const double sigma2 = scenario::SystemConfig{}.sigma2_mw();
  const auto stat = uncertainty::statistical_from_levels(est, 0.02, 0.0, 0.05);
  const auto err = uncertainty::bounded_from_statistics(stat, 2, 2);
  DesignParams params;
  RngStream r1(9), r2(9);
  const auto pcu = alternating_design(est, sigma2, 1.0, err, params, Scenario::pcu, r1);
  const auto fcu = alternating_design(est, sigma2, 1.0, err, params, Scenario::fcu, r2);
  REQUIRE(fcu.power == Catch::Approx(pcu.power).epsilon(1e-4));
}
