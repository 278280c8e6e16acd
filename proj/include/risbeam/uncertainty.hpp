// SPDX-License-Identifier: Apache-2.0
//
// risbeam: robust transmit designs for RIS-assisted multi-user MISO downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// CSI error models for the cascaded and direct channels: norm-ball bounded
// errors and isotropic complex-Gaussian errors, the uncertainty-level to
// variance/radius mappings, and samplers for validation.

#ifndef RISBEAM_UNCERTAINTY_HPP
#define RISBEAM_UNCERTAINTY_HPP

#include <vector>

#include "risbeam/common.hpp"
#include "risbeam/rng.hpp"
#include "risbeam/scenario.hpp"

namespace risbeam::uncertainty {

namespace detail {

inline double gammln(double x) {
  static const double cof[14] = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
      -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
      0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
      -0.261908384015814087e-4, 0.368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

// Regularized lower incomplete gamma P(a, x).
inline double gammp(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw ConfigError("gammp: bad arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) {  // series
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 10000; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - gammln(a));
  }
  // continued fraction for Q(a, x), modified Lentz
  const double fpmin = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  const double q = std::exp(-x + a * std::log(x) - gammln(a)) * h;
  return 1.0 - q;
}

}  // namespace detail

// Quantile of the chi-square distribution, via inversion of the regularized
// incomplete gamma (bracketed Newton with bisection fallback).
inline double chi2_inv_cdf(double p, int dof) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("chi2_inv_cdf: p outside (0,1)");
  if (dof < 1) throw ConfigError("chi2_inv_cdf: dof must be >= 1");
  const double a = 0.5 * dof;

  double lo = 0.0;
  double hi = 2.0 * a + 10.0;
  while (detail::gammp(a, 0.5 * hi) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw ConfigError("chi2_inv_cdf: bracket failure");
  }
  double x = 0.5 * (lo + hi);
  const double lng = detail::gammln(a);
  for (int it = 0; it < 200; ++it) {
    const double f = detail::gammp(a, 0.5 * x) - p;
    if (f > 0.0)
      hi = x;
    else
      lo = x;
    // chi2 pdf at x
    const double lpdf = -0.5 * x + (a - 1.0) * std::log(0.5 * x) - lng - std::log(2.0);
    const double pdf = std::exp(lpdf);
    double x_next = (pdf > 0.0) ? x - f / pdf : 0.5 * (lo + hi);
    if (!(x_next > lo && x_next < hi)) x_next = 0.5 * (lo + hi);
    if (std::abs(x_next - x) < 1e-13 * std::max(1.0, x)) return x_next;
    x = x_next;
  }
  return x;
}

// delta^2 = omega^2 * ||channel||^2, the per-entry error variance implied
// by a relative uncertainty level omega.
inline double variance_from_level(double omega, double channel_norm2) {
  if (!(omega >= 0.0 && omega < 1.0))
    throw ConfigError("uncertainty level must lie in [0,1)");
  return omega * omega * channel_norm2;
}

// Radius such that an isotropic complex-Gaussian draw with per-entry
// variance delta2 lands inside the ball with probability 1 - epsilon;
// dof = 2*(complex dimension).
inline double radius_from_statistics(double delta2, int dof, double epsilon) {
  if (delta2 == 0.0) return 0.0;
  return std::sqrt(0.5 * delta2 * chi2_inv_cdf(1.0 - epsilon, dof));
}

struct BoundedErrorModel {
  std::vector<double> xi_h;  // Frobenius radius per user, cascaded channel
  std::vector<double> xi_d;  // 2-norm radius per user, direct channel (0 = PCU)

  void validate() const {
    for (double x : xi_h)
      if (x < 0) throw ConfigError("radius must be >= 0");
    for (double x : xi_d)
      if (x < 0) throw ConfigError("radius must be >= 0");
  }
  bool full_uncertainty() const {
    for (double x : xi_d)
      if (x > 0) return true;
    return false;
  }
};

struct StatisticalErrorModel {
  std::vector<double> delta2_h;  // per-entry variance of vec(dH_k)
  std::vector<double> delta2_d;  // per-entry variance of dh_k (0 = PCU)
  std::vector<double> epsilon;   // maximum outage probability per user

  void validate() const {
    for (double v : delta2_h)
      if (v < 0) throw ConfigError("variance must be >= 0");
    for (double v : delta2_d)
      if (v < 0) throw ConfigError("variance must be >= 0");
    for (double e : epsilon)
      if (!(e > 0.0 && e <= 1.0)) throw ConfigError("epsilon must lie in (0,1]");
  }
  bool full_uncertainty() const {
    for (double v : delta2_d)
      if (v > 0) return true;
    return false;
  }
};

// Only isotropic covariances are supported; anything else is rejected.
inline double isotropic_variance(const CMat& sigma, double tol = 1e-9) {
  if (sigma.rows() != sigma.cols()) throw DimensionError("covariance not square");
  const double delta2 = sigma.trace().real() / static_cast<double>(sigma.rows());
  CMat iso = CMat::Identity(sigma.rows(), sigma.cols()) * delta2;
  if ((sigma - iso).norm() > tol * std::max(1.0, sigma.norm()))
    throw ConfigError("only isotropic error covariances are supported");
  return delta2;
}

struct ErrorRealization {
  CMat d_h_cas;  // N x M cascaded-channel error
  CVec d_h_dir;  // M direct-channel error
};

// Uncertainty-level -> model parameter mapping used throughout: the
// statistical variances follow the estimated channel energies, and the
// bounded radii are the (1-eps) quantile radii of those Gaussians.
inline StatisticalErrorModel statistical_from_levels(const scenario::ChannelSet& est,
                                                     double omega_h, double omega_d,
                                                     double epsilon) {
  StatisticalErrorModel m;
  const int k_users = static_cast<int>(est.h_cas.size());
  for (int k = 0; k < k_users; ++k) {
    m.delta2_h.push_back(variance_from_level(omega_h, est.h_cas[k].squaredNorm()));
    m.delta2_d.push_back(variance_from_level(omega_d, est.h_d.col(k).squaredNorm()));
    m.epsilon.push_back(epsilon);
  }
  m.validate();
  return m;
}

inline BoundedErrorModel bounded_from_statistics(const StatisticalErrorModel& s,
                                                 int ris_n, int bs_m) {
  BoundedErrorModel b;
  for (size_t k = 0; k < s.delta2_h.size(); ++k) {
    b.xi_h.push_back(radius_from_statistics(s.delta2_h[k], 2 * ris_n * bs_m, s.epsilon[k]));
    b.xi_d.push_back(radius_from_statistics(s.delta2_d[k], 2 * bs_m, s.epsilon[k]));
  }
  b.validate();
  return b;
}

inline ErrorRealization sample_statistical(const StatisticalErrorModel& model, int user,
                                           int ris_n, int bs_m, RngStream& rng) {
  ErrorRealization e;
  e.d_h_cas = rng.cgaussian_matrix(ris_n, bs_m, std::max(model.delta2_h[user], 0.0));
  if (model.delta2_h[user] == 0.0) e.d_h_cas.setZero();
  e.d_h_dir = rng.cgaussian_vector(bs_m, std::max(model.delta2_d[user], 0.0));
  if (model.delta2_d[user] == 0.0) e.d_h_dir.setZero();
  return e;
}

namespace detail {
// Uniform direction, norm xi on the sphere or xi * u^(1/(2*dim_c)) in the
// ball (dim_c complex entries = 2*dim_c real dimensions).
inline void scale_to_ball(CMat& x, double xi, bool on_boundary, RngStream& rng) {
  const double nrm = x.norm();
  if (xi == 0.0 || nrm == 0.0) {
    x.setZero();
    return;
  }
  double r = xi;
  if (!on_boundary) {
    const double u = rng.uniform_pos();
    r = xi * std::pow(u, 1.0 / (2.0 * static_cast<double>(x.size())));
  }
  x *= r / nrm;
}
}  // namespace detail

inline ErrorRealization sample_bounded(const BoundedErrorModel& model, int user,
                                       int ris_n, int bs_m, RngStream& rng,
                                       bool on_boundary = false) {
  ErrorRealization e;
  e.d_h_cas = rng.cgaussian_matrix(ris_n, bs_m);
  detail::scale_to_ball(e.d_h_cas, model.xi_h[user], on_boundary, rng);
  CMat dir = rng.cgaussian_matrix(bs_m, 1);
  detail::scale_to_ball(dir, user < static_cast<int>(model.xi_d.size()) ? model.xi_d[user] : 0.0,
                        on_boundary, rng);
  e.d_h_dir = dir.col(0);
  return e;
}

}  // namespace risbeam::uncertainty

#endif
