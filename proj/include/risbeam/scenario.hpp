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
// Rician fading model of a RIS-assisted multi-user MISO downlink: uniform
// planar arrays at the base station and the RIS, geometric link angles,
// Doppler-phased LoS components, and the cascaded BS-RIS-user channels.

#ifndef RISBEAM_SCENARIO_HPP
#define RISBEAM_SCENARIO_HPP

#include <limits>
#include <vector>

#include "risbeam/common.hpp"
#include "risbeam/linalg.hpp"
#include "risbeam/rng.hpp"

namespace risbeam::scenario {

using Vec3 = Eigen::Vector3d;

struct SystemConfig {
  int m_h = 3, m_v = 1;  // BS URA elements (horizontal x vertical)
  int n_h = 3, n_v = 1;  // RIS URA elements
  int k_users = 3;

  double f_c_hz = 200e6;
  double train_speed_mps = 100.0;  // 360 km/h
  double slot_tau_s = 1e-3;
  double kappa_db = 3.0;
  double pl0_db = -30.0;  // reference path loss at d0
  double d0_m = 1.0;
  double beta_d = 3.7;  // BS-user
  double beta_g = 3.0;  // BS-RIS
  double beta_r = 2.0;  // RIS-user
  double bandwidth_hz = 200e6;
  double sigma2_dbm_override = std::numeric_limits<double>::quiet_NaN();
  double r_th = 3.0;  // target rate, bit/s/Hz
  double element_spacing_ratio = 0.5;

  Vec3 bs_pos{0.0, 0.0, 10.0};
  Vec3 ris_pos{50.0, 5.0, 10.0};
  std::vector<Vec3> user_pos;  // filled by default_user_positions() if empty

  int bs_antennas() const { return m_h * m_v; }
  int ris_elements() const { return n_h * n_v; }
  double lambda_c() const { return kSpeedOfLight / f_c_hz; }
  double kappa_linear() const { return db_to_linear(kappa_db); }

  // Users evenly spaced on the 100 m track segment y = 0, z = 2 m.
  void default_user_positions() {
    user_pos.clear();
    for (int k = 0; k < k_users; ++k) {
      const double x = 100.0 * (k + 1) / (k_users + 1);
      user_pos.push_back(Vec3{x, 0.0, 2.0});
    }
  }

  void validate() const {
    if (m_h < 1 || m_v < 1 || n_h < 1 || n_v < 1 || k_users < 1)
      throw ConfigError("array and user counts must be >= 1");
    if (f_c_hz <= 0) throw ConfigError("carrier frequency must be positive");
    if (d0_m <= 0) throw ConfigError("reference distance must be positive");
    if (kappa_linear() < 0) throw ConfigError("Rician factor must be >= 0");
    if (bandwidth_hz <= 0) throw ConfigError("bandwidth must be positive");
    if (static_cast<int>(user_pos.size()) != k_users)
      throw ConfigError("user positions not resolved");
    if ((bs_pos - ris_pos).norm() <= 0)
      throw ConfigError("BS and RIS positions coincide");
    for (const auto& u : user_pos) {
      if ((u - bs_pos).norm() <= 0 || (u - ris_pos).norm() <= 0)
        throw ConfigError("user coincides with BS or RIS");
    }
  }

  double sigma2_dbm() const;
  double sigma2_mw() const { return dbm_to_mw(sigma2_dbm()); }
};

// -174 dBm/Hz thermal density plus a 10 dB noise figure.
inline double noise_power_dbm(double bandwidth_hz) {
  if (bandwidth_hz <= 0) throw ConfigError("bandwidth must be positive");
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + 10.0;
}

inline double SystemConfig::sigma2_dbm() const {
  if (std::isfinite(sigma2_dbm_override)) return sigma2_dbm_override;
  return noise_power_dbm(bandwidth_hz);
}

struct LinkAngles {
  double azimuth = 0.0;    // (-pi, pi]
  double elevation = 0.0;  // [-pi/2, pi/2]
};

inline LinkAngles link_angles(const Vec3& from, const Vec3& to) {
  const Vec3 d = to - from;
  LinkAngles a;
  a.azimuth = std::atan2(d.y(), d.x());
  a.elevation = std::atan2(d.z(), std::hypot(d.x(), d.y()));
  return a;
}

// Angles are deterministic functions of the geometry.
struct AngleSet {
  std::vector<LinkAngles> bs_to_user;   // AoD at the BS, one per user
  LinkAngles ris_to_bs;                 // AoD at the RIS
  LinkAngles bs_to_ris;                 // AoA at the BS
  std::vector<LinkAngles> ris_to_user;  // AoD at the RIS, one per user
};

inline AngleSet derive_angles(const SystemConfig& cfg) {
  AngleSet a;
  for (const auto& u : cfg.user_pos) a.bs_to_user.push_back(link_angles(cfg.bs_pos, u));
  a.ris_to_bs = link_angles(cfg.ris_pos, cfg.bs_pos);
  a.bs_to_ris = link_angles(cfg.bs_pos, cfg.ris_pos);
  for (const auto& u : cfg.user_pos) a.ris_to_user.push_back(link_angles(cfg.ris_pos, u));
  return a;
}

// URA response: Kronecker product of the horizontal factor (phase
// 2*pi*spacing*m*sin(az)cos(el)) and the vertical factor (phase
// 2*pi*spacing*m*sin(az)sin(el)). Every entry has unit modulus.
inline CVec steering_vector(double azimuth, double elevation, int n_h, int n_v,
                            double spacing_ratio) {
  if (n_h < 1 || n_v < 1) throw ConfigError("array factors must be >= 1");
  const double ph = 2.0 * kPi * spacing_ratio * std::sin(azimuth) * std::cos(elevation);
  const double pv = 2.0 * kPi * spacing_ratio * std::sin(azimuth) * std::sin(elevation);
  CVec h(n_h), v(n_v);
  for (int m = 0; m < n_h; ++m) h(m) = std::polar(1.0, ph * m);
  for (int m = 0; m < n_v; ++m) v(m) = std::polar(1.0, pv * m);
  CVec out(n_h * n_v);
  Eigen::Index idx = 0;
  for (int i = 0; i < n_h; ++i)
    for (int j = 0; j < n_v; ++j) out(idx++) = h(i) * v(j);
  return out;
}

// Gain in dB at distance d: pl0 at d0, decaying by 10*beta dB per decade.
inline double path_loss_db(double pl0_db, double beta, double d0, double d) {
  if (d <= 0 || d0 <= 0) throw ConfigError("distances must be positive");
  return pl0_db - 10.0 * beta * std::log10(d / d0);
}

inline double doppler_shift_hz(double speed_mps, double azimuth, double elevation,
                               double lambda_c) {
  if (lambda_c <= 0) throw ConfigError("wavelength must be positive");
  return speed_mps * std::cos(azimuth) * std::cos(elevation) / lambda_c;
}

// diag(h_r^H) * G: row n of G scaled by conj(h_r[n]).
inline CMat cascade(const CVec& h_r, const CMat& g) {
  if (h_r.size() != g.rows()) throw DimensionError("cascade: dimension mismatch");
  CMat out = g;
  for (Eigen::Index n = 0; n < g.rows(); ++n) out.row(n) *= std::conj(h_r(n));
  return out;
}

struct ChannelSet {
  CMat h_d;                // M x K, column k = BS->user k
  CMat g;                  // N x M, BS->RIS
  CMat h_r;                // N x K, column k = RIS->user k
  std::vector<CMat> h_cas; // K cascaded N x M matrices diag(h_r_k^H) g
};

// One Rician snapshot. The same (config, stream seed) pair reproduces the
// set bit for bit; sampling order is h_d columns, then g, then h_r columns.
inline ChannelSet generate_channels(const SystemConfig& cfg, RngStream& rng) {
  cfg.validate();
  const int m = cfg.bs_antennas();
  const int n = cfg.ris_elements();
  const int k_users = cfg.k_users;
  const AngleSet ang = derive_angles(cfg);
  const double kappa = cfg.kappa_linear();
  const double w_los = std::sqrt(kappa / (kappa + 1.0));
  const double w_nlos = std::sqrt(1.0 / (kappa + 1.0));
  const double lambda = cfg.lambda_c();

  ChannelSet cs;
  cs.h_d.resize(m, k_users);
  for (int k = 0; k < k_users; ++k) {
    const double d = (cfg.user_pos[k] - cfg.bs_pos).norm();
    const double pl = db_to_linear(path_loss_db(cfg.pl0_db, cfg.beta_d, cfg.d0_m, d));
    const auto& a = ang.bs_to_user[k];
    const double fd = doppler_shift_hz(cfg.train_speed_mps, a.azimuth, a.elevation, lambda);
    const CVec los = std::polar(1.0, 2.0 * kPi * fd * cfg.slot_tau_s) *
                     steering_vector(a.azimuth, a.elevation, cfg.m_h, cfg.m_v,
                                     cfg.element_spacing_ratio);
    cs.h_d.col(k) = std::sqrt(pl) * (w_los * los + w_nlos * rng.cgaussian_vector(m));
  }

  {
    const double d = (cfg.ris_pos - cfg.bs_pos).norm();
    const double pl = db_to_linear(path_loss_db(cfg.pl0_db, cfg.beta_g, cfg.d0_m, d));
    const CVec a_r = steering_vector(ang.ris_to_bs.azimuth, ang.ris_to_bs.elevation,
                                     cfg.n_h, cfg.n_v, cfg.element_spacing_ratio);
    const CVec a_b = steering_vector(ang.bs_to_ris.azimuth, ang.bs_to_ris.elevation,
                                     cfg.m_h, cfg.m_v, cfg.element_spacing_ratio);
    const CMat los = a_r * a_b.adjoint();
    cs.g = std::sqrt(pl) * (w_los * los + w_nlos * rng.cgaussian_matrix(n, m));
  }

  cs.h_r.resize(n, k_users);
  for (int k = 0; k < k_users; ++k) {
    const double d = (cfg.user_pos[k] - cfg.ris_pos).norm();
    const double pl = db_to_linear(path_loss_db(cfg.pl0_db, cfg.beta_r, cfg.d0_m, d));
    const auto& a = ang.ris_to_user[k];
    const double fd = doppler_shift_hz(cfg.train_speed_mps, a.azimuth, a.elevation, lambda);
    const CVec los = std::polar(1.0, 2.0 * kPi * fd * cfg.slot_tau_s) *
                     steering_vector(a.azimuth, a.elevation, cfg.n_h, cfg.n_v,
                                     cfg.element_spacing_ratio);
    cs.h_r.col(k) = std::sqrt(pl) * (w_los * los + w_nlos * rng.cgaussian_vector(n));
  }

  for (int k = 0; k < k_users; ++k) cs.h_cas.push_back(cascade(cs.h_r.col(k), cs.g));
  return cs;
}

}  // namespace risbeam::scenario

#endif
