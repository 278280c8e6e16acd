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

#ifndef RISBEAM_DESIGN_COMMON_HPP
#define RISBEAM_DESIGN_COMMON_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "risbeam/conic.hpp"
#include "risbeam/scenario.hpp"
#include "risbeam/solver.hpp"

namespace risbeam::design {

// Channel entries at radio scale are ~1e-5 while noise sits ~1e-8 mW;
// interior-point solves want O(1) data. Dividing every channel by g and the
// noise power by g^2 leaves SINRs and the precoder (hence the reported
// power) unchanged.
struct ScaledProblem {
  CMat h_d;                 // M x K
  std::vector<CMat> h_cas;  // K of N x M
  double sigma2 = 1.0;
  double scale = 1.0;  // divide channels by this
};

inline ScaledProblem scale_problem(const scenario::ChannelSet& est, double sigma2_mw) {
  ScaledProblem p;
  const int k_users = static_cast<int>(est.h_cas.size());
  double energy = 0.0;
  double entries = 0.0;
  for (int k = 0; k < k_users; ++k) {
    energy += est.h_d.col(k).squaredNorm() + est.h_cas[k].squaredNorm();
    entries += static_cast<double>(est.h_d.rows() + est.h_cas[k].size());
  }
  p.scale = entries > 0 ? std::sqrt(energy / entries) : 1.0;
  if (!(p.scale > 0.0)) p.scale = 1.0;
  p.h_d = est.h_d / p.scale;
  for (int k = 0; k < k_users; ++k) p.h_cas.push_back(est.h_cas[k] / p.scale);
  p.sigma2 = sigma2_mw / (p.scale * p.scale);
  return p;
}

// Effective downlink vector seen by user k for a fixed reflection vector.
inline CVec effective_channel(const CMat& h_d, const CMat& h_cas_k, const CVec& theta,
                              int user) {
  return h_d.col(user) + h_cas_k.adjoint() * theta;
}

// Nominal (error-free) power minimization under SINR targets, as an SOCP:
// rotating each w_k so that v_k^H w_k is real turns |v_k^H w_k|^2 >= gamma *
// (interference + sigma2) into a second-order cone row. Used only to anchor
// the alternating designs.
inline std::optional<CMat> nominal_power_min(const std::vector<CVec>& v, double sigma2,
                                             double gamma_snr,
                                             const conic::Tolerances& tol = {}) {
  using namespace conic;
  const int k_users = static_cast<int>(v.size());
  const int m = static_cast<int>(v[0].size());
  Program prog;
  const int t = prog.add_real("power");
  std::vector<ComplexVectorVar> w;
  for (int k = 0; k < k_users; ++k) w.push_back(prog.add_complex_vector(m, "w"));
  CxAffineVec all;
  for (int k = 0; k < k_users; ++k)
    for (int i = 0; i < m; ++i) all.push_back(w[k].entry(i));
  prog.add_squared_norm_le(all, RealAffine::variable(t));
  for (int k = 0; k < k_users; ++k) {
    CxAffineVec rows;
    for (int j = 0; j < k_users; ++j)
      if (j != k) rows.push_back(adjoint_dot(v[k], w[j].entries()));
    rows.push_back(CxAffine(std::sqrt(sigma2)));
    const RealAffine lhs =
        (1.0 / std::sqrt(gamma_snr)) * adjoint_dot(v[k], w[k].entries()).real_part();
    prog.add_soc(rows, lhs);
  }
  prog.minimize(RealAffine::variable(t));
  const auto rep = solve(prog, tol);
  if (rep.status != SolveStatus::optimal) return std::nullopt;
  CMat out(m, k_users);
  for (int k = 0; k < k_users; ++k) out.col(k) = Program::value(w[k], rep.x);
  return out;
}

// Matched-filter columns scaled for the target SINR; last-resort anchor.
inline CMat matched_filter_anchor(const std::vector<CVec>& v, double sigma2,
                                  double gamma_snr) {
  const int k_users = static_cast<int>(v.size());
  const int m = static_cast<int>(v[0].size());
  CMat w(m, k_users);
  for (int k = 0; k < k_users; ++k) {
    const double n2 = v[k].squaredNorm();
    const double amp = n2 > 0 ? std::sqrt(gamma_snr * sigma2 * k_users / n2) : 1.0;
    w.col(k) = amp * v[k].normalized();
  }
  return w;
}

inline CVec project_unit_modulus(const CVec& theta) {
  CVec out(theta.size());
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    const double mag = std::abs(theta(i));
    out(i) = mag > 1e-12 ? theta(i) / mag : cxd(1.0, 0.0);
  }
  return out;
}

struct IterationRecord {
  int iter = 0;
  double power_w_step = 0.0;
  double power_theta_step = 0.0;
  int ccp_iters = 0;
  std::string status;
  double rank_ratio_max = std::numeric_limits<double>::quiet_NaN();
  double randomization_margin = std::numeric_limits<double>::quiet_NaN();
};

struct BeamformingSolution {
  CMat w;      // M x K precoder
  CVec theta;  // N unit-modulus reflection vector
  double power = 0.0;
  std::vector<IterationRecord> trace;
  bool converged = false;
  std::string status;
  std::vector<double> rank_ratios;  // statistical designs: all observed ratios
};

struct DesignError : std::runtime_error {
  int iteration = -1;
  explicit DesignError(const std::string& what, int iter = -1)
      : std::runtime_error(what), iteration(iter) {}
};

}  // namespace risbeam::design

#endif
