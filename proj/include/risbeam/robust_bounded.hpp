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
// Worst-case transmit designs under norm-ball CSI errors: a tangent
// minorant of the useful-signal power turns the semi-infinite QoS rows into
// S-procedure LMIs, the interference rows into sign-definiteness LMIs, and
// the unit-modulus reflection constraints are handled by a penalty
// convex-concave loop. Alternation between the precoder and reflection
// subproblems drives the transmit power down monotonically.

#ifndef RISBEAM_ROBUST_BOUNDED_HPP
#define RISBEAM_ROBUST_BOUNDED_HPP

#include <optional>
#include <string>
#include <vector>

#include "risbeam/design_common.hpp"
#include "risbeam/rng.hpp"
#include "risbeam/uncertainty.hpp"

namespace risbeam::bounded {

using design::BeamformingSolution;
using design::DesignError;
using design::IterationRecord;

enum class Scenario { pcu, fcu };

struct DesignParams {
  double ao_tol = 1e-3;  // relative power change
  int ao_max_iters = 30;
  double nu0 = 1e-3;       // initial penalty weight
  double nu_growth = 2.0;  // gamma
  double nu_max = 1e4;
  double slack_tol = 1e-5;   // accepted ||b||_1 at exit
  double theta_stop = 1e-4;  // ||theta_t - theta_{t-1}||_1 stop
  int ccp_max_iters = 30;    // T_max before a restart
  int ccp_restarts = 3;
  conic::Tolerances solver;
};

// Tangent minorant of |(h^H + theta^H (Hhat + dH)) w|^2 around a previous
// iterate (w_prev, theta_prev), quadratic in the stacked error coordinate
// x = [dh; vec(dH^*)] and affine in whichever of w/theta is the active
// decision block. Holds globally: minorant(x) <= true power for all x and
// all feasible (w, theta); equality at the expansion point with x = 0.
struct SignalSurrogate {
  conic::CxAffineMat quad;   // acts on the stacked coordinate
  conic::CxAffineVec lin;    // S-procedure linear coefficient e0
  conic::RealAffine scalar;  // value at zero error
  int direct_dim = 0;        // M when the direct error block is present
  int cascaded_dim = 0;      // N*M
};

inline SignalSurrogate signal_power_surrogate(const CVec& h_direct, const CMat& h_cas,
                                              const conic::CxAffineVec& w,
                                              const conic::CxAffineVec& theta,
                                              const CVec& w_prev, const CVec& theta_prev,
                                              bool include_direct) {
  using namespace conic;
  const int m = static_cast<int>(h_direct.size());
  const int n = static_cast<int>(h_cas.rows());
  if (h_cas.cols() != m || static_cast<int>(w.size()) != m ||
      static_cast<int>(theta.size()) != n || w_prev.size() != m ||
      theta_prev.size() != n)
    throw DimensionError("signal_power_surrogate: dimension mismatch");

  // a = (h^H + theta^H Hhat) w, affine in the active block
  const CxAffineVec hw = mat_vec(h_cas, w);  // Hhat w
  CxAffine a = adjoint_dot(h_direct, w);
  for (int i = 0; i < n; ++i) a += mul(conj(theta[i]), hw[i]);

  const CVec u_prev = h_direct + h_cas.adjoint() * theta_prev;
  const cxd c_prev = (u_prev.adjoint() * w_prev)(0);  // (h^H + theta_prev^H Hhat) w_prev

  // phi = [w; w kron conj(theta)], psi = same at the previous iterate
  CxAffineVec phi;
  CVec psi(include_direct ? m + n * m : n * m);
  if (include_direct)
    for (int i = 0; i < m; ++i) phi.push_back(w[i]);
  const CxAffineVec tail = kron_vec(w, conj(theta));
  phi.insert(phi.end(), tail.begin(), tail.end());
  Eigen::Index at = 0;
  if (include_direct)
    for (int i = 0; i < m; ++i) psi(at++) = w_prev(i);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) psi(at++) = w_prev(i) * std::conj(theta_prev(j));

  SignalSurrogate s;
  s.direct_dim = include_direct ? m : 0;
  s.cascaded_dim = n * m;
  const CxAffineVec psi_aff = to_affine(psi);
  CxAffineMat p = outer_adjoint(phi, psi_aff);
  s.quad = p + p.adjoint() - CxAffineMat(CMat(psi * psi.adjoint()));

  const CxAffine a_conj = conj(a);
  s.lin = CxAffineVec(phi.size());
  for (size_t i = 0; i < phi.size(); ++i)
    s.lin[i] = mul(a_conj, CxAffine(psi(i))) + std::conj(c_prev) * phi[i] -
               CxAffine(std::conj(c_prev) * psi(i));

  s.scalar = (2.0 * (std::conj(c_prev) * a)).real_part();
  s.scalar -= conic::RealAffine(std::norm(c_prev));
  return s;
}

// Numeric value of a surrogate instantiated at a decision point, evaluated
// against a concrete error realization (test and certification hook).
inline double surrogate_value(const SignalSurrogate& s, const RVec& decision,
                              const CVec& d_h_dir, const CMat& d_h_cas) {
  using conic::Program;
  const CMat q = Program::value(s.quad, decision);
  const CVec e = Program::value(s.lin, decision);
  const double c = Program::value(s.scalar, decision);
  CVec x(s.direct_dim + s.cascaded_dim);
  Eigen::Index at = 0;
  if (s.direct_dim > 0)
    for (int i = 0; i < s.direct_dim; ++i) x(at++) = d_h_dir(i);
  const CVec z = vec(d_h_cas.conjugate());
  for (Eigen::Index i = 0; i < z.size(); ++i) x(at++) = z(i);
  return (x.adjoint() * q * x)(0).real() + 2.0 * (e.adjoint() * x)(0).real() + c;
}

// Worst-case useful-signal row as an S-procedure LMI:
// minorant(x) >= gamma * iota (+ alpha) for all errors in the ball(s).
// Zero-radius balls pin their error coordinates to zero, so those rows and
// columns are eliminated instead of emitted; with every radius zero the row
// degenerates to the scalar constraint minorant(0) >= gamma * iota.
inline conic::SProcedureResult add_qos_lmi(conic::Program& prog, const SignalSurrogate& s,
                                           const conic::RealAffine& iota, double gamma_snr,
                                           double xi_cascaded, double xi_direct,
                                           const std::optional<conic::RealAffine>& alpha) {
  using namespace conic;
  RealAffine g0 = s.scalar;
  g0 -= gamma_snr * iota;
  if (alpha) g0 -= *alpha;

  std::vector<std::pair<int, int>> spans;  // (offset, size) kept
  std::vector<NormBall> balls;
  int at = 0;
  if (s.direct_dim > 0 && xi_direct > 0.0) {
    balls.push_back({0, s.direct_dim, xi_direct});
    spans.emplace_back(0, s.direct_dim);
    at = s.direct_dim;
  }
  if (xi_cascaded > 0.0) {
    balls.push_back({at, s.cascaded_dim, xi_cascaded});
    spans.emplace_back(s.direct_dim, s.cascaded_dim);
  }
  if (balls.empty()) {
    prog.add_linear_ge(g0);
    return {};
  }

  std::vector<int> keep;
  for (const auto& [off, size] : spans)
    for (int i = 0; i < size; ++i) keep.push_back(off + i);
  const Eigen::Index d = static_cast<Eigen::Index>(keep.size());
  CxAffineMat quad(d, d);
  CxAffineVec lin(d);
  for (Eigen::Index r = 0; r < d; ++r) {
    lin[r] = s.lin[keep[r]];
    for (Eigen::Index c = 0; c < d; ++c) quad.at(r, c) = s.quad.at(keep[r], keep[c]);
  }
  return s_procedure_lmi(prog, quad, lin, g0, balls);
}

// Worst-case interference rows. Full form (precoder step): the
// sign-definiteness block over the ball(s); reduced form (reflection step,
// precoder constants folded in): the top-left corner with its slacks.
inline conic::SignDefResult add_interference_lmi_full(
    conic::Program& prog, const conic::CxAffineVec& r_hat, const conic::RealAffine& iota,
    double sigma2, const CVec& theta_fixed,
    const std::vector<conic::CxAffineVec>& w_others, double xi_cascaded,
    std::optional<double> xi_direct) {
  using namespace conic;
  const int k_minus = static_cast<int>(r_hat.size());
  const int m = w_others.empty() ? 0 : static_cast<int>(w_others[0].size());
  const int n = static_cast<int>(theta_fixed.size());
  const Eigen::Index dim = 1 + k_minus;

  CxAffineMat e(dim, dim);
  e.at(0, 0) = CxAffine(iota - RealAffine(sigma2));
  for (int j = 0; j < k_minus; ++j) {
    e.at(0, 1 + j) = conj(r_hat[j]);
    e.at(1 + j, 0) = r_hat[j];
    e.at(1 + j, 1 + j) += CxAffine(1.0);
  }

  // Y = -[0, W_{-k}] (m x dim), Z = [theta, 0] (n x dim) for the cascaded
  // ball; Z = e_1^T for the direct ball.
  CxAffineMat y(m, dim);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) y.at(r, c) = CxAffine();
  for (int j = 0; j < k_minus; ++j)
    for (int r = 0; r < m; ++r) y.at(r, 1 + j) = cxd(-1.0, 0.0) * w_others[j][r];

  std::vector<SignDefFactor> factors;
  if (xi_cascaded > 0.0) {
    CMat z_cas = CMat::Zero(n, dim);
    z_cas.col(0) = theta_fixed;
    factors.push_back({y, z_cas, xi_cascaded});
  }
  if (xi_direct && *xi_direct > 0.0) {
    CMat z_dir = CMat::Zero(1, dim);
    z_dir(0, 0) = cxd(1.0, 0.0);
    factors.push_back({y, z_dir, *xi_direct});
  }
  if (factors.empty()) {  // error-free: plain Schur form of the power row
    prog.add_psd(e);
    return {};
  }
  return sign_definiteness_lmi(prog, e, factors);
}

inline void add_interference_lmi_reduced(conic::Program& prog,
                                         const conic::CxAffineVec& r_hat,
                                         const conic::RealAffine& iota, double sigma2,
                                         int ris_n, bool full_uncertainty) {
  using namespace conic;
  const int k_minus = static_cast<int>(r_hat.size());
  const Eigen::Index dim = 1 + k_minus;
  const int mu = prog.add_nonnegative("in_slack_cas");
  RealAffine corner = iota - RealAffine(sigma2);
  corner -= static_cast<double>(ris_n) * RealAffine::variable(mu);
  if (full_uncertainty) {
    const int eta = prog.add_nonnegative("in_slack_dir");
    corner -= RealAffine::variable(eta);
  }
  CxAffineMat e(dim, dim);
  e.at(0, 0) = CxAffine(corner);
  for (int j = 0; j < k_minus; ++j) {
    e.at(0, 1 + j) = conj(r_hat[j]);
    e.at(1 + j, 0) = r_hat[j];
    e.at(1 + j, 1 + j) += CxAffine(1.0);
  }
  prog.add_psd(e);
}

struct PrecoderStep {
  conic::SolveStatus status = conic::SolveStatus::numerical_failure;
  CMat w;
  RVec iota;
  double power = 0.0;
};

// Precoder subproblem at fixed reflection vector: minimize ||W||_F^2
// subject to the robust QoS and interference LMIs.
inline PrecoderStep solve_precoder(const design::ScaledProblem& prob, double r_th,
                                   const uncertainty::BoundedErrorModel& err,
                                   const CVec& theta_fixed, const CMat& w_prev,
                                   const CVec& theta_prev, Scenario scenario,
                                   const conic::Tolerances& tol) {
  using namespace conic;
  const int k_users = static_cast<int>(prob.h_cas.size());
  const int m = static_cast<int>(prob.h_d.rows());
  const double gamma_snr = std::pow(2.0, r_th) - 1.0;
  const bool fcu = scenario == Scenario::fcu;

  Program prog;
  const int t = prog.add_real("power");
  std::vector<ComplexVectorVar> w;
  for (int k = 0; k < k_users; ++k) w.push_back(prog.add_complex_vector(m, "w"));
  std::vector<int> iota(k_users);
  for (int k = 0; k < k_users; ++k) iota[k] = prog.add_real("iota");

  CxAffineVec all;
  for (int k = 0; k < k_users; ++k)
    for (int i = 0; i < m; ++i) all.push_back(w[k].entry(i));
  prog.add_squared_norm_le(all, RealAffine::variable(t));

  const CxAffineVec theta_aff = to_affine(theta_fixed);
  for (int k = 0; k < k_users; ++k) {
    const auto s = signal_power_surrogate(prob.h_d.col(k), prob.h_cas[k], w[k].entries(),
                                          theta_aff, w_prev.col(k), theta_prev, fcu);
    add_qos_lmi(prog, s, RealAffine::variable(iota[k]), gamma_snr, err.xi_h[k],
                fcu ? err.xi_d[k] : 0.0, std::nullopt);

    CxAffineVec r_hat;
    std::vector<CxAffineVec> w_others;
    const CVec u = design::effective_channel(prob.h_d, prob.h_cas[k], theta_fixed, k);
    for (int j = 0; j < k_users; ++j) {
      if (j == k) continue;
      r_hat.push_back(adjoint_dot(u, w[j].entries()));  // conj((h^H+theta^H Hhat) w_j)
      w_others.push_back(w[j].entries());
    }
    add_interference_lmi_full(prog, r_hat, RealAffine::variable(iota[k]), prob.sigma2,
                              theta_fixed, w_others, err.xi_h[k],
                              fcu ? std::optional<double>(err.xi_d[k]) : std::nullopt);
  }
  prog.minimize(RealAffine::variable(t));

  const auto rep = solve(prog, tol);
  PrecoderStep out;
  out.status = rep.status;
  if (rep.status != SolveStatus::optimal) return out;
  out.w.resize(m, k_users);
  out.iota.resize(k_users);
  for (int k = 0; k < k_users; ++k) {
    out.w.col(k) = Program::value(w[k], rep.x);
    out.iota(k) = rep.x(iota[k]);
  }
  out.power = out.w.squaredNorm();
  return out;
}

// r_hat_k(theta) = W_{-k}^H (h + Hhat^H theta), affine in theta.
inline conic::CxAffineVec interference_rows(const CVec& h_direct, const CMat& h_cas,
                                            const CMat& w_fixed, int user,
                                            const conic::CxAffineVec& theta) {
  using namespace conic;
  CxAffineVec rows;
  const int k_users = static_cast<int>(w_fixed.cols());
  CxAffineVec u = mat_vec(h_cas.adjoint(), theta);
  for (Eigen::Index i = 0; i < h_direct.size(); ++i) u[i] += CxAffine(h_direct(i));
  for (int j = 0; j < k_users; ++j) {
    if (j == user) continue;
    const CVec wj = w_fixed.col(j);
    CxAffine e;
    for (Eigen::Index i = 0; i < wj.size(); ++i) e += std::conj(wj(i)) * u[i];
    rows.push_back(e);
  }
  return rows;
}

struct CcpStep {
  conic::SolveStatus status = conic::SolveStatus::numerical_failure;
  CVec theta;
  double b_l1 = 0.0;
  double alpha_sum = 0.0;
};

// One convexified reflection subproblem: maximize the QoS slacks minus the
// penalty on unit-modulus violations, with the lower modulus bound
// linearized around theta_point.
inline CcpStep ccp_reflection_step(const design::ScaledProblem& prob, double r_th,
                                   const uncertainty::BoundedErrorModel& err,
                                   const CMat& w_fixed, const CVec& theta_point,
                                   double nu, Scenario scenario,
                                   const conic::Tolerances& tol) {
  using namespace conic;
  const int k_users = static_cast<int>(prob.h_cas.size());
  const int n = static_cast<int>(prob.h_cas[0].rows());
  const double gamma_snr = std::pow(2.0, r_th) - 1.0;
  const bool fcu = scenario == Scenario::fcu;

  Program prog;
  const auto theta = prog.add_complex_vector(n, "theta");
  std::vector<int> b(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    b[i] = prog.add_nonnegative("b");
    // violation slacks stay small on any useful path; the cap keeps the
    // small-penalty iterations from trading unbounded slack for QoS slack
    prog.add_linear_ge(RealAffine(4.0) - RealAffine::variable(b[i]));
  }
  std::vector<int> alpha(k_users), iota(k_users);
  for (int k = 0; k < k_users; ++k) {
    alpha[k] = prog.add_nonnegative("alpha");
    iota[k] = prog.add_real("iota");
  }

  for (int k = 0; k < k_users; ++k) {
    const auto s =
        signal_power_surrogate(prob.h_d.col(k), prob.h_cas[k], to_affine(w_fixed.col(k)),
                               theta.entries(), w_fixed.col(k), theta_point, fcu);
    add_qos_lmi(prog, s, RealAffine::variable(iota[k]), gamma_snr, err.xi_h[k],
                fcu ? err.xi_d[k] : 0.0, RealAffine::variable(alpha[k]));
    const auto r_hat = interference_rows(prob.h_d.col(k), prob.h_cas[k], w_fixed, k,
                                         theta.entries());
    add_interference_lmi_reduced(prog, r_hat, RealAffine::variable(iota[k]), prob.sigma2,
                                 n, fcu);
  }

  // |theta_n^t|^2 - 2 Re(theta_n^* theta_n^t) <= b_n - 1
  for (int i = 0; i < n; ++i) {
    RealAffine row = RealAffine::variable(b[i]) - RealAffine(1.0);
    row -= RealAffine(std::norm(theta_point(i)));
    row += (2.0 * mul(conj(theta.entry(i)), CxAffine(theta_point(i)))).real_part();
    prog.add_linear_ge(row);
  }
  // |theta_n|^2 <= 1 + b_{N+n}
  for (int i = 0; i < n; ++i) {
    prog.add_squared_norm_le({theta.entry(i)},
                             RealAffine(1.0) + RealAffine::variable(b[n + i]));
  }

  RealAffine objective;
  for (int k = 0; k < k_users; ++k) objective -= RealAffine::variable(alpha[k]);
  for (int i = 0; i < 2 * n; ++i) objective += nu * RealAffine::variable(b[i]);
  prog.minimize(objective);

  const auto rep = solve(prog, tol);
  CcpStep out;
  out.status = rep.status;
  if (rep.status != SolveStatus::optimal) return out;
  out.theta = Program::value(theta, rep.x);
  for (int i = 0; i < 2 * n; ++i) out.b_l1 += std::max(0.0, rep.x(b[i]));
  for (int k = 0; k < k_users; ++k) out.alpha_sum += rep.x(alpha[k]);
  return out;
}

struct CcpResult {
  bool ok = false;
  CVec theta;
  int iterations = 0;
};

// Penalty loop with growing nu, restart on stall, exact unit-modulus
// projection on exit.
inline CcpResult penalty_ccp(const design::ScaledProblem& prob, double r_th,
                             const uncertainty::BoundedErrorModel& err,
                             const CMat& w_fixed, const CVec& theta_init,
                             const DesignParams& params, Scenario scenario,
                             RngStream& rng) {
  const int n = static_cast<int>(prob.h_cas[0].rows());
  CcpResult res;
  CVec theta_point = theta_init;
  for (int restart = 0; restart <= params.ccp_restarts; ++restart) {
    double nu = params.nu0;
    bool stalled = false;
    for (int it = 0; it < params.ccp_max_iters; ++it) {
      const CcpStep step = ccp_reflection_step(prob, r_th, err, w_fixed, theta_point, nu,
                                               scenario, params.solver);
      ++res.iterations;
      if (step.status != conic::SolveStatus::optimal) {
        stalled = true;
        break;
      }
      const double diff = (step.theta - theta_point).cwiseAbs().sum();
      theta_point = step.theta;
      nu = std::min(params.nu_growth * nu, params.nu_max);
      if (step.b_l1 <= params.slack_tol && diff <= params.theta_stop) {
        res.ok = true;
        res.theta = design::project_unit_modulus(theta_point);
        return res;
      }
    }
    (void)stalled;
    theta_point = rng.unit_modulus_vector(n);
  }
  return res;  // restart budget exhausted
}

// Alternating worst-case design. The reflection update is accepted only if
// the following precoder step does not regress the power, which pins the
// monotone non-increasing trace contract.
inline BeamformingSolution alternating_design(const scenario::ChannelSet& estimates,
                                              double sigma2_mw, double r_th,
                                              const uncertainty::BoundedErrorModel& err,
                                              const DesignParams& params,
                                              Scenario scenario, RngStream& rng) {
  err.validate();
  const int k_users = static_cast<int>(estimates.h_cas.size());
  const int n = static_cast<int>(estimates.h_cas[0].rows());
  const double gamma_snr = std::pow(2.0, r_th) - 1.0;

  design::ScaledProblem prob = design::scale_problem(estimates, sigma2_mw);
  uncertainty::BoundedErrorModel err_s = err;
  for (int k = 0; k < k_users; ++k) {
    err_s.xi_h[k] /= prob.scale;
    err_s.xi_d[k] /= prob.scale;
  }

  BeamformingSolution sol;
  CVec theta = rng.unit_modulus_vector(n);

  // nominal anchor at the initial reflection vector
  std::vector<CVec> v;
  for (int k = 0; k < k_users; ++k)
    v.push_back(design::effective_channel(prob.h_d, prob.h_cas[k], theta, k));
  CMat w_anchor;
  if (gamma_snr > 0) {
    const auto nominal = design::nominal_power_min(v, prob.sigma2, gamma_snr, params.solver);
    w_anchor = nominal ? *nominal : design::matched_filter_anchor(v, prob.sigma2, gamma_snr);
  } else {
    w_anchor = design::matched_filter_anchor(v, prob.sigma2, 1.0);
  }

  double best_power = std::numeric_limits<double>::infinity();
  CMat w_best;
  CVec theta_best = theta;
  CMat w_prev = w_anchor;
  CVec theta_prev = theta;

  for (int iter = 0; iter < params.ao_max_iters; ++iter) {
    PrecoderStep step;
    // the tangent anchor may be too tight on the first pass; retry from a
    // higher-power expansion point
    for (int attempt = 0; attempt < 6; ++attempt) {
      step = solve_precoder(prob, r_th, err_s, theta, w_prev, theta_prev, scenario,
                            params.solver);
      if (step.status == conic::SolveStatus::optimal || iter > 0) break;
      w_prev *= 2.0;
    }
    if (step.status != conic::SolveStatus::optimal) {
      if (iter == 0)
        throw DesignError(
            "robust precoder step infeasible at initialization; relax the rate target "
            "or shrink the uncertainty radii",
            0);
      sol.status = "w_step_" + std::string(conic::to_string(step.status));
      break;
    }
    if (step.power > best_power * (1.0 + 1e-9)) {
      // reflection update regressed the power; keep the previous pair
      sol.status = "converged";
      sol.converged = true;
      break;
    }

    w_best = step.w;
    theta_best = theta;
    const double prev_power = best_power;
    best_power = step.power;
    w_prev = step.w;
    theta_prev = theta;

    IterationRecord rec;
    rec.iter = iter;
    rec.power_w_step = step.power;
    rec.power_theta_step = step.power;
    rec.status = "ok";

    const bool converged =
        std::isfinite(prev_power) &&
        std::abs(prev_power - step.power) <= params.ao_tol * std::max(prev_power, 1e-300);
    if (converged) {
      sol.trace.push_back(rec);
      sol.status = "converged";
      sol.converged = true;
      break;
    }

    if (iter + 1 < params.ao_max_iters) {
      const auto ccp = penalty_ccp(prob, r_th, err_s, w_prev, theta, params, scenario, rng);
      rec.ccp_iters = ccp.iterations;
      if (!ccp.ok) {
        sol.trace.push_back(rec);
        sol.status = "ccp_restarts_exhausted";
        break;
      }
      theta = ccp.theta;
    }
    sol.trace.push_back(rec);
    if (iter + 1 == params.ao_max_iters) sol.status = "max_iterations";
  }

  if (!w_best.size()) throw DesignError("no feasible precoder found", 0);
  sol.w = w_best;
  sol.theta = theta_best;
  sol.power = sol.w.squaredNorm();
  if (sol.status.empty()) sol.status = "max_iterations";
  return sol;
}

}  // namespace risbeam::bounded

#endif
