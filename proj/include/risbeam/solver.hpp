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
// Dense log-barrier interior-point solver for the conic programs built by
// conic::Program: phase-I relaxation to find a strictly feasible point,
// then path-following Newton centering on the real-embedded blocks.

#ifndef RISBEAM_SOLVER_HPP
#define RISBEAM_SOLVER_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "risbeam/conic.hpp"

namespace risbeam::conic {

struct Tolerances {
  double feasibility = 1e-7;
  double gap = 1e-8;
  int max_iterations = 200;  // Newton steps per phase
};

namespace detail {

struct LinC {
  RVec a;
  double b = 0.0;
};

struct SocC {
  RMat a;   // rows x n
  RVec b;
  RVec c;   // rhs = c^T x + d
  double d = 0.0;
  RMat ata;  // cached a^T a
};

struct PsdC {
  int dim = 0;
  RMat f0;
  std::vector<std::pair<int, RMat>> terms;
};

struct BarrierProblem {
  int n = 0;
  RVec obj;
  double obj0 = 0.0;
  std::vector<LinC> lin;
  std::vector<SocC> soc;
  std::vector<PsdC> psd;

  double degree() const {
    double m = static_cast<double>(lin.size()) + 2.0 * static_cast<double>(soc.size());
    for (const auto& p : psd) m += p.dim;
    return m;
  }

  RMat psd_matrix(const PsdC& p, const RVec& x) const {
    RMat s = p.f0;
    for (const auto& [v, f] : p.terms) s += x(v) * f;
    return s;
  }

  double max_violation(const RVec& x) const {
    double viol = 0.0;
    for (const auto& l : lin) viol = std::max(viol, -(l.a.dot(x) + l.b));
    for (const auto& s : soc) {
      const double rhs = s.c.dot(x) + s.d;
      const double nv = (s.a * x + s.b).norm();
      viol = std::max(viol, nv - rhs);
    }
    for (const auto& p : psd) {
      Eigen::SelfAdjointEigenSolver<RMat> es(psd_matrix(p, x), Eigen::EigenvaluesOnly);
      viol = std::max(viol, -es.eigenvalues()(0));
    }
    return viol;
  }

  std::optional<double> barrier_if_interior(const RVec& x) const {
    double val = 0.0;
    for (const auto& l : lin) {
      const double s = l.a.dot(x) + l.b;
      if (!(s > 0.0)) return std::nullopt;
      val -= std::log(s);
    }
    for (const auto& s : soc) {
      const double rhs = s.c.dot(x) + s.d;
      if (!(rhs > 0.0)) return std::nullopt;
      const double r = rhs * rhs - (s.a * x + s.b).squaredNorm();
      if (!(r > 0.0)) return std::nullopt;
      val -= std::log(r);
    }
    for (const auto& p : psd) {
      Eigen::LLT<RMat> llt(psd_matrix(p, x));
      if (llt.info() != Eigen::Success) return std::nullopt;
      const RMat& l = llt.matrixLLT();
      for (Eigen::Index i = 0; i < l.rows(); ++i) {
        if (!(l(i, i) > 0.0)) return std::nullopt;
        val -= 2.0 * std::log(l(i, i));
      }
    }
    return val;
  }

  void grad_hess(const RVec& x, double t, RVec& g, RMat& h) const {
    g = t * obj;
    h.setZero(n, n);
    for (const auto& l : lin) {
      const double s = l.a.dot(x) + l.b;
      g -= l.a / s;
      h.noalias() += (l.a / s) * (l.a / s).transpose();
    }
    for (const auto& s : soc) {
      const double rhs = s.c.dot(x) + s.d;
      const RVec v = s.a * x + s.b;
      const double r = rhs * rhs - v.squaredNorm();
      const RVec grad_r = 2.0 * rhs * s.c - 2.0 * (s.a.transpose() * v);
      g -= grad_r / r;
      h.noalias() += (2.0 / r) * s.ata;
      h.noalias() -= (2.0 / r) * (s.c * s.c.transpose());
      h.noalias() += (grad_r / r) * (grad_r / r).transpose();
    }
    for (const auto& p : psd) {
      Eigen::LLT<RMat> llt(psd_matrix(p, x));
      const auto lmat = llt.matrixL();
      const int nt = static_cast<int>(p.terms.size());
      std::vector<RMat> bs(nt);
      for (int i = 0; i < nt; ++i) {
        RMat tmp = lmat.solve(p.terms[i].second);
        bs[i] = lmat.solve(tmp.transpose()).transpose();
        g(p.terms[i].first) -= bs[i].trace();
      }
      for (int i = 0; i < nt; ++i)
        for (int j = i; j < nt; ++j) {
          const double hij = bs[i].cwiseProduct(bs[j]).sum();
          const int vi = p.terms[i].first;
          const int vj = p.terms[j].first;
          h(vi, vj) += hij;
          if (vi != vj) h(vj, vi) += hij;
        }
    }
  }
};

// Radius of the safety ball appended to every program. The barrier method
// needs compact sublevel sets; genuine optima of the (well-scaled) programs
// built here live far inside, and an objective pressed against the ball is
// classified unbounded.
inline constexpr double kSafetyRadius = 1e8;
inline constexpr double kUnboundedObjective = -1e7;

inline BarrierProblem assemble(const Program& prog) {
  BarrierProblem bp;
  bp.n = prog.num_vars();
  bp.obj = RVec::Zero(bp.n);
  bp.obj0 = prog.objective().constant;
  for (const auto& [v, c] : prog.objective().terms) bp.obj(v) += c;

  {  // ||x|| <= kSafetyRadius
    SocC ball;
    ball.a = RMat::Identity(bp.n, bp.n);
    ball.b = RVec::Zero(bp.n);
    ball.c = RVec::Zero(bp.n);
    ball.d = kSafetyRadius;
    ball.ata = RMat::Identity(bp.n, bp.n);
    bp.soc.push_back(std::move(ball));
  }

  const auto densify = [&](const RealAffine& a) {
    LinC l;
    l.a = RVec::Zero(bp.n);
    l.b = a.constant;
    for (const auto& [v, c] : a.terms) l.a(v) += c;
    return l;
  };
  for (const auto& l : prog.linear_blocks()) bp.lin.push_back(densify(l));
  for (const auto& s : prog.soc_blocks()) {
    SocC sc;
    sc.a.setZero(static_cast<Eigen::Index>(s.rows.size()), bp.n);
    sc.b.setZero(static_cast<Eigen::Index>(s.rows.size()));
    for (size_t r = 0; r < s.rows.size(); ++r) {
      sc.b(static_cast<Eigen::Index>(r)) = s.rows[r].constant;
      for (const auto& [v, c] : s.rows[r].terms)
        sc.a(static_cast<Eigen::Index>(r), v) += c;
    }
    const LinC rhs = densify(s.rhs);
    sc.c = rhs.a;
    sc.d = rhs.b;
    sc.ata = sc.a.transpose() * sc.a;
    bp.soc.push_back(std::move(sc));
  }
  for (const auto& p : prog.psd_blocks()) {
    PsdC pc;
    pc.dim = p.dim;
    pc.f0 = p.f0;
    pc.terms = p.terms;
    bp.psd.push_back(std::move(pc));
  }
  return bp;
}

// Relaxed copy with one extra variable s added to every block; minimizing s
// from a point made strictly feasible by a large enough s yields an interior
// point of the original problem whenever one exists.
inline BarrierProblem relax(const BarrierProblem& src) {
  BarrierProblem bp;
  bp.n = src.n + 1;
  const int s = src.n;
  bp.obj = RVec::Zero(bp.n);
  bp.obj(s) = 1.0;
  for (const auto& l : src.lin) {
    LinC nl;
    nl.a = RVec::Zero(bp.n);
    nl.a.head(src.n) = l.a;
    nl.a(s) = 1.0;
    nl.b = l.b;
    bp.lin.push_back(std::move(nl));
  }
  for (const auto& c : src.soc) {
    SocC ns;
    ns.a.setZero(c.a.rows(), bp.n);
    ns.a.leftCols(src.n) = c.a;
    ns.b = c.b;
    ns.c = RVec::Zero(bp.n);
    ns.c.head(src.n) = c.c;
    ns.c(s) = 1.0;
    ns.d = c.d;
    ns.ata = ns.a.transpose() * ns.a;
    bp.soc.push_back(std::move(ns));
  }
  for (const auto& p : src.psd) {
    PsdC np;
    np.dim = p.dim;
    np.f0 = p.f0;
    np.terms = p.terms;
    np.terms.emplace_back(s, RMat::Identity(p.dim, p.dim));
    bp.psd.push_back(std::move(np));
  }
  return bp;
}

struct CenterOutcome {
  bool converged = false;  // Newton decrement below tolerance (or stalled)
  bool failed = false;     // factorization/NaN breakdown
  int newton_steps = 0;
};

// Newton centering of t * obj^T x + barrier(x); x must enter interior.
// The decrement tolerance scales with t: near the end of the path the
// decrement bottoms out at numerical precision.
inline CenterOutcome center(const BarrierProblem& bp, RVec& x, double t, int max_steps,
                            const std::function<bool(const RVec&)>& early_exit = nullptr) {
  CenterOutcome out;
  const double lambda_tol = std::max(1e-9, 1e-14 * t);
  RVec g;
  RMat h;
  for (int it = 0; it < max_steps; ++it) {
    bp.grad_hess(x, t, g, h);
    const double ridge = 1e-13 * (1.0 + h.diagonal().cwiseAbs().maxCoeff());
    h.diagonal().array() += ridge;
    Eigen::LDLT<RMat> ldlt(h);
    if (ldlt.info() != Eigen::Success) {
      out.failed = true;
      return out;
    }
    const RVec dx = ldlt.solve(-g);
    if (!dx.allFinite()) {
      out.failed = true;
      return out;
    }
    const double lambda2 = -g.dot(dx);
    if (lambda2 / 2.0 < lambda_tol) {
      out.converged = true;
      return out;
    }
    const double phi0 = t * bp.obj.dot(x) + *bp.barrier_if_interior(x);
    const double noise = 1e-12 * (1.0 + std::abs(phi0));
    double alpha = 1.0;
    bool stepped = false;
    for (int ls = 0; ls < 70; ++ls) {
      const RVec cand = x + alpha * dx;
      const auto bval = bp.barrier_if_interior(cand);
      if (bval) {
        const double phi = t * bp.obj.dot(cand) + *bval;
        // progress below the noise floor is a stall, not a step
        if (phi < phi0 - noise) {
          x = cand;
          stepped = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    ++out.newton_steps;
    if (!stepped) {
      out.converged = true;  // progress below numerical precision
      return out;
    }
    if (early_exit && early_exit(x)) {
      out.converged = true;
      return out;
    }
  }
  return out;  // budget exhausted before convergence
}

}  // namespace detail

struct FeasibilityReport {
  bool feasible = false;
  double margin = 0.0;  // minimized relaxation s*; <= 0 means strict interior
  RVec x;
};

// Phase-I classification only: minimizes the common relaxation s over all
// blocks. Unlike solve(), programs that are feasible only on the boundary
// of the cone product are still classified feasible (s* ~ 0).
inline FeasibilityReport feasibility(const Program& prog,
                                     const Tolerances& tol = Tolerances()) {
  using namespace detail;
  const BarrierProblem bp = assemble(prog);
  BarrierProblem ph1 = relax(bp);
  ph1.obj.setZero();  // ignore the program objective here
  ph1.obj(bp.n) = 1.0;
  RVec x1 = RVec::Zero(ph1.n);
  const double s0 = bp.max_violation(x1.head(bp.n)) + 1.0;
  {
    LinC bound;
    bound.a = RVec::Zero(ph1.n);
    bound.a(bp.n) = 1.0;
    bound.b = 2.0 * s0 + 10.0;
    ph1.lin.push_back(bound);
  }
  x1(bp.n) = s0;
  const double m1 = ph1.degree();
  double t = 1.0;
  for (int round = 0; round < 60; ++round) {
    const auto oc = center(ph1, x1, t, 60);
    const double s = x1(bp.n);
    if (oc.failed) break;
    if (oc.converged && m1 / t < std::max(1e-12, 1e-3 * std::abs(s))) break;
    t *= 10.0;
  }
  FeasibilityReport fr;
  fr.margin = x1(bp.n);
  fr.feasible = fr.margin <= tol.feasibility;
  fr.x = x1.head(bp.n);
  return fr;
}

// Interior-point solve of the real-embedded conic program. Deterministic:
// identical program and tolerances give identical output. Programs without
// a strict interior are reported infeasible.
inline SolveReport solve(const Program& prog, const Tolerances& tol = Tolerances()) {
  using namespace detail;
  SolveReport rep;
  const BarrierProblem bp = assemble(prog);
  RVec x = RVec::Zero(bp.n);

  int total_newton = 0;

  // ---- phase I: find a strictly interior point ----
  const double viol0 = bp.max_violation(x);
  const double margin_thin = 1e-7 * (1.0 + viol0);
  // exit early once the point is comfortably inside; a shallow margin
  // leaves phase II crawling along the cone boundary
  const double margin_deep = std::min(1.0, 0.05 * (1.0 + viol0));
  if (viol0 > -1e-12) {
    const double s0 = viol0 + 1.0;
    // Short centering bursts with aggressive t escalation: at small t the
    // phase-I objective cannot hold the free coordinates, which otherwise
    // wander along barrier-flat rays. The first pass adds a weak pull
    // toward the true objective so phase II does not inherit a huge
    // objective offset; if that pass fails to find an interior point the
    // classification is redone without the pull.
    const auto run_phase1 = [&](bool with_pull, RVec& x_out,
                                double& s_out) -> bool {
      BarrierProblem ph1 = relax(bp);
      const double cmax = bp.obj.cwiseAbs().maxCoeff();
      if (with_pull && cmax > 0.0)
        ph1.obj.head(bp.n) = (1e-3 / (1.0 + cmax)) * bp.obj;
      LinC bound;
      bound.a = RVec::Zero(ph1.n);
      bound.a(bp.n) = 1.0;
      bound.b = 2.0 * s0 + 10.0;
      ph1.lin.push_back(bound);
      RVec x1 = RVec::Zero(ph1.n);
      x1(bp.n) = s0;
      const double m1 = ph1.degree();
      double t = 1.0;
      const auto deep_enough = [&](const RVec& z) { return z(bp.n) < -margin_deep; };
      for (int round = 0; round < tol.max_iterations; ++round) {
        const auto oc = center(ph1, x1, t, 60, deep_enough);
        total_newton += oc.newton_steps;
        if (oc.failed) break;
        if (deep_enough(x1)) break;
        if (oc.converged &&
            m1 / t < 0.1 * std::max(tol.feasibility, std::abs(x1(bp.n))))
          break;
        t *= 10.0;
      }
      x_out = x1.head(bp.n);
      s_out = x1(bp.n);
      return s_out < -margin_thin;
    };

    RVec x_found;
    double s_end = s0;
    bool interior_found = run_phase1(true, x_found, s_end);
    if (!interior_found) interior_found = run_phase1(false, x_found, s_end);
    if (!interior_found) {
      rep.status = SolveStatus::infeasible;
      rep.x = x_found;
      rep.iterations = total_newton;
      rep.max_violation = bp.max_violation(rep.x);
      return rep;
    }
    x = x_found;
  }

  // ---- phase II: path following ----
  const double m = bp.degree();
  double t = 1.0;
  int attempts_at_t = 0;
  for (int round = 0; round < tol.max_iterations; ++round) {
    const auto oc = center(bp, x, t, 400);
    total_newton += oc.newton_steps;
    if (oc.failed || !x.allFinite()) {
      rep.status = SolveStatus::numerical_failure;
      rep.x = x;
      rep.iterations = total_newton;
      return rep;
    }
    const double obj = bp.obj.dot(x);
    if (obj < detail::kUnboundedObjective) {
      rep.status = SolveStatus::unbounded;
      rep.x = x;
      rep.iterations = total_newton;
      return rep;
    }
    if (!oc.converged && ++attempts_at_t < 3) continue;  // re-center once more
    attempts_at_t = 0;
    const double gap_abs = tol.gap * (1.0 + std::abs(obj));
    if (m / t < gap_abs) break;
    t *= 10.0;
    if (round + 1 == tol.max_iterations) {
      rep.status = SolveStatus::numerical_failure;
      rep.x = x;
      rep.iterations = total_newton;
      return rep;
    }
  }

  rep.status = SolveStatus::optimal;
  rep.x = x;
  rep.objective = bp.obj.dot(x) + bp.obj0;
  rep.iterations = total_newton;
  rep.max_violation = std::max(0.0, bp.max_violation(x));
  return rep;
}

}  // namespace risbeam::conic

#endif
