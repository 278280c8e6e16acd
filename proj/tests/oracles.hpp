// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Test-side brute-force oracles, independent of the library's
// implementation paths.

#ifndef RISBEAM_TESTS_ORACLES_HPP
#define RISBEAM_TESTS_ORACLES_HPP

#include "risbeam/common.hpp"
#include "risbeam/rng.hpp"

namespace oracles {

using risbeam::CMat;
using risbeam::CVec;
using risbeam::RVec;
using risbeam::cxd;

inline double quad_form(const CMat& e, const CVec& ev, double g, const CVec& x) {
  return (x.adjoint() * e * x)(0).real() + 2.0 * (ev.adjoint() * x)(0).real() + g;
}

// Exact minimum of x^H E x + 2 Re{e^H x} + g over ||x|| <= radius
// (trust-region subproblem, via eigendecomposition plus a secular bisection).
inline double min_quadratic_on_ball(const CMat& e, const CVec& ev, double g,
                                    double radius) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (e + e.adjoint()));
  const RVec lam = es.eigenvalues();
  const CVec b = es.eigenvectors().adjoint() * ev;
  const auto norm_at = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < lam.size(); ++i)
      s += std::norm(b(i)) / ((lam(i) + mu) * (lam(i) + mu));
    return std::sqrt(s);
  };
  const auto value_at = [&](double mu) {
    // y_i = -b_i / (lam_i + mu)
    double val = g;
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
      const double yi2 = std::norm(b(i)) / ((lam(i) + mu) * (lam(i) + mu));
      val += lam(i) * yi2 - 2.0 * std::norm(b(i)) / (lam(i) + mu);
    }
    return val;
  };
  const double lam_min = lam(0);
  // interior candidate
  if (lam_min > 0.0 && norm_at(0.0) <= radius) return value_at(0.0);
  // boundary: find mu > max(0, -lam_min) with ||y(mu)|| = radius
  double lo = std::max(0.0, -lam_min) + 1e-14;
  while (norm_at(lo) < radius) lo *= 0.5;  // generic instances blow up at the pole
  double hi = std::max(1.0, 2.0 * lo);
  while (norm_at(hi) > radius) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (norm_at(mid) > radius)
      lo = mid;
    else
      hi = mid;
  }
  return value_at(0.5 * (lo + hi));
}

// Uniform draw in / on the complex ball of given radius.
inline CVec ball_sample(int n, double radius, bool boundary, risbeam::RngStream& rng) {
  CVec x = rng.cgaussian_vector(n);
  const double nrm = x.norm();
  if (nrm == 0.0) return CVec::Zero(n);
  double r = radius;
  if (!boundary) r = radius * std::pow(rng.uniform_pos(), 1.0 / (2.0 * n));
  return x * (r / nrm);
}

}  // namespace oracles

#endif
