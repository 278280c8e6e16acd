// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#include <catch2/catch_amalgamated.hpp>

#include "risbeam/conic.hpp"
#include "risbeam/rng.hpp"
#include "risbeam/solver.hpp"

using namespace risbeam;
using namespace risbeam::conic;

TEST_CASE("linear program: min x subject to x >= 1") {
  Program prog;
  const int x = prog.add_real("x");
  prog.add_linear_ge(RealAffine::variable(x) - RealAffine(1.0));
  prog.minimize(RealAffine::variable(x));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(rep.objective == Catch::Approx(1.0).margin(1e-6));
}

TEST_CASE("sdp: min Tr X subject to X >= I") {
  Program prog;
  const auto xv = prog.add_hermitian(2, false, "X");
  CxAffineMat shifted = xv.entries();
  shifted.at(0, 0) -= CxAffine(1.0);
  shifted.at(1, 1) -= CxAffine(1.0);
  prog.add_psd(shifted);
  RealAffine tr;
  tr += xv.entry(0, 0).real_part();
  tr += xv.entry(1, 1).real_part();
  prog.minimize(tr);
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(rep.objective == Catch::Approx(2.0).margin(1e-6));
  const CMat xval = Program::value(xv, rep.x);
  REQUIRE(min_eigenvalue(xval) >= 1.0 - 1e-6);
}

TEST_CASE("soc epigraph of a squared norm") {
  Program prog;
  const int t = prog.add_real("t");
  RngStream rng(12);
  const CVec v = rng.cgaussian_vector(3);
  prog.add_squared_norm_le(to_affine(v), RealAffine::variable(t));
  prog.minimize(RealAffine::variable(t));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(rep.objective == Catch::Approx(v.squaredNorm()).epsilon(1e-6));
}

TEST_CASE("soc with variable argument") {
  // min ||w - c|| via epigraph; optimum 0 at w = c
  Program prog;
  const int t = prog.add_real("t");
  const auto w = prog.add_complex_vector(2, "w");
  RngStream rng(3);
  const CVec c = rng.cgaussian_vector(2);
  CxAffineVec diff = w.entries();
  for (int i = 0; i < 2; ++i) diff[i] -= CxAffine(c(i));
  prog.add_soc(diff, RealAffine::variable(t));
  prog.minimize(RealAffine::variable(t));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(rep.objective == Catch::Approx(0.0).margin(1e-4));
  REQUIRE((Program::value(w, rep.x) - c).norm() < 1e-3);
}

TEST_CASE("infeasible program is classified") {
  Program prog;
  const int x = prog.add_real("x");
  prog.add_linear_ge(RealAffine::variable(x) - RealAffine(1.0));   // x >= 1
  prog.add_linear_ge(-1.0 * RealAffine::variable(x) - RealAffine(1.0));  // x <= -1
  prog.minimize(RealAffine::variable(x));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::infeasible);
}

TEST_CASE("unbounded program is classified") {
  Program prog;
  const int x = prog.add_real("x");
  prog.add_linear_ge(RealAffine(5.0) - RealAffine::variable(x));  // x <= 5
  prog.minimize(RealAffine::variable(x));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::unbounded);
}

TEST_CASE("solver determinism") {
  Program prog;
  const auto xv = prog.add_hermitian(2, true, "X");
  CxAffineMat shifted = xv.entries();
  shifted.at(0, 0) -= CxAffine(0.3);
  shifted.at(1, 1) -= CxAffine(0.7);
  prog.add_psd(shifted);
  RealAffine tr = xv.entry(0, 0).real_part() + xv.entry(1, 1).real_part();
  prog.minimize(tr);
  const auto r1 = solve(prog);
  const auto r2 = solve(prog);
  REQUIRE(r1.status == r2.status);
  REQUIRE(r1.objective == r2.objective);
  REQUIRE((r1.x - r2.x).norm() == 0.0);
}

TEST_CASE("mixed cone program with complex coupling") {
  // min Re(a^H w) s.t. ||w|| <= 1: optimum -||a||
  Program prog;
  const auto w = prog.add_complex_vector(3, "w");
  RngStream rng(8);
  const CVec a = rng.cgaussian_vector(3);
  prog.add_soc(w.entries(), RealAffine(1.0));
  prog.minimize(adjoint_dot(a, w.entries()).real_part());
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(rep.objective == Catch::Approx(-a.norm()).epsilon(1e-6));
}

TEST_CASE("report carries a feasible point within tolerance") {
  Program prog;
  const auto h = prog.add_hermitian(3, true, "H");
  // trace at most 1, maximize smallest diagonal -> all equal 1/3
  RealAffine tr;
  for (int i = 0; i < 3; ++i) tr += h.entry(i, i).real_part();
  prog.add_linear_ge(RealAffine(1.0) - tr);
  const int s = prog.add_real("s");
  for (int i = 0; i < 3; ++i)
    prog.add_linear_ge(h.entry(i, i).real_part() - RealAffine::variable(s));
  prog.maximize(RealAffine::variable(s));
  const auto rep = solve(prog);
  REQUIRE(rep.status == SolveStatus::optimal);
  REQUIRE(-rep.objective == Catch::Approx(1.0 / 3.0).margin(1e-5));
  REQUIRE(rep.max_violation <= 1e-7);
}
