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

#ifndef RISBEAM_LINALG_HPP
#define RISBEAM_LINALG_HPP

#include <Eigen/Dense>

#include "risbeam/common.hpp"

namespace risbeam {

// Column-major stacking.
inline CVec vec(const CMat& m) {
  CVec v(m.size());
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) v(k++) = m(r, c);
  return v;
}

inline CMat unvec(const CVec& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) throw DimensionError("unvec: size mismatch");
  CMat m(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < cols; ++c)
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = v(k++);
  return m;
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// (X + X^H)/2, kills roundoff drift before eigendecompositions.
inline CMat hermitianize(const CMat& x) { return 0.5 * (x + x.adjoint()); }

// Real embedding [[Re H, -Im H],[Im H, Re H]] of a Hermitian H.
// H >= 0 iff the embedding >= 0; each eigenvalue of H appears twice.
inline RMat hermitian_embed(const CMat& h, double herm_tol = 1e-9) {
  if (h.rows() != h.cols()) throw DimensionError("hermitian_embed: not square");
  const double scale = std::max(1.0, h.norm());
  if ((h - h.adjoint()).norm() > herm_tol * scale)
    throw DimensionError("hermitian_embed: input is not Hermitian");
  const Eigen::Index n = h.rows();
  RMat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

inline RVec sorted_eigenvalues(const CMat& hermitian) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitianize(hermitian));
  return es.eigenvalues();
}

inline double min_eigenvalue(const CMat& hermitian) {
  return sorted_eigenvalues(hermitian)(0);
}

inline double max_eigenvalue(const CMat& hermitian) {
  const RVec ev = sorted_eigenvalues(hermitian);
  return ev(ev.size() - 1);
}

// Hermitian PSD square root via eigendecomposition; negative roundoff
// eigenvalues are clipped at zero.
inline CMat psd_sqrt(const CMat& psd) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitianize(psd));
  RVec ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  return es.eigenvectors() * ev.asDiagonal() *
         es.eigenvectors().adjoint();
}

}  // namespace risbeam

#endif
