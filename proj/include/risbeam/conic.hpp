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
// Solver-agnostic conic program construction: linear objective over real
// decision variables with linear, second-order-cone and PSD constraint
// blocks. Complex data never reaches the solver; complex affine expressions
// are lowered through the real embedding at build time. The robust
// constraint transformations (Schur lift, S-procedure, sign-definiteness)
// are provided as reusable builders.

#ifndef RISBEAM_CONIC_HPP
#define RISBEAM_CONIC_HPP

#include <iomanip>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "risbeam/common.hpp"
#include "risbeam/linalg.hpp"

namespace risbeam::conic {

// ---------------------------------------------------------------------------
// Affine expressions over real decision variables
// ---------------------------------------------------------------------------

struct RealAffine {
  double constant = 0.0;
  std::vector<std::pair<int, double>> terms;

  RealAffine() = default;
  explicit RealAffine(double c) : constant(c) {}

  RealAffine& operator+=(const RealAffine& o) {
    constant += o.constant;
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  RealAffine& operator-=(const RealAffine& o) {
    constant -= o.constant;
    for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
    return *this;
  }
  RealAffine& operator*=(double s) {
    constant *= s;
    for (auto& [v, c] : terms) c *= s;
    return *this;
  }
  friend RealAffine operator+(RealAffine a, const RealAffine& b) { return a += b; }
  friend RealAffine operator-(RealAffine a, const RealAffine& b) { return a -= b; }
  friend RealAffine operator*(double s, RealAffine a) { return a *= s; }

  static RealAffine variable(int idx, double coeff = 1.0) {
    RealAffine a;
    a.terms.emplace_back(idx, coeff);
    return a;
  }
};

// Complex affine expression; decision variables stay real.
struct CxAffine {
  cxd constant{0.0, 0.0};
  std::vector<std::pair<int, cxd>> terms;

  CxAffine() = default;
  explicit CxAffine(cxd c) : constant(c) {}
  explicit CxAffine(double c) : constant(c, 0.0) {}
  CxAffine(const RealAffine& r) : constant(r.constant, 0.0) {
    for (const auto& [v, c] : r.terms) terms.emplace_back(v, cxd(c, 0.0));
  }

  bool is_constant() const { return terms.empty(); }

  CxAffine& operator+=(const CxAffine& o) {
    constant += o.constant;
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    return *this;
  }
  CxAffine& operator-=(const CxAffine& o) {
    constant -= o.constant;
    for (const auto& [v, c] : o.terms) terms.emplace_back(v, -c);
    return *this;
  }
  CxAffine& operator*=(cxd s) {
    constant *= s;
    for (auto& [v, c] : terms) c *= s;
    return *this;
  }
  friend CxAffine operator+(CxAffine a, const CxAffine& b) { return a += b; }
  friend CxAffine operator-(CxAffine a, const CxAffine& b) { return a -= b; }
  friend CxAffine operator*(cxd s, CxAffine a) { return a *= s; }
  friend CxAffine operator*(double s, CxAffine a) { return a *= cxd(s, 0.0); }

  RealAffine real_part() const {
    RealAffine r;
    r.constant = constant.real();
    for (const auto& [v, c] : terms)
      if (c.real() != 0.0) r.terms.emplace_back(v, c.real());
    return r;
  }
  RealAffine imag_part() const {
    RealAffine r;
    r.constant = constant.imag();
    for (const auto& [v, c] : terms)
      if (c.imag() != 0.0) r.terms.emplace_back(v, c.imag());
    return r;
  }
};

inline CxAffine conj(const CxAffine& a) {
  CxAffine o;
  o.constant = std::conj(a.constant);
  for (const auto& [v, c] : a.terms) o.terms.emplace_back(v, std::conj(c));
  return o;
}

// Product of two affine expressions; at least one side must be constant.
inline CxAffine mul(const CxAffine& a, const CxAffine& b) {
  if (!a.is_constant() && !b.is_constant())
    throw DimensionError("affine product would be quadratic");
  if (a.is_constant()) return a.constant * b;
  return b.constant * a;
}

using CxAffineVec = std::vector<CxAffine>;

inline CxAffineVec to_affine(const CVec& v) {
  CxAffineVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = CxAffine(v(i));
  return out;
}

inline CxAffineVec conj(const CxAffineVec& v) {
  CxAffineVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = conj(v[i]);
  return out;
}

inline CxAffineVec operator*(cxd s, CxAffineVec v) {
  for (auto& e : v) e *= s;
  return v;
}

inline CxAffineVec operator+(CxAffineVec a, const CxAffineVec& b) {
  if (a.size() != b.size()) throw DimensionError("affine vector sum");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline CxAffineVec operator-(CxAffineVec a, const CxAffineVec& b) {
  if (a.size() != b.size()) throw DimensionError("affine vector difference");
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// A * v with constant A
inline CxAffineVec mat_vec(const CMat& a, const CxAffineVec& v) {
  if (a.cols() != static_cast<Eigen::Index>(v.size()))
    throw DimensionError("mat_vec dimensions");
  CxAffineVec out(a.rows());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    CxAffine e;
    for (Eigen::Index c = 0; c < a.cols(); ++c) e += a(r, c) * v[c];
    out[r] = e;
  }
  return out;
}

// a^H v for constant a
inline CxAffine adjoint_dot(const CVec& a, const CxAffineVec& v) {
  if (a.size() != static_cast<Eigen::Index>(v.size()))
    throw DimensionError("adjoint_dot dimensions");
  CxAffine e;
  for (Eigen::Index i = 0; i < a.size(); ++i) e += std::conj(a(i)) * v[i];
  return e;
}

// v^H a = sum conj(v_i) a_i for constant a (affine: conjugate of affine)
inline CxAffine dot_adjoint(const CxAffineVec& v, const CVec& a) {
  if (a.size() != static_cast<Eigen::Index>(v.size()))
    throw DimensionError("dot_adjoint dimensions");
  CxAffine e;
  for (Eigen::Index i = 0; i < a.size(); ++i) e += a(i) * conj(v[i]);
  return e;
}

// Kronecker product of affine vectors; at least one side constant per entry.
inline CxAffineVec kron_vec(const CxAffineVec& a, const CxAffineVec& b) {
  CxAffineVec out;
  out.reserve(a.size() * b.size());
  for (const auto& ea : a)
    for (const auto& eb : b) out.push_back(mul(ea, eb));
  return out;
}

struct CxAffineMat {
  Eigen::Index rows = 0, cols = 0;
  std::vector<CxAffine> data;  // row-major

  CxAffineMat() = default;
  CxAffineMat(Eigen::Index r, Eigen::Index c) : rows(r), cols(c), data(r * c) {}
  explicit CxAffineMat(const CMat& m) : rows(m.rows()), cols(m.cols()), data(m.size()) {
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) at(r, c) = CxAffine(m(r, c));
  }

  CxAffine& at(Eigen::Index r, Eigen::Index c) { return data[r * cols + c]; }
  const CxAffine& at(Eigen::Index r, Eigen::Index c) const { return data[r * cols + c]; }

  CxAffineMat& operator+=(const CxAffineMat& o) {
    if (rows != o.rows || cols != o.cols) throw DimensionError("affine matrix sum");
    for (size_t i = 0; i < data.size(); ++i) data[i] += o.data[i];
    return *this;
  }
  CxAffineMat& operator-=(const CxAffineMat& o) {
    if (rows != o.rows || cols != o.cols) throw DimensionError("affine matrix diff");
    for (size_t i = 0; i < data.size(); ++i) data[i] -= o.data[i];
    return *this;
  }
  friend CxAffineMat operator+(CxAffineMat a, const CxAffineMat& b) { return a += b; }
  friend CxAffineMat operator-(CxAffineMat a, const CxAffineMat& b) { return a -= b; }

  CxAffineMat adjoint() const {
    CxAffineMat o(cols, rows);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) o.at(c, r) = conj(at(r, c));
    return o;
  }
};

// u v^H of affine vectors (one side of each product must be constant).
inline CxAffineMat outer_adjoint(const CxAffineVec& u, const CxAffineVec& v) {
  CxAffineMat m(u.size(), v.size());
  for (size_t r = 0; r < u.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c) m.at(r, c) = mul(u[r], conj(v[c]));
  return m;
}

// ---------------------------------------------------------------------------
// Program
// ---------------------------------------------------------------------------

enum class SolveStatus { optimal, infeasible, unbounded, numerical_failure };

inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    default: return "numerical_failure";
  }
}

struct SolveReport {
  SolveStatus status = SolveStatus::numerical_failure;
  double objective = 0.0;
  RVec x;
  int iterations = 0;
  double max_violation = 0.0;
};

struct ComplexVectorVar {
  int offset = 0;  // layout: re0, im0, re1, im1, ...
  int size = 0;

  CxAffine entry(int i) const {
    CxAffine a;
    a.terms.emplace_back(offset + 2 * i, cxd(1.0, 0.0));
    a.terms.emplace_back(offset + 2 * i + 1, cxd(0.0, 1.0));
    return a;
  }
  CxAffineVec entries() const {
    CxAffineVec v(size);
    for (int i = 0; i < size; ++i) v[i] = entry(i);
    return v;
  }
};

// Hermitian n x n variable: n diagonal reals, then (re, im) per i < j pair.
struct HermitianVar {
  int offset = 0;
  int dim = 0;

  int pair_offset(int i, int j) const {  // i < j
    // pairs enumerated row-major over the strict upper triangle
    const int before = i * dim - i * (i + 1) / 2 + (j - i - 1);
    return offset + dim + 2 * before;
  }
  CxAffine entry(int i, int j) const {
    CxAffine a;
    if (i == j) {
      a.terms.emplace_back(offset + i, cxd(1.0, 0.0));
    } else if (i < j) {
      a.terms.emplace_back(pair_offset(i, j), cxd(1.0, 0.0));
      a.terms.emplace_back(pair_offset(i, j) + 1, cxd(0.0, 1.0));
    } else {
      a.terms.emplace_back(pair_offset(j, i), cxd(1.0, 0.0));
      a.terms.emplace_back(pair_offset(j, i) + 1, cxd(0.0, -1.0));
    }
    return a;
  }
  CxAffineMat entries() const {
    CxAffineMat m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m.at(i, j) = entry(i, j);
    return m;
  }
};

// Real symmetric PSD block S(x) = F0 + sum_i x_i F_i, obtained from a complex
// Hermitian affine expression through the real embedding.
struct PsdBlockData {
  int dim = 0;  // embedded (real) dimension
  RMat f0;
  std::vector<std::pair<int, RMat>> terms;
};

struct SocBlockData {  // || rows(x) || <= rhs(x)
  std::vector<RealAffine> rows;
  RealAffine rhs;
};

class Program {
 public:
  int num_vars() const { return num_vars_; }

  int add_real(const std::string& name = "") {
    names_.push_back(name);
    return num_vars_++;
  }

  int add_nonnegative(const std::string& name = "") {
    const int v = add_real(name);
    add_linear_ge(RealAffine::variable(v));
    return v;
  }

  ComplexVectorVar add_complex_vector(int n, const std::string& name = "") {
    ComplexVectorVar v{num_vars_, n};
    for (int i = 0; i < 2 * n; ++i) add_real(name);
    return v;
  }

  HermitianVar add_hermitian(int n, bool psd, const std::string& name = "") {
    HermitianVar v{num_vars_, n};
    for (int i = 0; i < n * n; ++i) add_real(name);
    if (psd) add_psd(v.entries());
    return v;
  }

  // expr >= 0
  void add_linear_ge(const RealAffine& expr) { linear_.push_back(expr); }

  // ||u|| <= t, complex entries split into real rows
  void add_soc(const CxAffineVec& u, const RealAffine& t) {
    SocBlockData b;
    for (const auto& e : u) {
      b.rows.push_back(e.real_part());
      b.rows.push_back(e.imag_part());
    }
    b.rhs = t;
    soc_.push_back(std::move(b));
  }

  void add_soc_real(const std::vector<RealAffine>& rows, const RealAffine& t) {
    SocBlockData b;
    b.rows = rows;
    b.rhs = t;
    soc_.push_back(std::move(b));
  }

  // ||vec of u||^2 <= t via the standard second-order-cone lift
  // ||[2u; t-1]|| <= t+1, so the objective can carry t itself.
  void add_squared_norm_le(const CxAffineVec& u, const RealAffine& t) {
    SocBlockData b;
    for (const auto& e : u) {
      b.rows.push_back((2.0 * e).real_part());
      b.rows.push_back((2.0 * e).imag_part());
    }
    b.rows.push_back(t - RealAffine(1.0));
    b.rhs = t + RealAffine(1.0);
    soc_.push_back(std::move(b));
  }

  // H(x) >= 0 for a Hermitian affine H; rejects non-Hermitian input.
  int add_psd(const CxAffineMat& h) {
    if (h.rows != h.cols) throw DimensionError("add_psd: block not square");
    const Eigen::Index n = h.rows;
    CMat c0 = CMat::Zero(n, n);
    std::map<int, CMat> coeff;
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) {
        const CxAffine& e = h.at(r, c);
        c0(r, c) += e.constant;
        for (const auto& [v, w] : e.terms) {
          auto it = coeff.find(v);
          if (it == coeff.end()) it = coeff.emplace(v, CMat::Zero(n, n)).first;
          it->second(r, c) += w;
        }
      }
    PsdBlockData blk;
    blk.dim = static_cast<int>(2 * n);
    blk.f0 = hermitian_embed(c0, 1e-8);
    for (auto& [v, m] : coeff) {
      if (m.norm() == 0.0) continue;
      blk.terms.emplace_back(v, hermitian_embed(m, 1e-8));
    }
    psd_.push_back(std::move(blk));
    return static_cast<int>(psd_.size()) - 1;
  }

  void minimize(const RealAffine& obj) { objective_ = obj; }
  void maximize(const RealAffine& obj) { objective_ = -1.0 * obj; }

  const RealAffine& objective() const { return objective_; }
  const std::vector<RealAffine>& linear_blocks() const { return linear_; }
  const std::vector<SocBlockData>& soc_blocks() const { return soc_; }
  const std::vector<PsdBlockData>& psd_blocks() const { return psd_; }

  // ---- numeric extraction -------------------------------------------------

  static double value(const RealAffine& a, const RVec& x) {
    double v = a.constant;
    for (const auto& [i, c] : a.terms) v += c * x(i);
    return v;
  }
  static cxd value(const CxAffine& a, const RVec& x) {
    cxd v = a.constant;
    for (const auto& [i, c] : a.terms) v += c * x(i);
    return v;
  }
  static CVec value(const CxAffineVec& a, const RVec& x) {
    CVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = value(a[i], x);
    return v;
  }
  static CMat value(const CxAffineMat& a, const RVec& x) {
    CMat m(a.rows, a.cols);
    for (Eigen::Index r = 0; r < a.rows; ++r)
      for (Eigen::Index c = 0; c < a.cols; ++c) m(r, c) = value(a.at(r, c), x);
    return m;
  }
  static CVec value(const ComplexVectorVar& v, const RVec& x) {
    CVec out(v.size);
    for (int i = 0; i < v.size; ++i) out(i) = value(v.entry(i), x);
    return out;
  }
  static CMat value(const HermitianVar& v, const RVec& x) {
    CMat out(v.dim, v.dim);
    for (int i = 0; i < v.dim; ++i)
      for (int j = 0; j < v.dim; ++j) out(i, j) = value(v.entry(i, j), x);
    return out;
  }

  // Sparse-triplet text dump: objective, then each cone with its affine data.
  void dump(std::ostream& os) const {
    const auto put = [&os](const RealAffine& a) {
      os << a.constant;
      for (const auto& [v, c] : a.terms) os << " " << v << ":" << c;
      os << "\n";
    };
    os << std::setprecision(17);
    os << "conic-program v1\n";
    os << "vars " << num_vars_ << "\n";
    os << "objective ";
    put(objective_);
    os << "linear " << linear_.size() << "\n";
    for (const auto& l : linear_) {
      os << "  row ";
      put(l);
    }
    os << "soc " << soc_.size() << "\n";
    for (const auto& s : soc_) {
      os << "  cone " << s.rows.size() << "\n";
      for (const auto& r : s.rows) {
        os << "    row ";
        put(r);
      }
      os << "    rhs ";
      put(s.rhs);
    }
    os << "psd " << psd_.size() << "\n";
    for (const auto& p : psd_) {
      os << "  block " << p.dim << " terms " << p.terms.size() << "\n";
      const auto put_mat = [&os](const RMat& m) {
        for (Eigen::Index r = 0; r < m.rows(); ++r)
          for (Eigen::Index c = r; c < m.cols(); ++c)
            if (m(r, c) != 0.0) os << " " << r << "," << c << ":" << m(r, c);
        os << "\n";
      };
      os << "    F0";
      put_mat(p.f0);
      for (const auto& [v, m] : p.terms) {
        os << "    F " << v;
        put_mat(m);
      }
    }
  }

 private:
  int num_vars_ = 0;
  std::vector<std::string> names_;
  RealAffine objective_;
  std::vector<RealAffine> linear_;
  std::vector<SocBlockData> soc_;
  std::vector<PsdBlockData> psd_;
};

// ---------------------------------------------------------------------------
// Constraint-transformation builders
// ---------------------------------------------------------------------------

// [[t, r^H],[r, I]] >= 0; for constant r this is feasible iff t >= ||r||^2.
inline int schur_lift(Program& prog, const RealAffine& t, const CxAffineVec& r) {
  const Eigen::Index m = static_cast<Eigen::Index>(r.size());
  CxAffineMat blk(m + 1, m + 1);
  blk.at(0, 0) = CxAffine(t);
  for (Eigen::Index i = 0; i < m; ++i) {
    blk.at(0, i + 1) = conj(r[i]);
    blk.at(i + 1, 0) = r[i];
    blk.at(i + 1, i + 1) = CxAffine(1.0);
  }
  return prog.add_psd(blk);
}

struct NormBall {
  int offset = 0;   // first coordinate covered by this ball
  int size = 0;     // number of complex coordinates
  double radius = 0.0;
};

struct SProcedureResult {
  std::vector<int> slacks;  // one multiplier per ball
  int psd_block = -1;
};

// Certifies  x^H E0 x + 2 Re{e0^H x} + g0 >= 0  for every x whose ball-
// partitioned coordinate blocks satisfy ||x_i|| <= radius_i, by emitting
//   [[E0 + sum_i rho_i Sel_i, e0],[e0^H, g0 - sum_i rho_i radius_i^2]] >= 0
// with fresh multipliers rho_i >= 0.
inline SProcedureResult s_procedure_lmi(Program& prog, const CxAffineMat& e0_mat,
                                        const CxAffineVec& e0_vec, const RealAffine& g0,
                                        const std::vector<NormBall>& balls) {
  if (e0_mat.rows != e0_mat.cols ||
      e0_mat.rows != static_cast<Eigen::Index>(e0_vec.size()))
    throw DimensionError("s_procedure_lmi: dimension mismatch");
  const Eigen::Index n = e0_mat.rows;
  SProcedureResult res;
  CxAffineMat blk(n + 1, n + 1);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) blk.at(r, c) = e0_mat.at(r, c);
  RealAffine corner = g0;
  for (const auto& ball : balls) {
    const int rho = prog.add_nonnegative("sproc_slack");
    res.slacks.push_back(rho);
    for (int i = 0; i < ball.size; ++i)
      blk.at(ball.offset + i, ball.offset + i) += CxAffine(RealAffine::variable(rho));
    corner -= (ball.radius * ball.radius) * RealAffine::variable(rho);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    blk.at(i, n) = e0_vec[i];
    blk.at(n, i) = conj(e0_vec[i]);
  }
  blk.at(n, n) = CxAffine(corner);
  res.psd_block = prog.add_psd(blk);
  return res;
}

inline SProcedureResult s_procedure_lmi(Program& prog, const CxAffineMat& e0_mat,
                                        const CxAffineVec& e0_vec, const RealAffine& g0,
                                        double radius) {
  return s_procedure_lmi(prog, e0_mat, e0_vec, g0,
                         {NormBall{0, static_cast<int>(e0_vec.size()), radius}});
}

struct SignDefFactor {
  CxAffineMat y;  // b x n, may be affine; enters the off-diagonal blocks
  CMat z;         // a x n, constant; enters the corner through z^H z
  double zeta = 0.0;
};

struct SignDefResult {
  std::vector<int> slacks;
  int psd_block = -1;
};

// Certifies  E >= sum_i (Y_i^H X_i Z_i + Z_i^H X_i^H Y_i)  for all
// ||X_i||_F <= zeta_i by emitting the augmented block
//   [[E - sum_i s_i Z_i^H Z_i, -zeta_1 Y_1^H, ...],
//    [-zeta_1 Y_1,              s_1 I,        ...], ...] >= 0.
// Only the sufficiency direction is exercised.
inline SignDefResult sign_definiteness_lmi(Program& prog, const CxAffineMat& e,
                                           const std::vector<SignDefFactor>& factors) {
  const Eigen::Index n = e.rows;
  if (e.cols != n) throw DimensionError("sign_definiteness_lmi: E not square");
  if (factors.empty() || factors.size() > 2)
    throw DimensionError("sign_definiteness_lmi: supported factor counts are 1 and 2");
  Eigen::Index total = n;
  for (const auto& f : factors) {
    if (f.y.cols != n || f.z.cols() != n)
      throw DimensionError("sign_definiteness_lmi: factor dimensions");
    total += f.y.rows;
  }
  SignDefResult res;
  CxAffineMat blk(total, total);
  for (Eigen::Index r = 0; r < total; ++r)
    for (Eigen::Index c = 0; c < total; ++c) blk.at(r, c) = CxAffine();
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) blk.at(r, c) = e.at(r, c);

  Eigen::Index row0 = n;
  for (const auto& f : factors) {
    const int s = prog.add_nonnegative("signdef_slack");
    res.slacks.push_back(s);
    const CMat zhz = f.z.adjoint() * f.z;
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c)
        if (zhz(r, c) != cxd(0.0, 0.0))
          blk.at(r, c) -= zhz(r, c) * CxAffine(RealAffine::variable(s));
    for (Eigen::Index r = 0; r < f.y.rows; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        CxAffine v = -f.zeta * f.y.at(r, c);
        blk.at(row0 + r, c) = v;
        blk.at(c, row0 + r) = conj(v);
      }
      blk.at(row0 + r, row0 + r) += CxAffine(RealAffine::variable(s));
    }
    row0 += f.y.rows;
  }
  res.psd_block = prog.add_psd(blk);
  return res;
}

}  // namespace risbeam::conic

#endif
