// Copyright 2026 The dualcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualcert/cmatrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace dualcert {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& M) {
  const int n = M.dim();
  Eigen::MatrixXcd out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = M(i, j);
  return out;
}

void require_same_dim(const CMatrix& A, const CMatrix& B, const char* op) {
  if (A.dim() != B.dim())
    throw DimensionMismatch(std::string(op) + ": dims " + std::to_string(A.dim()) +
                            " vs " + std::to_string(B.dim()));
}

}  // namespace

CMatrix CMatrix::identity(int dim) {
  CMatrix M(dim);
  for (int i = 0; i < dim; ++i) M(i, i) = 1.0;
  return M;
}

CMatrix CMatrix::unit(int dim, int i, int j) {
  CMatrix M(dim);
  M(i, j) = 1.0;
  return M;
}

CMatrix CMatrix::diag(const std::vector<Complex>& d) {
  CMatrix M(static_cast<int>(d.size()));
  for (int i = 0; i < M.dim(); ++i) M(i, i) = d[i];
  return M;
}

CMatrix CMatrix::from_flat(int dim, std::vector<Complex> entries) {
  if (static_cast<int>(entries.size()) != dim * dim)
    throw InvalidArgument("from_flat: entries length " + std::to_string(entries.size()) +
                          " != dim^2 = " + std::to_string(dim * dim));
  CMatrix M;
  M.dim_ = dim;
  M.a_ = std::move(entries);
  if (!M.all_finite()) throw InvalidArgument("from_flat: non-finite entry");
  return M;
}

CMatrix CMatrix::transpose() const {
  CMatrix M(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) M(j, i) = (*this)(i, j);
  return M;
}

CMatrix CMatrix::conj() const {
  CMatrix M(dim_);
  for (size_t k = 0; k < a_.size(); ++k) M.a_[k] = std::conj(a_[k]);
  return M;
}

CMatrix CMatrix::adjoint() const { return transpose().conj(); }

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMatrix::all_finite() const {
  for (const Complex& z : a_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

CMatrix operator+(const CMatrix& A, const CMatrix& B) {
  require_same_dim(A, B, "add");
  CMatrix M(A.dim());
  for (size_t k = 0; k < M.flat().size(); ++k) M.flat()[k] = A.flat()[k] + B.flat()[k];
  return M;
}

CMatrix operator-(const CMatrix& A, const CMatrix& B) {
  require_same_dim(A, B, "sub");
  CMatrix M(A.dim());
  for (size_t k = 0; k < M.flat().size(); ++k) M.flat()[k] = A.flat()[k] - B.flat()[k];
  return M;
}

CMatrix operator*(const CMatrix& A, const CMatrix& B) {
  require_same_dim(A, B, "matmul");
  const int n = A.dim();
  CMatrix M(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Complex aik = A(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) M(i, j) += aik * B(k, j);
    }
  return M;
}

CMatrix operator*(Complex s, const CMatrix& A) {
  CMatrix M(A.dim());
  for (size_t k = 0; k < M.flat().size(); ++k) M.flat()[k] = s * A.flat()[k];
  return M;
}

CMatrix operator*(double s, const CMatrix& A) { return Complex(s, 0.0) * A; }

double max_abs_diff(const CMatrix& A, const CMatrix& B) {
  require_same_dim(A, B, "max_abs_diff");
  double m = 0.0;
  for (size_t k = 0; k < A.flat().size(); ++k)
    m = std::max(m, std::abs(A.flat()[k] - B.flat()[k]));
  return m;
}

bool RectMatrix::all_finite() const {
  for (const Complex& z : a)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

RectMatrix RectMatrix::from_square(const CMatrix& M) {
  RectMatrix R(M.dim(), M.dim());
  R.a = M.flat();
  return R;
}

Complex hs_inner(const CMatrix& A, const CMatrix& B) {
  require_same_dim(A, B, "hs_inner");
  // tr(A B^*) = sum_ij A_ij conj(B_ij)
  Complex s = 0.0;
  for (size_t k = 0; k < A.flat().size(); ++k)
    s += A.flat()[k] * std::conj(B.flat()[k]);
  return s;
}

CMatrix kron(const CMatrix& A, const CMatrix& B) {
  const int m = A.dim(), q = B.dim();
  CMatrix M(m * q);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const Complex aij = A(i, j);
      if (aij == 0.0) continue;
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) M(i * q + a, j * q + b) = aij * B(a, b);
    }
  return M;
}

CMatrix partial_transpose(const CMatrix& M, Factor factor, int n, int p) {
  if (M.dim() != n * p)
    throw DimensionMismatch("partial_transpose: dim " + std::to_string(M.dim()) +
                            " != n*p = " + std::to_string(n * p));
  CMatrix out(M.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
          if (factor == Factor::First)
            out(i * p + a, j * p + b) = M(j * p + a, i * p + b);
          else
            out(i * p + a, j * p + b) = M(i * p + b, j * p + a);
        }
  return out;
}

CMatrix swap_kron_factors(const CMatrix& M, int a, int b) {
  if (M.dim() != a * b)
    throw DimensionMismatch("swap_kron_factors: dim " + std::to_string(M.dim()) +
                            " != a*b = " + std::to_string(a * b));
  CMatrix out(M.dim());
  for (int i = 0; i < a; ++i)
    for (int k = 0; k < b; ++k)
      for (int j = 0; j < a; ++j)
        for (int l = 0; l < b; ++l) out(k * a + i, l * a + j) = M(i * b + k, j * b + l);
  return out;
}

double hermiticity_defect(const CMatrix& M) {
  double s = 0.0;
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j) s += std::norm(M(i, j) - std::conj(M(j, i)));
  return std::sqrt(s);
}

EigenDecomposition herm_eig(const CMatrix& M, double tol) {
  const double defect = hermiticity_defect(M);
  if (defect > tol * (1.0 + M.frobenius_norm()))
    throw NotHermitianError("herm_eig: hermiticity defect " + std::to_string(defect));
  const int n = M.dim();
  Eigen::MatrixXcd H = to_eigen(M);
  H = 0.5 * (H + H.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = solver.eigenvalues()(k);
    for (int i = 0; i < n; ++i) out.vectors(i, k) = solver.eigenvectors()(i, k);
  }
  return out;
}

bool is_psd(const CMatrix& M, double tol) {
  EigenDecomposition eig = herm_eig(M);
  if (eig.values.empty()) return true;
  return eig.values.front() >= -tol * (1.0 + M.frobenius_norm());
}

}  // namespace dualcert
