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

#ifndef DUALCERT_CMATRIX_HPP
#define DUALCERT_CMATRIX_HPP

#include <complex>
#include <vector>

#include "dualcert/errors.hpp"

namespace dualcert {

using Complex = std::complex<double>;

// Default tolerances. Positivity and rank decisions are relative,
// scaled by (1 + Frobenius norm of the tested matrix).
inline constexpr double kTolPsd = 1e-9;
inline constexpr double kTolRank = 1e-8;
inline constexpr double kTolHerm = 1e-9;

// Dense square complex matrix, row-major storage. The flat index of
// entry (i, j) is i*dim + j; this convention is shared with SuperOp
// coordinates and the Choi block layout.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}

  static CMatrix zero(int dim) { return CMatrix(dim); }
  static CMatrix identity(int dim);
  // Matrix unit E_ij.
  static CMatrix unit(int dim, int i, int j);
  static CMatrix diag(const std::vector<Complex>& d);
  static CMatrix from_flat(int dim, std::vector<Complex> entries);

  int dim() const { return dim_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * dim_ + j];
  }

  // Row-major entries; equals the flat coordinate vector of the matrix.
  const std::vector<Complex>& flat() const { return a_; }
  std::vector<Complex>& flat() { return a_; }

  CMatrix transpose() const;
  CMatrix conj() const;
  CMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

 private:
  int dim_ = 0;
  std::vector<Complex> a_;
};

CMatrix operator+(const CMatrix& A, const CMatrix& B);
CMatrix operator-(const CMatrix& A, const CMatrix& B);
CMatrix operator*(const CMatrix& A, const CMatrix& B);
CMatrix operator*(Complex s, const CMatrix& A);
CMatrix operator*(double s, const CMatrix& A);

// Largest entrywise absolute difference; matrices must share dim.
double max_abs_diff(const CMatrix& A, const CMatrix& B);

// Rectangular complex matrix, row-major. Carrier for Kraus operators
// (p x n) and superoperator matrices of maps M_n -> M_p (p^2 x n^2).
struct RectMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> a;

  RectMatrix() = default;
  RectMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Complex& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Complex& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  bool all_finite() const;

  static RectMatrix from_square(const CMatrix& M);
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k is the eigenvector for values[k]
};

// Hilbert-Schmidt inner product tr(A B^*); linear in A, conjugate-linear in B.
Complex hs_inner(const CMatrix& A, const CMatrix& B);

// Kronecker product; block (i, j) of the result is A_ij * B.
CMatrix kron(const CMatrix& A, const CMatrix& B);

enum class Factor { First, Second };

// Partial transpose of M in M_n (x) M_p. Factor::First moves block (i, j)
// to block (j, i); Factor::Second transposes each block in place.
CMatrix partial_transpose(const CMatrix& M, Factor factor, int n, int p);

// The *-isomorphism M_a (x) M_b -> M_b (x) M_a taking A (x) B to B (x) A.
CMatrix swap_kron_factors(const CMatrix& M, int a, int b);

double hermiticity_defect(const CMatrix& M);  // ||M - M^*||_F

// Eigendecomposition of a Hermitian matrix. Requires
// ||M - M^*||_F <= tol*(1 + ||M||_F); the symmetrized (M + M^*)/2 is
// decomposed. Throws NotHermitianError otherwise.
EigenDecomposition herm_eig(const CMatrix& M, double tol = kTolHerm);

// True iff min eigenvalue >= -tol*(1 + ||M||_F). Throws NotHermitianError.
bool is_psd(const CMatrix& M, double tol = kTolPsd);

}  // namespace dualcert

#endif
