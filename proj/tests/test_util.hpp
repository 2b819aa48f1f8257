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

#ifndef DUALCERT_TESTS_TEST_UTIL_HPP
#define DUALCERT_TESTS_TEST_UTIL_HPP

#include <complex>
#include <initializer_list>
#include <vector>

#include "dualcert/bases.hpp"
#include "dualcert/cmatrix.hpp"

namespace dualcert::testing {

inline CMatrix mat_of(std::initializer_list<std::initializer_list<Complex>> rows) {
  CMatrix M(static_cast<int>(rows.size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Complex& z : row) M(i, j++) = z;
    ++i;
  }
  return M;
}

inline bool approx_eq(const CMatrix& A, const CMatrix& B, double tol = 1e-12) {
  return A.dim() == B.dim() && max_abs_diff(A, B) <= tol;
}

// Independent trace-of-product oracle, entry loops only.
inline Complex trace_product_oracle(const CMatrix& A, const CMatrix& B) {
  Complex t = 0.0;
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < A.dim(); ++k) t += A(i, k) * B(k, i);
  return t;
}

// Gram-Schmidt under the Hilbert-Schmidt inner product; input must be
// linearly independent.
inline std::vector<CMatrix> gs_orthonormalize(std::vector<CMatrix> mats) {
  for (size_t k = 0; k < mats.size(); ++k) {
    for (size_t l = 0; l < k; ++l) {
      const Complex c = hs_inner(mats[k], mats[l]);
      mats[k] = mats[k] - c * mats[l];
    }
    const double norm = mats[k].frobenius_norm();
    mats[k] = (1.0 / norm) * mats[k];
  }
  return mats;
}

inline CMatrix swap_matrix() {
  CMatrix S(4);
  S(0, 0) = S(1, 2) = S(2, 1) = S(3, 3) = 1.0;
  return S;
}

}  // namespace dualcert::testing

#endif
