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

#include "dualcert/superop.hpp"

#include <Eigen/Dense>

#include <string>

namespace dualcert {

namespace {

void require_dim(const SuperOp& S, const CMatrix& X) {
  if (X.dim() != S.n)
    throw DimensionMismatch("superop apply: X dim " + std::to_string(X.dim()) +
                            " != n = " + std::to_string(S.n));
}

}  // namespace

SuperOp identity_superop(int n) { return SuperOp{n, CMatrix::identity(n * n)}; }

SuperOp transpose_superop(int n) {
  SuperOp S{n, CMatrix(n * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) S.mat(j * n + i, i * n + j) = 1.0;
  return S;
}

SuperOp superop_from_action(int n,
                            const std::function<CMatrix(const CMatrix&)>& action) {
  SuperOp S{n, CMatrix(n * n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = i * n + j;
      const CMatrix img = action(CMatrix::unit(n, i, j));
      if (img.dim() != n)
        throw DimensionMismatch("superop_from_action: action image has wrong dim");
      for (int r = 0; r < n * n; ++r) S.mat(r, k) = img.flat()[r];
    }
  return S;
}

CMatrix apply(const SuperOp& S, const CMatrix& X) {
  require_dim(S, X);
  const int m = S.n * S.n;
  CMatrix out(S.n);
  for (int r = 0; r < m; ++r) {
    Complex acc = 0.0;
    for (int k = 0; k < m; ++k) acc += S.mat(r, k) * X.flat()[k];
    out.flat()[r] = acc;
  }
  return out;
}

CMatrix apply_inverse(const SuperOp& S, const CMatrix& X) {
  require_dim(S, X);
  const int m = S.n * S.n;
  Eigen::MatrixXcd A(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) A(r, c) = S.mat(r, c);
  Eigen::VectorXcd rhs(m);
  for (int k = 0; k < m; ++k) rhs(k) = X.flat()[k];
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
  if (!lu.isInvertible())
    throw InvalidArgument("apply_inverse: superoperator is singular");
  Eigen::VectorXcd y = lu.solve(rhs);
  CMatrix out(S.n);
  for (int k = 0; k < m; ++k) out.flat()[k] = y(k);
  return out;
}

SuperOp compose(const SuperOp& S1, const SuperOp& S2) {
  if (S1.n != S2.n)
    throw DimensionMismatch("superop compose: n " + std::to_string(S1.n) + " vs " +
                            std::to_string(S2.n));
  return SuperOp{S1.n, S1.mat * S2.mat};
}

SuperOp transpose_rep(const SuperOp& S) { return SuperOp{S.n, S.mat.transpose()}; }

SuperOp change_of_basis(const MatrixBasis& basis) {
  ensure_basis(basis);
  SuperOp S{basis.n, CMatrix(basis.size())};
  for (int k = 0; k < basis.size(); ++k)
    for (int r = 0; r < basis.size(); ++r) S.mat(r, k) = basis.elements[k].flat()[r];
  return S;
}

SuperOp m_map(const MatrixBasis& basis) {
  const SuperOp C = change_of_basis(basis);
  return compose(C, transpose_rep(C));
}

}  // namespace dualcert
