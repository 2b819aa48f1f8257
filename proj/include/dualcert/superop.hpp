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

#ifndef DUALCERT_SUPEROP_HPP
#define DUALCERT_SUPEROP_HPP

#include <functional>

#include "dualcert/bases.hpp"
#include "dualcert/cmatrix.hpp"

namespace dualcert {

// Element of L(M_n) as an n^2 x n^2 matrix in matrix-unit coordinates.
// The flat coordinate of X at index k = i*n + j is X_ij, so column k of
// mat is the flattening of the image of E_ij.
struct SuperOp {
  int n = 0;
  CMatrix mat;
};

SuperOp identity_superop(int n);
SuperOp transpose_superop(int n);

// Tabulates a linear action on the matrix units.
SuperOp superop_from_action(int n, const std::function<CMatrix(const CMatrix&)>& action);

// unflatten(mat * flatten(X)).
CMatrix apply(const SuperOp& S, const CMatrix& X);

// Solves S.mat * y = flatten(X) rather than forming an inverse.
CMatrix apply_inverse(const SuperOp& S, const CMatrix& X);

// Matrix product S1.mat * S2.mat (composition S1 after S2).
SuperOp compose(const SuperOp& S1, const SuperOp& S2);

// Plain (not conjugate) transpose of the representing matrix.
SuperOp transpose_rep(const SuperOp& S);

// Any change-of-basis map taking E_k to B_k in the basis's stored order.
SuperOp change_of_basis(const MatrixBasis& basis);

// M_B = C_B * C_B^T; independent of the basis's element order.
SuperOp m_map(const MatrixBasis& basis);

}  // namespace dualcert

#endif
