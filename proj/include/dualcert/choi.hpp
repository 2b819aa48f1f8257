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

#ifndef DUALCERT_CHOI_HPP
#define DUALCERT_CHOI_HPP

#include <variant>
#include <vector>

#include "dualcert/bases.hpp"
#include "dualcert/cmatrix.hpp"
#include "dualcert/superop.hpp"

namespace dualcert {

struct KrausOps {
  std::vector<RectMatrix> ops;  // each p x n
};

struct SuperMat {
  RectMatrix mat;  // p^2 x n^2; column k = flattening of the image of E_k
};

enum class Builtin { Identity, Transpose, TraceDepolarize };

const char* to_string(Builtin b);

// A linear map M_n -> M_p, given as Kraus operators, a superoperator
// matrix in flat coordinates, or a named builtin (which requires p == n).
struct MapSpec {
  int n = 0;
  int p = 0;
  std::variant<KrausOps, SuperMat, Builtin> body;

  static MapSpec kraus(int n, int p, std::vector<RectMatrix> ops);
  static MapSpec superop_mat(int n, int p, RectMatrix mat);
  static MapSpec builtin(Builtin b, int n);
  // X -> C X C^* as a single-operator Kraus map.
  static MapSpec conjugation(const CMatrix& C);
  static MapSpec from_superop(const SuperOp& S);
};

// Evaluates the map on X (X.dim must equal m.n).
CMatrix apply_map(const MapSpec& m, const CMatrix& X);

// C_Phi = sum_ij E_ij (x) Phi(E_ij) in M_n (x) M_p: n x n blocks of
// size p, block (i, j) = Phi(E_ij).
struct ChoiMatrix {
  int n = 0;
  int p = 0;
  CMatrix mat;

  CMatrix block(int i, int j) const;
};

ChoiMatrix choi_matrix(const MapSpec& m);

// Completely positive: the Choi matrix is PSD. Throws NotHermitianError
// when the Choi matrix is not Hermitian (the map does not preserve
// hermiticity), which is a distinct verdict from false.
bool is_cp(const MapSpec& m, double tol = kTolPsd);

// Completely co-positive: the Choi matrix of t after m is PSD.
bool is_ccp(const MapSpec& m, double tol = kTolPsd);

// sum_j Phi(B_j) (x) B_j (or (x) B_j^t when transposed), in
// M_p (x) M_n — note the output factor comes first, unlike ChoiMatrix.
CMatrix generalized_choi(const MapSpec& m, const MatrixBasis& basis, bool transposed);

// J(Phi) = sum_ij E_ij^* (x) Phi(E_ij) = sum_ij E_ji (x) Phi(E_ij).
CMatrix jamiolkowski(const MapSpec& m);

// sum_l conj(B_l) (x) Phi(B_l) over an orthonormal basis; equals the
// Choi matrix for every admissible onb. Throws NotOrthonormalError.
CMatrix conjugate_choi(const MapSpec& m, const MatrixBasis& onb);

// For maps on M_2: the 2p x 2p block matrix
//   [ Psi(s0)+Psi(s3)   Psi(s1)+i*Psi(s2) ]
//   [ Psi(s1)-i*Psi(s2) Psi(s0)-Psi(s3)   ]
// which is PSD iff the map is completely positive.
CMatrix pauli_block_condition(const MapSpec& m);

}  // namespace dualcert

#endif
