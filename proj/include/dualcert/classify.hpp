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

#ifndef DUALCERT_CLASSIFY_HPP
#define DUALCERT_CLASSIFY_HPP

#include <optional>
#include <vector>

#include "dualcert/bases.hpp"
#include "dualcert/cmatrix.hpp"

namespace dualcert {

enum class VerdictKind { CompleteOrderIso, CoPositiveOrderIso, NotOrderIso };

const char* to_string(VerdictKind kind);

// Rank-one-PSD screening of one candidate Choi matrix. Eigenvalues are
// those of the symmetrized (M + M^*)/2 when M is not Hermitian; the
// residual is ||M - lambda_1^+ v_1 v_1^*||_F / (1 + ||M||_F), measured
// against the original M.
struct RankOneDiagnostics {
  bool hermitian = false;
  double herm_defect = 0.0;
  std::vector<double> smallest_eigenvalues;  // up to four, ascending
  double min_eigenvalue = 0.0;
  double residual = 0.0;
};

struct VerdictDiagnostics {
  RankOneDiagnostics k1;  // Choi matrix of M_B
  RankOneDiagnostics k2;  // Choi matrix of t o M_B
  // Max over k of the factorization defect on matrix units, for the
  // accepted branch; unset for NotOrderIso.
  std::optional<double> action_residual;
};

// Outcome of the order-isomorphism test for a duality map. C is present
// and invertible for the first two kinds: M_B = Phi_C, respectively
// M_B = t o Phi_C, up to the stated residual bounds.
struct DualityVerdict {
  VerdictKind kind = VerdictKind::NotOrderIso;
  std::optional<CMatrix> C;
  VerdictDiagnostics diagnostics;
};

// If M (of dim n^2, viewed in M_n (x) M_n) is Hermitian, PSD and
// rank-one within tol, returns the C with M = Choi(Phi_C), i.e.
// C_ki = sqrt(lambda_1) * v1[i*n + k], phase-normalized so the
// largest-modulus entry of C is real positive (ties: lowest row-major
// index). Returns nullopt otherwise.
std::optional<CMatrix> rank_one_psd_factor(const CMatrix& M, double tol = kTolRank);

// Decides whether the duality map of the basis is a complete order
// isomorphism (M_B = Phi_C), a co-positive order isomorphism
// (M_B = t o Phi_C), or not an order isomorphism. The two candidate
// factorizations cannot both succeed for n >= 2; for n = 1 ties resolve
// to CompleteOrderIso.
DualityVerdict classify_duality(const MatrixBasis& basis, double tol = kTolRank);

// Closed-form test for bases {lambda_ij E_ij}: the duality map is an
// order isomorphism iff (lambda_ij^2) is PSD of rank one, in which case
// it is a complete order isomorphism with C = diag(alpha),
// lambda_ij^2 = alpha_i * conj(alpha_j). The co-positive case cannot
// occur for scaled-unit bases.
DualityVerdict classify_scaled_unit(const CMatrix& lambda, double tol = kTolRank);

}  // namespace dualcert

#endif
