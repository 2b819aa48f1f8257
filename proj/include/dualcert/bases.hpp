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

#ifndef DUALCERT_BASES_HPP
#define DUALCERT_BASES_HPP

#include <string>
#include <vector>

#include "dualcert/cmatrix.hpp"

namespace dualcert {

enum class BasisKind { Standard, Pauli, Weyl, ScaledUnit, Custom, TensorProduct };

const char* to_string(BasisKind kind);

// Ordered basis of M_n: n^2 matrices plus provenance and per-element
// labels. Basis-hood is certified by the Gram matrix being nonsingular
// (smallest singular value > n^2 * 1e-10 * largest).
struct MatrixBasis {
  int n = 0;
  std::vector<CMatrix> elements;
  BasisKind provenance = BasisKind::Custom;
  std::vector<std::string> labels;

  int size() const { return n * n; }
};

// Matrix units E_ij in row-major (i, j) order.
MatrixBasis standard_basis(int n);

// {sigma_0, sigma_1, sigma_2, sigma_3}; unnormalized by default, the
// normalized flag divides each element by sqrt(2).
MatrixBasis pauli_basis(bool normalized = false);

// {(1/sqrt(n)) U^a V^b} in row-major (a, b) order, with U the cyclic
// shift, V = diag(z^j), z = exp(2*pi*i/n).
MatrixBasis weyl_basis(int n);

// {lambda_ij E_ij}; every lambda_ij must be nonzero.
MatrixBasis scaled_unit_basis(const CMatrix& lambda);

// k-fold tensor products of b's elements, words in lexicographic order
// (first index most significant).
MatrixBasis tensor_power(const MatrixBasis& b, int k);

// Arbitrary basis; validates element count, dims and the Gram check.
MatrixBasis custom_basis(int n, std::vector<CMatrix> elements,
                         std::vector<std::string> labels = {});

// G_jk = hs_inner(B_k, B_j).
CMatrix gram(const MatrixBasis& basis);

// Throws NotABasisError if the Gram matrix is singular per policy,
// or the element list is malformed.
void ensure_basis(const MatrixBasis& basis);

bool is_orthonormal(const MatrixBasis& basis, double tol = 1e-9);

// Dual basis represented by density matrices: tr(D_j B_k) = delta_jk.
struct DualBasis {
  std::vector<CMatrix> densities;
};

// Solves the n^2 x n^2 linear system tr(D_j B_k) = delta_jk.
DualBasis dual_basis(const MatrixBasis& basis);

// Reconstruction against the basis: sum_j tr(f_density B_j) B_j, the
// inverse duality map applied to the functional X -> tr(f_density X).
CMatrix gamma(const MatrixBasis& basis, const CMatrix& f_density);

}  // namespace dualcert

#endif
