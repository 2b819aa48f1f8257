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

#include "dualcert/bases.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <utility>

namespace dualcert {

namespace {

std::string ij_label(const char* prefix, int i, int j) {
  return std::string(prefix) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Gram matrix as an Eigen object, rows/cols in basis order.
Eigen::MatrixXcd gram_eigen(const MatrixBasis& basis) {
  const int m = basis.size();
  Eigen::MatrixXcd G(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) G(j, k) = hs_inner(basis.elements[k], basis.elements[j]);
  return G;
}

}  // namespace

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::Standard: return "standard";
    case BasisKind::Pauli: return "pauli";
    case BasisKind::Weyl: return "weyl";
    case BasisKind::ScaledUnit: return "scaled_unit";
    case BasisKind::Custom: return "custom";
    case BasisKind::TensorProduct: return "tensor_product";
  }
  return "unknown";
}

MatrixBasis standard_basis(int n) {
  if (n < 1) throw InvalidArgument("standard_basis: n must be positive");
  MatrixBasis b;
  b.n = n;
  b.provenance = BasisKind::Standard;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      b.elements.push_back(CMatrix::unit(n, i, j));
      b.labels.push_back(ij_label("E", i, j));
    }
  return b;
}

MatrixBasis pauli_basis(bool normalized) {
  MatrixBasis b;
  b.n = 2;
  b.provenance = BasisKind::Pauli;
  CMatrix s0 = CMatrix::identity(2);
  CMatrix s1(2), s2(2), s3(2);
  s1(0, 1) = 1.0;
  s1(1, 0) = 1.0;
  s2(0, 1) = Complex(0.0, -1.0);
  s2(1, 0) = Complex(0.0, 1.0);
  s3(0, 0) = 1.0;
  s3(1, 1) = -1.0;
  b.elements = {s0, s1, s2, s3};
  b.labels = {"sigma0", "sigma1", "sigma2", "sigma3"};
  if (normalized)
    for (CMatrix& s : b.elements) s = M_SQRT1_2 * s;
  return b;
}

MatrixBasis weyl_basis(int n) {
  if (n < 1) throw InvalidArgument("weyl_basis: n must be positive");
  MatrixBasis b;
  b.n = n;
  b.provenance = BasisKind::Weyl;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int a = 0; a < n; ++a)
    for (int bb = 0; bb < n; ++bb) {
      // U^a V^b = sum_j z^{bj} E_{j+a,j}, z = exp(2*pi*i/n)
      CMatrix W(n);
      for (int j = 0; j < n; ++j) {
        const double angle = 2.0 * M_PI * static_cast<double>(bb) * j / n;
        W((j + a) % n, j) = scale * Complex(std::cos(angle), std::sin(angle));
      }
      b.elements.push_back(W);
      b.labels.push_back(ij_label("W", a, bb));
    }
  return b;
}

MatrixBasis scaled_unit_basis(const CMatrix& lambda) {
  const int n = lambda.dim();
  if (n < 1) throw InvalidArgument("scaled_unit_basis: empty lambda");
  MatrixBasis b;
  b.n = n;
  b.provenance = BasisKind::ScaledUnit;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (std::abs(lambda(i, j)) == 0.0)
        throw ZeroLambdaError("scaled_unit_basis: lambda" + ij_label("", i, j) +
                              " is zero");
      b.elements.push_back(lambda(i, j) * CMatrix::unit(n, i, j));
      b.labels.push_back(ij_label("L", i, j));
    }
  return b;
}

MatrixBasis tensor_power(const MatrixBasis& base, int k) {
  if (k < 1) throw InvalidArgument("tensor_power: k must be positive");
  MatrixBasis b = base;
  for (int step = 1; step < k; ++step) {
    MatrixBasis next;
    next.n = b.n * base.n;
    next.provenance = BasisKind::TensorProduct;
    for (int i = 0; i < b.size(); ++i)
      for (int j = 0; j < base.size(); ++j) {
        next.elements.push_back(kron(b.elements[i], base.elements[j]));
        next.labels.push_back(b.labels[i] + "*" + base.labels[j]);
      }
    b = std::move(next);
  }
  if (k > 1) b.provenance = BasisKind::TensorProduct;
  return b;
}

MatrixBasis custom_basis(int n, std::vector<CMatrix> elements,
                         std::vector<std::string> labels) {
  MatrixBasis b;
  b.n = n;
  b.provenance = BasisKind::Custom;
  b.elements = std::move(elements);
  if (labels.empty())
    for (int i = 0; i < n * n; ++i) labels.push_back("B" + std::to_string(i));
  b.labels = std::move(labels);
  ensure_basis(b);
  return b;
}

CMatrix gram(const MatrixBasis& basis) {
  const int m = basis.size();
  CMatrix G(m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) G(j, k) = hs_inner(basis.elements[k], basis.elements[j]);
  return G;
}

void ensure_basis(const MatrixBasis& basis) {
  const int m = basis.size();
  if (basis.n < 1 || static_cast<int>(basis.elements.size()) != m)
    throw NotABasisError("basis of M_" + std::to_string(basis.n) + " needs " +
                         std::to_string(m) + " elements, got " +
                         std::to_string(basis.elements.size()));
  for (const CMatrix& e : basis.elements) {
    if (e.dim() != basis.n) throw NotABasisError("basis element of wrong dimension");
    if (!e.all_finite()) throw NotABasisError("basis element has non-finite entry");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram_eigen(basis));
  const double largest = svd.singularValues()(0);
  const double smallest = svd.singularValues()(m - 1);
  if (!(smallest > static_cast<double>(m) * 1e-10 * largest))
    throw NotABasisError("gram matrix is singular: smallest/largest singular value = " +
                         std::to_string(largest > 0 ? smallest / largest : 0.0));
}

bool is_orthonormal(const MatrixBasis& basis, double tol) {
  return max_abs_diff(gram(basis), CMatrix::identity(basis.size())) <= tol;
}

DualBasis dual_basis(const MatrixBasis& basis) {
  ensure_basis(basis);
  const int n = basis.n;
  const int m = basis.size();
  // Row k encodes tr(. B_k): coefficient of D_{ab} is (B_k)_{ba}.
  Eigen::MatrixXcd A(m, m);
  for (int k = 0; k < m; ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) A(k, a * n + b) = basis.elements[k](b, a);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
  if (!lu.isInvertible()) throw NotABasisError("dual_basis: pairing system is singular");
  Eigen::MatrixXcd D = lu.solve(Eigen::MatrixXcd::Identity(m, m));
  DualBasis dual;
  for (int j = 0; j < m; ++j) {
    CMatrix Dj(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) Dj(a, b) = D(a * n + b, j);
    dual.densities.push_back(std::move(Dj));
  }
  return dual;
}

CMatrix gamma(const MatrixBasis& basis, const CMatrix& f_density) {
  if (f_density.dim() != basis.n)
    throw DimensionMismatch("gamma: density dim " + std::to_string(f_density.dim()) +
                            " != basis n = " + std::to_string(basis.n));
  CMatrix out(basis.n);
  for (const CMatrix& Bj : basis.elements) {
    const Complex fj = (f_density * Bj).trace();
    out = out + fj * Bj;
  }
  return out;
}

}  // namespace dualcert
