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

#include "dualcert/choi.hpp"

#include <string>
#include <utility>

namespace dualcert {

namespace {

void require_input_dim(const MapSpec& m, const CMatrix& X) {
  if (X.dim() != m.n)
    throw DimensionMismatch("apply_map: X dim " + std::to_string(X.dim()) +
                            " != n = " + std::to_string(m.n));
}

// Choi matrix with an optional transpose composed on the output side.
CMatrix choi_mat_impl(const MapSpec& m, bool transpose_output) {
  const int n = m.n, p = m.p;
  CMatrix out(n * p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CMatrix img = apply_map(m, CMatrix::unit(n, i, j));
      if (transpose_output) img = img.transpose();
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) out(i * p + a, j * p + b) = img(a, b);
    }
  return out;
}

}  // namespace

const char* to_string(Builtin b) {
  switch (b) {
    case Builtin::Identity: return "identity";
    case Builtin::Transpose: return "transpose";
    case Builtin::TraceDepolarize: return "trace_depolarize";
  }
  return "unknown";
}

MapSpec MapSpec::kraus(int n, int p, std::vector<RectMatrix> ops) {
  if (n < 1 || p < 1) throw InvalidArgument("kraus: dims must be positive");
  if (ops.empty()) throw InvalidArgument("kraus: need at least one operator");
  for (const RectMatrix& K : ops) {
    if (K.rows != p || K.cols != n)
      throw DimensionMismatch("kraus: operator is " + std::to_string(K.rows) + "x" +
                              std::to_string(K.cols) + ", expected " +
                              std::to_string(p) + "x" + std::to_string(n));
    if (!K.all_finite()) throw InvalidArgument("kraus: non-finite entry");
  }
  return MapSpec{n, p, KrausOps{std::move(ops)}};
}

MapSpec MapSpec::superop_mat(int n, int p, RectMatrix mat) {
  if (mat.rows != p * p || mat.cols != n * n)
    throw DimensionMismatch("superop_mat: matrix is " + std::to_string(mat.rows) + "x" +
                            std::to_string(mat.cols) + ", expected " +
                            std::to_string(p * p) + "x" + std::to_string(n * n));
  if (!mat.all_finite()) throw InvalidArgument("superop_mat: non-finite entry");
  return MapSpec{n, p, SuperMat{std::move(mat)}};
}

MapSpec MapSpec::builtin(Builtin b, int n) {
  if (n < 1) throw InvalidArgument("builtin: n must be positive");
  return MapSpec{n, n, b};
}

MapSpec MapSpec::conjugation(const CMatrix& C) {
  return kraus(C.dim(), C.dim(), {RectMatrix::from_square(C)});
}

MapSpec MapSpec::from_superop(const SuperOp& S) {
  return superop_mat(S.n, S.n, RectMatrix::from_square(S.mat));
}

CMatrix apply_map(const MapSpec& m, const CMatrix& X) {
  require_input_dim(m, X);
  const int n = m.n, p = m.p;
  if (const auto* kr = std::get_if<KrausOps>(&m.body)) {
    CMatrix out(p);
    for (const RectMatrix& K : kr->ops) {
      // out += K X K^*
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
          Complex acc = 0.0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              acc += K.at(a, i) * X(i, j) * std::conj(K.at(b, j));
          out(a, b) += acc;
        }
    }
    return out;
  }
  if (const auto* sm = std::get_if<SuperMat>(&m.body)) {
    CMatrix out(p);
    for (int r = 0; r < p * p; ++r) {
      Complex acc = 0.0;
      for (int k = 0; k < n * n; ++k) acc += sm->mat.at(r, k) * X.flat()[k];
      out.flat()[r] = acc;
    }
    return out;
  }
  switch (std::get<Builtin>(m.body)) {
    case Builtin::Identity: return X;
    case Builtin::Transpose: return X.transpose();
    case Builtin::TraceDepolarize: return X.trace() * CMatrix::identity(n);
  }
  throw InvalidArgument("apply_map: unknown builtin");
}

CMatrix ChoiMatrix::block(int i, int j) const {
  CMatrix B(p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) B(a, b) = mat(i * p + a, j * p + b);
  return B;
}

ChoiMatrix choi_matrix(const MapSpec& m) {
  return ChoiMatrix{m.n, m.p, choi_mat_impl(m, false)};
}

bool is_cp(const MapSpec& m, double tol) { return is_psd(choi_matrix(m).mat, tol); }

bool is_ccp(const MapSpec& m, double tol) { return is_psd(choi_mat_impl(m, true), tol); }

CMatrix generalized_choi(const MapSpec& m, const MatrixBasis& basis, bool transposed) {
  if (basis.n != m.n)
    throw DimensionMismatch("generalized_choi: basis n " + std::to_string(basis.n) +
                            " != map n = " + std::to_string(m.n));
  CMatrix out(m.p * m.n);
  for (const CMatrix& Bj : basis.elements) {
    const CMatrix img = apply_map(m, Bj);
    out = out + kron(img, transposed ? Bj.transpose() : Bj);
  }
  return out;
}

CMatrix jamiolkowski(const MapSpec& m) {
  const int n = m.n, p = m.p;
  CMatrix out(n * p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix img = apply_map(m, CMatrix::unit(n, i, j));
      // E_ij^* = E_ji, so the image lands in block (j, i).
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) out(j * p + a, i * p + b) = img(a, b);
    }
  return out;
}

CMatrix conjugate_choi(const MapSpec& m, const MatrixBasis& onb) {
  if (onb.n != m.n)
    throw DimensionMismatch("conjugate_choi: basis n " + std::to_string(onb.n) +
                            " != map n = " + std::to_string(m.n));
  if (!is_orthonormal(onb))
    throw NotOrthonormalError("conjugate_choi: basis is not orthonormal");
  CMatrix out(m.n * m.p);
  for (const CMatrix& Bl : onb.elements)
    out = out + kron(Bl.conj(), apply_map(m, Bl));
  return out;
}

CMatrix pauli_block_condition(const MapSpec& m) {
  if (m.n != 2)
    throw DimensionMismatch("pauli_block_condition: map must act on M_2");
  const MatrixBasis pauli = pauli_basis();
  const CMatrix P0 = apply_map(m, pauli.elements[0]);
  const CMatrix P1 = apply_map(m, pauli.elements[1]);
  const CMatrix P2 = apply_map(m, pauli.elements[2]);
  const CMatrix P3 = apply_map(m, pauli.elements[3]);
  const Complex I(0.0, 1.0);
  const int p = m.p;
  CMatrix out(2 * p);
  const CMatrix blocks[2][2] = {{P0 + P3, P1 + I * P2}, {P1 - I * P2, P0 - P3}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) out(i * p + a, j * p + b) = blocks[i][j](a, b);
  return out;
}

}  // namespace dualcert
