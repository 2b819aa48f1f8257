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

#include "dualcert/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

#include "dualcert/bases.hpp"
#include "dualcert/choi.hpp"
#include "dualcert/classify.hpp"
#include "dualcert/cmatrix.hpp"
#include "dualcert/json_io.hpp"
#include "dualcert/rng.hpp"
#include "dualcert/superop.hpp"
#include "dualcert/witness.hpp"

namespace dualcert {

namespace {

// ---------------------------------------------------------------------
// check bookkeeping

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); result_.pass = true; }

  void bound(double value, double limit, const std::string& what) {
    result_.max_residual = std::max(result_.max_residual, value);
    if (!(value <= limit)) fail(what + " = " + std::to_string(value));
  }

  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }

  // Residual that is informative but has no pass bound of its own.
  void observe(double value) {
    result_.max_residual = std::max(result_.max_residual, value);
  }

  CheckResult finish(const std::string& detail = "") {
    if (result_.pass && !detail.empty()) result_.detail = detail;
    return std::move(result_);
  }

 private:
  void fail(const std::string& what) {
    result_.pass = false;
    if (result_.detail.empty()) result_.detail = what;
  }

  CheckResult result_;
};

struct Ctx {
  int max_n = 6;
  uint64_t seed = 42;
};

// ---------------------------------------------------------------------
// corpora

RectMatrix random_rect(Rng& rng, int rows, int cols) {
  RectMatrix M(rows, cols);
  for (Complex& z : M.a) z = rng.cgauss();
  return M;
}

MapSpec random_kraus_map(Rng& rng, int n, int p, int num_ops) {
  std::vector<RectMatrix> ops;
  for (int k = 0; k < num_ops; ++k) ops.push_back(random_rect(rng, p, n));
  return MapSpec::kraus(n, p, std::move(ops));
}

// Difference of two conjugation sums: hermiticity-preserving and, after
// rejection sampling, not completely positive.
MapSpec random_noncp_map(Rng& rng, int n, int p) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    RectMatrix plus = random_rect(rng, p, n);
    RectMatrix minus = random_rect(rng, p, n);
    for (Complex& z : minus.a) z *= 1.4;
    RectMatrix mat(p * p, n * n);
    // column k = flatten(plus E_k plus^* - minus E_k minus^*)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b)
            mat.at(a * p + b, i * n + j) = plus.at(a, i) * std::conj(plus.at(b, j)) -
                                           minus.at(a, i) * std::conj(minus.at(b, j));
    MapSpec m = MapSpec::superop_mat(n, p, std::move(mat));
    if (!is_cp(m)) return m;
  }
  throw Error("random_noncp_map: rejection sampling failed");
}

// 50 Kraus + 25 non-CP maps cycling over the given (n, p) pairs.
std::vector<MapSpec> map_corpus(Rng& rng, const std::vector<std::pair<int, int>>& dims,
                                int num_kraus, int num_noncp) {
  std::vector<MapSpec> maps;
  for (int k = 0; k < num_kraus; ++k) {
    const auto [n, p] = dims[k % dims.size()];
    maps.push_back(random_kraus_map(rng, n, p, 1 + static_cast<int>(rng.next_u64() % 3)));
  }
  for (int k = 0; k < num_noncp; ++k) {
    const auto [n, p] = dims[k % dims.size()];
    maps.push_back(random_noncp_map(rng, n, p));
  }
  return maps;
}

CMatrix random_invertible(Rng& rng, int n) {
  for (;;) {
    CMatrix C = rng.ginibre(n);
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = C(i, j);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    if (svd.singularValues()(n - 1) > 0.1 * svd.singularValues()(0)) return C;
  }
}

CMatrix random_rank_one_lambda(Rng& rng, int n) {
  CMatrix lambda(n);
  std::vector<Complex> alpha(n);
  for (Complex& a : alpha) {
    do {
      a = rng.cgauss();
    } while (std::abs(a) < 0.2);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lambda(i, j) = std::sqrt(alpha[i] * std::conj(alpha[j]));
  return lambda;
}

MatrixBasis conjugated_unit_basis(const CMatrix& C) {
  const int n = C.dim();
  const CMatrix Cadj = C.adjoint();
  std::vector<CMatrix> elements;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) elements.push_back(C * CMatrix::unit(n, i, j) * Cadj);
  return custom_basis(n, std::move(elements));
}

// Basis whose change-of-basis map is the symmetric square root of the
// transpose superoperator, so M_B equals the transpose map exactly:
// a co-positive example in every dimension.
MatrixBasis sqrt_transpose_basis(int n) {
  std::vector<CMatrix> elements;
  const Complex half_plus(0.5, 0.5);
  const Complex half_minus(0.5, -0.5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        elements.push_back(CMatrix::unit(n, i, i));
      } else {
        elements.push_back(half_plus * CMatrix::unit(n, i, j) +
                           half_minus * CMatrix::unit(n, j, i));
      }
    }
  return custom_basis(n, std::move(elements));
}

// Random orthonormal basis of M_n under the Hilbert-Schmidt inner
// product: QR-orthonormalize n^2 random matrices in flat coordinates.
MatrixBasis random_onb(Rng& rng, int n) {
  const int m = n * n;
  Eigen::MatrixXcd A(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) A(r, c) = rng.cgauss();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  Eigen::MatrixXcd Q = qr.householderQ();
  std::vector<CMatrix> elements;
  for (int c = 0; c < m; ++c) {
    CMatrix B(n);
    for (int r = 0; r < m; ++r) B.flat()[r] = Q(r, c);
    elements.push_back(std::move(B));
  }
  return custom_basis(n, std::move(elements));
}

struct BasisSet {
  std::vector<MatrixBasis> coi;
  std::vector<MatrixBasis> cop;
};

BasisSet bases_for(Rng& rng, int n) {
  BasisSet set;
  set.coi.push_back(standard_basis(n));
  if (n == 2) set.coi.push_back(weyl_basis(2));
  set.coi.push_back(scaled_unit_basis(random_rank_one_lambda(rng, n)));
  set.coi.push_back(conjugated_unit_basis(random_invertible(rng, n)));
  if (n == 2) set.cop.push_back(pauli_basis());
  set.cop.push_back(sqrt_transpose_basis(n));
  {
    const CMatrix C = random_invertible(rng, n);
    const CMatrix Cadj = C.adjoint();
    MatrixBasis s = sqrt_transpose_basis(n);
    std::vector<CMatrix> elements;
    for (const CMatrix& B : s.elements) elements.push_back(C * B * Cadj);
    set.cop.push_back(custom_basis(n, std::move(elements)));
  }
  return set;
}

std::vector<MatrixBasis> builtin_bases(int max_n) {
  std::vector<MatrixBasis> out;
  for (int n = 2; n <= std::min(4, max_n); ++n) out.push_back(standard_basis(n));
  out.push_back(pauli_basis());
  if (max_n >= 4) out.push_back(tensor_power(pauli_basis(), 2));
  for (int n = 2; n <= std::min(4, max_n); ++n) out.push_back(weyl_basis(n));
  for (int n = 2; n <= std::min(4, max_n); ++n) {
    CMatrix lambda(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lambda(i, j) = Complex(1.0 + 0.25 * i + 0.125 * j, 0.1 * (i * n + j));
    out.push_back(scaled_unit_basis(lambda));
  }
  return out;
}

MatrixBasis permuted(const MatrixBasis& b, Rng& rng) {
  MatrixBasis out = b;
  out.provenance = BasisKind::Custom;
  for (int k = b.size() - 1; k > 0; --k) {
    const int r = static_cast<int>(rng.next_u64() % static_cast<uint64_t>(k + 1));
    std::swap(out.elements[k], out.elements[r]);
    std::swap(out.labels[k], out.labels[r]);
  }
  return out;
}

double action_vs_conjugation(const SuperOp& S, const CMatrix& C, bool transposed) {
  const CMatrix Cadj = C.adjoint();
  double worst = 0.0;
  for (int i = 0; i < S.n; ++i)
    for (int j = 0; j < S.n; ++j) {
      const CMatrix E = CMatrix::unit(S.n, i, j);
      CMatrix expect = C * E * Cadj;
      if (transposed) expect = expect.transpose();
      worst = std::max(worst, (apply(S, E) - expect).frobenius_norm());
    }
  return worst;
}

// ---------------------------------------------------------------------
// pauli suite

CheckResult check_pauli_m_map(const Ctx&) {
  Check c("pauli.m_map_matrix");
  const SuperOp M = m_map(pauli_basis());
  CMatrix expected(4);
  expected(0, 0) = 2.0;
  expected(1, 2) = 2.0;
  expected(2, 1) = 2.0;
  expected(3, 3) = 2.0;
  c.bound(max_abs_diff(M.mat, expected), 1e-12, "m_map(pauli) deviation");
  c.bound(max_abs_diff(M.mat, 2.0 * transpose_superop(2).mat), 1e-12,
          "m_map(pauli) vs 2*transpose");
  return c.finish("4x4 matrix matches twice the transpose map");
}

CheckResult check_pauli_classify(const Ctx&) {
  Check c("pauli.classify");
  const DualityVerdict v = classify_duality(pauli_basis());
  c.require(v.kind == VerdictKind::CoPositiveOrderIso,
            std::string("verdict = ") + to_string(v.kind));
  if (v.C) {
    // M_B = t o Phi_C with Phi_C = conjugation by sqrt(2)*I.
    const SuperOp S = m_map(pauli_basis());
    c.bound(action_vs_conjugation(S, *v.C, true), 1e-8, "t o Phi_C action defect");
    c.bound(std::abs((*v.C)(0, 0) - Complex(M_SQRT2, 0.0)), 1e-9, "C(0,0) vs sqrt(2)");
    c.bound(std::abs((*v.C)(0, 1)), 1e-9, "C off-diagonal");
  } else {
    c.require(false, "verdict carries no C");
  }
  return c.finish("co-positive order isomorphism with C ~ sqrt(2) I");
}

CheckResult check_pauli_gram(const Ctx&) {
  Check c("pauli.gram");
  c.bound(max_abs_diff(gram(pauli_basis()), 2.0 * CMatrix::identity(4)), 1e-12,
          "gram(pauli) vs 2I");
  c.bound(max_abs_diff(gram(pauli_basis(true)), CMatrix::identity(4)), 1e-12,
          "gram(normalized pauli) vs I");
  for (int k = 2; k <= 3; ++k) {
    const MatrixBasis b = tensor_power(pauli_basis(), k);
    const double scale = std::pow(2.0, k);
    c.bound(max_abs_diff(gram(b), scale * CMatrix::identity(b.size())), 1e-12,
            "gram(pauli^(x)" + std::to_string(k) + ")");
  }
  return c.finish();
}

CheckResult check_pauli_block_criterion(const Ctx& ctx) {
  Check c("pauli.block_criterion");
  Rng rng(ctx.seed ^ 0x70617531ull);
  const std::vector<MapSpec> maps =
      map_corpus(rng, {{2, 2}, {2, 3}}, 50, 25);
  int disagreements = 0;
  for (const MapSpec& m : maps) {
    const bool cp = is_cp(m);
    const bool block = is_psd(pauli_block_condition(m));
    if (cp != block) ++disagreements;
  }
  c.require(disagreements == 0,
            std::to_string(disagreements) + " disagreements out of 75");
  c.observe(static_cast<double>(disagreements));
  return c.finish("block condition PSD iff CP on 75 maps");
}

CheckResult check_pauli_tensor_m_map(const Ctx&) {
  Check c("pauli.tensor_m_map");
  const MatrixBasis b = tensor_power(pauli_basis(), 2);
  const SuperOp M = m_map(b);
  c.bound(max_abs_diff(M.mat, 4.0 * transpose_superop(4).mat), 1e-12,
          "m_map(pauli tensor 2) vs 4*transpose");
  const DualityVerdict v = classify_duality(b);
  c.require(v.kind == VerdictKind::CoPositiveOrderIso,
            std::string("verdict = ") + to_string(v.kind));
  return c.finish("two-qubit spin basis is co-positive, M_B = 4t");
}

CheckResult check_pauli_tensor_criterion(const Ctx& ctx) {
  Check c("pauli.tensor_criterion");
  Rng rng(ctx.seed ^ 0x70617532ull);
  const MatrixBasis b4 = tensor_power(pauli_basis(), 2);
  const std::vector<MapSpec> maps =
      map_corpus(rng, {{4, 2}, {4, 3}}, 13, 12);
  int disagreements = 0;
  for (const MapSpec& m : maps) {
    if (is_cp(m) != is_psd(generalized_choi(m, b4, true))) ++disagreements;
    if (is_ccp(m) != is_psd(generalized_choi(m, b4, false))) ++disagreements;
  }
  c.require(disagreements == 0,
            std::to_string(disagreements) + " disagreements out of 25 maps");
  return c.finish("two-qubit spin criterion matches CP/co-CP on 25 maps");
}

// ---------------------------------------------------------------------
// weyl suite

CheckResult check_weyl_expansion(const Ctx& ctx) {
  Check c("weyl.expansion");
  for (int n = 2; n <= ctx.max_n; ++n) {
    // Independent route: powers of the explicitly assembled U and V.
    CMatrix U(n), V(n);
    for (int j = 0; j < n; ++j) {
      U((j + 1) % n, j) = 1.0;
      const double angle = 2.0 * M_PI * j / n;
      V(j, j) = Complex(std::cos(angle), std::sin(angle));
    }
    const MatrixBasis w = weyl_basis(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    CMatrix Ua = CMatrix::identity(n);
    for (int a = 0; a < n; ++a) {
      CMatrix UaVb = Ua;
      for (int b = 0; b < n; ++b) {
        c.bound(max_abs_diff(scale * UaVb, w.elements[a * n + b]), 1e-12,
                "weyl(" + std::to_string(n) + ") element (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
        UaVb = UaVb * V;
      }
      Ua = Ua * U;
    }
  }
  return c.finish("U^a V^b = sum_j z^(bj) E_(j+a,j) up to n = " +
                  std::to_string(ctx.max_n));
}

CheckResult check_weyl_gram(const Ctx& ctx) {
  Check c("weyl.gram_orthonormal");
  for (int n = 2; n <= ctx.max_n; ++n) {
    const MatrixBasis w = weyl_basis(n);
    c.bound(max_abs_diff(gram(w), CMatrix::identity(w.size())), 1e-12,
            "gram(weyl " + std::to_string(n) + ") vs I");
  }
  return c.finish();
}

CheckResult check_weyl_m_map_entries(const Ctx& ctx) {
  Check c("weyl.m_map_entries");
  for (int n = 2; n <= ctx.max_n; ++n) {
    const SuperOp M = m_map(weyl_basis(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int cc = 0; cc < n; ++cc)
          for (int d = 0; d < n; ++d) {
            const bool one =
                (b == (((-d) % n + n) % n)) && (a == (((cc - 2 * d) % n + n) % n));
            const double expect = one ? 1.0 : 0.0;
            c.bound(std::abs(M.mat(a * n + b, cc * n + d) - expect), 1e-10,
                    "entry (" + std::to_string(a) + std::to_string(b) + "," +
                        std::to_string(cc) + std::to_string(d) + ") at n = " +
                        std::to_string(n));
          }
  }
  return c.finish("C_W C_W^T entries are delta(b,-d) delta(a,c-2d), n <= " +
                  std::to_string(ctx.max_n));
}

CheckResult check_weyl_action(const Ctx& ctx) {
  Check c("weyl.action_form");
  for (int n = 2; n <= ctx.max_n; ++n) {
    const SuperOp M = m_map(weyl_basis(n));
    for (int cc = 0; cc < n; ++cc)
      for (int d = 0; d < n; ++d) {
        const CMatrix img = apply(M, CMatrix::unit(n, cc, d));
        const CMatrix expect =
            CMatrix::unit(n, ((cc - 2 * d) % n + n) % n, ((-d) % n + n) % n);
        c.bound(max_abs_diff(img, expect), 1e-10,
                "action on E(" + std::to_string(cc) + "," + std::to_string(d) +
                    ") at n = " + std::to_string(n));
      }
  }
  return c.finish("M_W permutes matrix units E(c,d) -> E(c-2d,-d)");
}

CheckResult check_weyl_classify(const Ctx&) {
  Check c("weyl.classify");
  const DualityVerdict v2 = classify_duality(weyl_basis(2));
  c.require(v2.kind == VerdictKind::CompleteOrderIso,
            std::string("weyl:2 verdict = ") + to_string(v2.kind));
  if (v2.C) {
    // M_W is the identity map at n = 2.
    c.bound(action_vs_conjugation(m_map(weyl_basis(2)), *v2.C, false), 1e-9,
            "weyl:2 identity action defect");
  }
  for (int n = 3; n <= 5; ++n) {
    const DualityVerdict v = classify_duality(weyl_basis(n));
    c.require(v.kind == VerdictKind::NotOrderIso,
              "weyl:" + std::to_string(n) + " verdict = " + to_string(v.kind));
    c.require(v.diagnostics.k1.residual > 0.1,
              "weyl:" + std::to_string(n) + " k1 residual not clear of boundary");
    c.require(v.diagnostics.k2.residual > 0.1,
              "weyl:" + std::to_string(n) + " k2 residual not clear of boundary");
  }
  return c.finish("complete order isomorphism at n = 2 only");
}

// ---------------------------------------------------------------------
// rankone suite

CheckResult check_rankone_grids(const Ctx& ctx) {
  Check c("rankone.random_grids");
  Rng rng(ctx.seed ^ 0x726f6e65ull);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    const CMatrix lambda = random_rank_one_lambda(rng, n);
    const DualityVerdict v = classify_duality(scaled_unit_basis(lambda));
    c.require(v.kind == VerdictKind::CompleteOrderIso,
              "trial " + std::to_string(trial) + ": " + to_string(v.kind));
    if (v.kind == VerdictKind::CompleteOrderIso && v.diagnostics.action_residual)
      c.bound(*v.diagnostics.action_residual, 1e-8, "diag-C action residual");
  }
  return c.finish("100 PSD-rank-one lambda^2 grids classify complete");
}

CheckResult check_rankone_lambda11_i(const Ctx&) {
  Check c("rankone.lambda11_i");
  CMatrix lambda(2);
  lambda(0, 0) = Complex(0.0, 1.0);
  lambda(0, 1) = lambda(1, 0) = lambda(1, 1) = 1.0;
  const DualityVerdict direct = classify_scaled_unit(lambda);
  const DualityVerdict full = classify_duality(scaled_unit_basis(lambda));
  c.require(direct.kind == VerdictKind::NotOrderIso,
            std::string("closed form: ") + to_string(direct.kind));
  c.require(full.kind == VerdictKind::NotOrderIso,
            std::string("superop route: ") + to_string(full.kind));
  return c.finish("lambda_11 = i grid is not an order isomorphism");
}

CheckResult check_rankone_agreement(const Ctx& ctx) {
  Check c("rankone.agreement");
  Rng rng(ctx.seed ^ 0x61677265ull);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 2;
    CMatrix lambda(n);
    if (trial % 2 == 0) {
      lambda = random_rank_one_lambda(rng, n);
    } else {
      for (Complex& z : lambda.flat()) {
        do {
          z = rng.cgauss();
        } while (std::abs(z) < 0.2);
      }
    }
    const DualityVerdict fast = classify_scaled_unit(lambda);
    const DualityVerdict full = classify_duality(scaled_unit_basis(lambda));
    c.require(fast.kind == full.kind,
              "trial " + std::to_string(trial) + ": " + to_string(fast.kind) + " vs " +
                  to_string(full.kind));
    if (fast.C && full.C) {
      // Compare conjugation actions; C itself is only phase-determined.
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const CMatrix E = CMatrix::unit(n, i, j);
          worst = std::max(worst, max_abs_diff((*fast.C) * E * fast.C->adjoint(),
                                               (*full.C) * E * full.C->adjoint()));
        }
      c.bound(worst, 1e-8, "Phi_C action mismatch");
    }
  }
  return c.finish("closed form agrees with the superoperator route");
}

CheckResult check_rankone_conjugated_units(const Ctx& ctx) {
  Check c("rankone.conjugated_units");
  Rng rng(ctx.seed ^ 0x636f6e6aull);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const CMatrix C = random_invertible(rng, n);
    const MatrixBasis b = conjugated_unit_basis(C);
    const DualityVerdict v = classify_duality(b);
    c.require(v.kind == VerdictKind::CompleteOrderIso,
              "conjugated units: " + std::string(to_string(v.kind)));
    // M_B acts as conjugation by C C^t.
    const CMatrix CCt = C * C.transpose();
    c.bound(action_vs_conjugation(m_map(b), CCt, false), 1e-8,
            "m_map vs Phi_(CC^t)");
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const MatrixBasis b = conjugated_unit_basis(rng.haar_unitary(n));
    const DualityVerdict v = classify_duality(b);
    c.require(v.kind == VerdictKind::CompleteOrderIso,
              "matrix-unit system: " + std::string(to_string(v.kind)));
  }
  return c.finish("conjugated matrix-unit systems classify complete");
}

CheckResult check_rankone_all_ones(const Ctx&) {
  Check c("rankone.all_ones");
  for (int n = 2; n <= 3; ++n) {
    CMatrix lambda(n);
    for (Complex& z : lambda.flat()) z = 1.0;
    const DualityVerdict v = classify_scaled_unit(lambda);
    c.require(v.kind == VerdictKind::CompleteOrderIso,
              std::string("verdict = ") + to_string(v.kind));
    if (v.C)
      c.bound(max_abs_diff(*v.C, CMatrix::identity(n)), 1e-9, "C vs identity");
  }
  return c.finish();
}

// ---------------------------------------------------------------------
// conjugate suite

CheckResult check_conjugate_onb_independence(const Ctx& ctx) {
  Check c("conjugate.onb_independence");
  Rng rng(ctx.seed ^ 0x6f6e6221ull);
  for (int n = 2; n <= 3; ++n) {
    std::vector<MapSpec> maps;
    for (int k = 0; k < 3; ++k)
      maps.push_back(random_kraus_map(rng, n, 2 + k % 2, 1 + k % 2));
    maps.push_back(random_noncp_map(rng, n, 2));
    maps.push_back(random_noncp_map(rng, n, 3));
    std::vector<MatrixBasis> onbs;
    for (int k = 0; k < 10; ++k) onbs.push_back(random_onb(rng, n));
    for (const MapSpec& m : maps) {
      const CMatrix choi = choi_matrix(m).mat;
      const double limit = 1e-9 * (1.0 + choi.frobenius_norm());
      for (const MatrixBasis& onb : onbs)
        c.bound(max_abs_diff(conjugate_choi(m, onb), choi), limit,
                "conjugate form deviates from the Choi matrix");
    }
  }
  return c.finish("20 random orthonormal bases x 10 maps reproduce C_Phi");
}

CheckResult check_conjugate_standard_and_pauli(const Ctx&) {
  Check c("conjugate.standard_and_pauli");
  const MapSpec m = MapSpec::builtin(Builtin::Transpose, 2);
  const CMatrix choi = choi_matrix(m).mat;
  c.bound(max_abs_diff(conjugate_choi(m, standard_basis(2)), choi), 0.0,
          "standard onb must reproduce the Choi matrix exactly");
  c.bound(max_abs_diff(conjugate_choi(m, pauli_basis(true)), choi), 1e-9,
          "normalized pauli onb");
  return c.finish();
}

CheckResult check_conjugate_jam_pt(const Ctx& ctx) {
  Check c("conjugate.jam_pt");
  Rng rng(ctx.seed ^ 0x6a616d21ull);
  // J(identity on M_2) is the swap.
  const MapSpec id2 = MapSpec::builtin(Builtin::Identity, 2);
  CMatrix swap(4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  c.bound(max_abs_diff(jamiolkowski(id2), swap), 0.0, "J(identity) vs swap");
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 2 + trial % 2, p = 2 + (trial / 2) % 2;
    const MapSpec m = (trial % 3 == 0) ? random_noncp_map(rng, n, p)
                                       : random_kraus_map(rng, n, p, 1 + trial % 2);
    const CMatrix conj_form = conjugate_choi(m, standard_basis(n));
    c.bound(max_abs_diff(jamiolkowski(m), partial_transpose(conj_form, Factor::First,
                                                            n, p)),
            0.0, "J(Phi) vs partial transpose of the conjugate form");
  }
  return c.finish("J(Phi) equals PT_first of sum conj(B) (x) Phi(B) exactly");
}

CheckResult check_conjugate_jam_onb_invariance(const Ctx& ctx) {
  Check c("conjugate.jam_onb_invariance");
  Rng rng(ctx.seed ^ 0x6a616d62ull);
  for (int n = 2; n <= 3; ++n) {
    const MapSpec m = random_kraus_map(rng, n, 2, 2);
    const CMatrix J = jamiolkowski(m);
    const double limit = 1e-9 * (1.0 + J.frobenius_norm());
    for (int k = 0; k < 5; ++k) {
      const MatrixBasis onb = random_onb(rng, n);
      CMatrix alt(n * m.p);
      for (const CMatrix& B : onb.elements)
        alt = alt + kron(B.adjoint(), apply_map(m, B));
      c.bound(max_abs_diff(alt, J), limit, "sum B^* (x) Phi(B) deviates from J");
    }
  }
  return c.finish("J is orthonormal-basis independent");
}

// ---------------------------------------------------------------------
// genlchoi suite

CheckResult check_genl_kraus_psd(const Ctx& ctx) {
  Check c("genlchoi.kraus_psd");
  Rng rng(ctx.seed ^ 0x6b726175ull);
  int count = 0;
  for (int n = 2; n <= 3; ++n) {
    const BasisSet bases = bases_for(rng, n);
    for (int k = 0; k < 25; ++k) {
      const MapSpec m = random_kraus_map(rng, n, 2 + k % 2, 1 + k % 3);
      ++count;
      c.require(is_psd(choi_matrix(m).mat), "Choi of a Kraus map must be PSD");
      for (const MatrixBasis& b : bases.coi)
        c.require(is_psd(generalized_choi(m, b, false)),
                  "case (1) form must be PSD for a CP map");
      for (const MatrixBasis& b : bases.cop)
        c.require(is_psd(generalized_choi(m, b, true)),
                  "case (2) form must be PSD for a CP map");
    }
  }
  return c.finish(std::to_string(count) + " Kraus maps stay PSD in every form");
}

CheckResult check_genl_equivalence(const Ctx& ctx) {
  Check c("genlchoi.equivalence");
  Rng rng(ctx.seed ^ 0x65717576ull);
  int disagreements = 0, pairs = 0;
  for (int n = 2; n <= 3; ++n) {
    const BasisSet bases = bases_for(rng, n);
    for (const MatrixBasis& b : bases.coi)
      c.require(classify_duality(b).kind == VerdictKind::CompleteOrderIso,
                "corpus basis failed to classify CompleteOrderIso");
    for (const MatrixBasis& b : bases.cop)
      c.require(classify_duality(b).kind == VerdictKind::CoPositiveOrderIso,
                "corpus basis failed to classify CoPositiveOrderIso");
    const std::vector<MapSpec> maps =
        map_corpus(rng, {{n, 2}, {n, 3}}, 25, 13 - n / 3);
    for (const MapSpec& m : maps) {
      const bool cp = is_cp(m);
      const bool ccp = is_ccp(m);
      for (const MatrixBasis& b : bases.coi) {
        ++pairs;
        if (cp != is_psd(generalized_choi(m, b, false))) ++disagreements;
      }
      for (const MatrixBasis& b : bases.cop) {
        pairs += 2;
        if (cp != is_psd(generalized_choi(m, b, true))) ++disagreements;
        if (ccp != is_psd(generalized_choi(m, b, false))) ++disagreements;
      }
    }
  }
  c.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  return c.finish(std::to_string(pairs) + " map/basis PSD tests, zero disagreements");
}

CheckResult check_genl_transpose_swap(const Ctx& ctx) {
  Check c("genlchoi.transpose_and_swap");
  Rng rng(ctx.seed ^ 0x73776170ull);
  for (int n = 2; n <= 3; ++n) {
    const MapSpec t = MapSpec::builtin(Builtin::Transpose, n);
    c.require(!is_cp(t), "transpose must not be CP");
    c.require(is_ccp(t), "transpose must be completely co-positive");
    const MapSpec d = MapSpec::builtin(Builtin::TraceDepolarize, n);
    c.require(is_cp(d) && is_ccp(d), "trace-depolarize must be CP and co-CP");
  }
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2, p = 2 + (trial / 2) % 2;
    const MapSpec m = random_kraus_map(rng, n, p, 2);
    const CMatrix genl = generalized_choi(m, standard_basis(n), false);
    c.bound(max_abs_diff(choi_matrix(m).mat, swap_kron_factors(genl, p, n)), 0.0,
            "Choi vs factor-swapped generalized form");
  }
  return c.finish("factor swap identity and builtin verdicts hold");
}

CheckResult check_genl_ccp_transposes(const Ctx& ctx) {
  Check c("genlchoi.ccp_transposes");
  Rng rng(ctx.seed ^ 0x63637031ull);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 2, p = 2 + (trial / 3) % 2;
    const MapSpec m = (trial % 2 == 0) ? random_kraus_map(rng, n, p, 1 + trial % 3)
                                       : random_noncp_map(rng, n, p);
    // m o t as an explicit superoperator matrix.
    RectMatrix mat(p * p, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const CMatrix img = apply_map(m, CMatrix::unit(n, j, i));
        for (int r = 0; r < p * p; ++r) mat.at(r, i * n + j) = img.flat()[r];
      }
    const MapSpec m_after_t = MapSpec::superop_mat(n, p, std::move(mat));
    const bool lhs = is_ccp(m);
    const bool rhs = is_psd(choi_matrix(m_after_t).mat);
    c.require(lhs == rhs, "is_ccp(m) != is_psd(choi(m o t)) at trial " +
                              std::to_string(trial));
  }
  return c.finish("t o Phi CP iff Phi o t CP on 50 random maps");
}

CheckResult check_genl_duality_identity(const Ctx& ctx) {
  Check c("genlchoi.duality_identity");
  for (const MatrixBasis& b : builtin_bases(ctx.max_n)) {
    const int n = b.n;
    const DualBasis dual = dual_basis(b);
    const SuperOp S = m_map(b);
    const SuperOp CT = transpose_rep(change_of_basis(b));
    for (int j = 0; j < b.size(); ++j) {
      const CMatrix Yj = dual.densities[j].transpose();
      c.bound(max_abs_diff(apply_inverse(S, b.elements[j]), Yj), 1e-9,
              "M_B^{-1} B_j vs D_j^t (" + std::string(to_string(b.provenance)) +
                  ", n = " + std::to_string(n) + ")");
      c.bound(max_abs_diff(apply(CT, Yj),
                           CMatrix::unit(n, j / n, j % n)),
              1e-9, "C_B^T D_j^t vs E_j (" + std::string(to_string(b.provenance)) +
                        ", n = " + std::to_string(n) + ")");
    }
  }
  return c.finish("duality identities hold for every built-in basis, n <= 4");
}

CheckResult check_genl_gamma_roundtrip(const Ctx& ctx) {
  Check c("genlchoi.gamma_roundtrip");
  for (const MatrixBasis& b : builtin_bases(std::min(ctx.max_n, 4))) {
    const DualBasis dual = dual_basis(b);
    for (int j = 0; j < b.size(); ++j)
      c.bound(max_abs_diff(gamma(b, dual.densities[j]), b.elements[j]), 1e-9,
              "gamma(D_j) vs B_j (" + std::string(to_string(b.provenance)) + ")");
  }
  return c.finish("gamma(basis, D_j) reproduces B_j for built-ins");
}

CheckResult check_genl_permutation_invariance(const Ctx& ctx) {
  Check c("genlchoi.permutation_invariance");
  Rng rng(ctx.seed ^ 0x7065726dull);
  for (const MatrixBasis& b : builtin_bases(std::min(ctx.max_n, 4))) {
    const SuperOp M = m_map(b);
    const VerdictKind kind = classify_duality(b).kind;
    for (int trial = 0; trial < 20; ++trial) {
      const MatrixBasis shuffled = permuted(b, rng);
      c.bound(max_abs_diff(m_map(shuffled).mat, M.mat), 1e-12,
              "m_map changed under permutation (" +
                  std::string(to_string(b.provenance)) + ")");
      c.require(classify_duality(shuffled).kind == kind,
                "verdict changed under permutation");
    }
  }
  return c.finish("20 permutations per basis leave M_B and the verdict fixed");
}

CheckResult check_genl_witness_swap(const Ctx& ctx) {
  Check c("genlchoi.witness_swap");
  const MatrixBasis b = standard_basis(2);
  const MapSpec t = MapSpec::builtin(Builtin::Transpose, 2);
  const CMatrix W = build_witness(b, t, WitnessCase::Case1);
  CMatrix swap(4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  c.bound(max_abs_diff(W, swap), 0.0, "witness vs swap");
  const WitnessReport report = validate_witness(W, 2, 2, 1000, ctx.seed);
  c.require(report.min_product_pairing >= -1e-12,
            "product pairing dipped below -1e-12");
  c.observe(std::max(0.0, -report.min_product_pairing));
  c.require(report.detected_state.has_value(), "no detected state for the swap");
  if (report.detected_pairing)
    c.bound(std::abs(*report.detected_pairing + 1.0), 1e-9, "singlet pairing vs -1");
  if (report.detected_state) {
    c.require(is_psd(*report.detected_state), "detected state must be PSD");
    c.bound(std::abs(report.detected_state->trace() - Complex(1.0, 0.0)), 1e-9,
            "detected state trace vs 1");
  }
  return c.finish("swap witness: nonnegative on products, detects the singlet");
}

CheckResult check_genl_witness_kraus(const Ctx& ctx) {
  Check c("genlchoi.witness_kraus_psd");
  Rng rng(ctx.seed ^ 0x77697431ull);
  for (int n = 2; n <= 3; ++n) {
    const MatrixBasis b = conjugated_unit_basis(random_invertible(rng, n));
    const MapSpec m = random_kraus_map(rng, n, n, 2);
    const CMatrix W = build_witness(b, m, WitnessCase::Case1);
    c.require(is_psd(W), "witness of a CP map over a COI basis must be PSD");
    const WitnessReport report = validate_witness(W, n, n, 200, ctx.seed);
    c.require(!report.detected_state.has_value(), "PSD witness detected a state");
  }
  // Co-positive route: pauli basis with the (completely co-positive)
  // transpose map gives a PSD matrix as well.
  const CMatrix W = build_witness(pauli_basis(), MapSpec::builtin(Builtin::Transpose, 2),
                                  WitnessCase::Case3);
  c.require(is_psd(W), "sum t(sigma) (x) sigma must be PSD");
  return c.finish();
}

CheckResult check_genl_witness_determinism(const Ctx& ctx) {
  Check c("genlchoi.witness_determinism");
  const MatrixBasis b = standard_basis(2);
  const MapSpec t = MapSpec::builtin(Builtin::Transpose, 2);
  const WitnessReport r1 = witness_report(b, t, WitnessCase::Case1, 64, ctx.seed);
  const WitnessReport r2 = witness_report(b, t, WitnessCase::Case1, 64, ctx.seed);
  const std::string s1 = dump_canonical(witness_report_to_json(r1));
  const std::string s2 = dump_canonical(witness_report_to_json(r2));
  c.require(s1 == s2, "identical seeds produced different reports");
  return c.finish("reports are byte-identical for identical seeds");
}

CheckResult check_genl_cob_invertible(const Ctx& ctx) {
  Check c("genlchoi.cob_invertible");
  for (const MatrixBasis& b : builtin_bases(ctx.max_n)) {
    const SuperOp C = change_of_basis(b);
    const int m = b.size();
    Eigen::MatrixXcd A(m, m);
    for (int r = 0; r < m; ++r)
      for (int cc = 0; cc < m; ++cc) A(r, cc) = C.mat(r, cc);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
    const double smallest = svd.singularValues()(m - 1);
    const double largest = svd.singularValues()(0);
    c.require(smallest > static_cast<double>(m) * 1e-12 * largest,
              "change of basis nearly singular (" +
                  std::string(to_string(b.provenance)) + ")");
    c.observe(largest > 0 ? smallest / largest : 0.0);
  }
  return c.finish("change_of_basis well conditioned for every built-in");
}

// ---------------------------------------------------------------------

using CheckFn = std::function<CheckResult(const Ctx&)>;

const std::vector<std::pair<std::string, std::vector<CheckFn>>>& suite_table() {
  static const std::vector<std::pair<std::string, std::vector<CheckFn>>> table = {
      {"pauli",
       {check_pauli_m_map, check_pauli_classify, check_pauli_gram,
        check_pauli_block_criterion, check_pauli_tensor_m_map,
        check_pauli_tensor_criterion}},
      {"weyl",
       {check_weyl_expansion, check_weyl_gram, check_weyl_m_map_entries, check_weyl_action,
        check_weyl_classify}},
      {"rankone",
       {check_rankone_grids, check_rankone_lambda11_i, check_rankone_agreement,
        check_rankone_conjugated_units, check_rankone_all_ones}},
      {"conjugate",
       {check_conjugate_onb_independence, check_conjugate_standard_and_pauli,
        check_conjugate_jam_pt, check_conjugate_jam_onb_invariance}},
      {"genlchoi",
       {check_genl_kraus_psd, check_genl_equivalence, check_genl_transpose_swap,
        check_genl_ccp_transposes, check_genl_duality_identity,
        check_genl_gamma_roundtrip, check_genl_permutation_invariance,
        check_genl_witness_swap, check_genl_witness_kraus,
        check_genl_witness_determinism, check_genl_cob_invertible}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, checks] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& suite) {
  if (suite == "all") return true;
  for (const std::string& name : suite_names())
    if (name == suite) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& suite, int max_n, uint64_t seed) {
  if (!is_suite_name(suite))
    throw InvalidArgument("unknown verify suite \"" + suite + "\"");
  Ctx ctx;
  ctx.max_n = std::max(2, max_n);
  ctx.seed = seed;
  std::vector<CheckResult> results;
  for (const auto& [name, checks] : suite_table()) {
    if (suite != "all" && suite != name) continue;
    for (const CheckFn& fn : checks) results.push_back(fn(ctx));
  }
  return results;
}

}  // namespace dualcert
