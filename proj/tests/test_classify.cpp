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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dualcert/choi.hpp"
#include "dualcert/classify.hpp"
#include "dualcert/rng.hpp"
#include "dualcert/superop.hpp"
#include "test_util.hpp"

using namespace dualcert;
using namespace dualcert::testing;

namespace {

double conjugation_action_diff(const CMatrix& C1, const CMatrix& C2) {
  double worst = 0.0;
  const int n = C1.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CMatrix E = CMatrix::unit(n, i, j);
      worst = std::max(worst,
                       max_abs_diff(C1 * E * C1.adjoint(), C2 * E * C2.adjoint()));
    }
  return worst;
}

double m_map_vs_conjugation(const MatrixBasis& b, const CMatrix& C, bool transposed) {
  const SuperOp S = m_map(b);
  double worst = 0.0;
  for (int i = 0; i < b.n; ++i)
    for (int j = 0; j < b.n; ++j) {
      const CMatrix E = CMatrix::unit(b.n, i, j);
      CMatrix expect = C * E * C.adjoint();
      if (transposed) expect = expect.transpose();
      worst = std::max(worst, (apply(S, E) - expect).frobenius_norm());
    }
  return worst;
}

}  // namespace

TEST_CASE("rank_one_psd_factor recovers a conjugation and rejects the rest") {
  const CMatrix C = CMatrix::diag({1.0, 2.0});
  const CMatrix M = choi_matrix(MapSpec::conjugation(C)).mat;
  const auto got = rank_one_psd_factor(M);
  REQUIRE(got.has_value());
  // Phase gauge: largest entry real positive, so the result is exact.
  CHECK(approx_eq(*got, C, 1e-12));

  CHECK_FALSE(rank_one_psd_factor(swap_matrix()).has_value());
  CHECK_FALSE(rank_one_psd_factor(CMatrix::identity(4)).has_value());
  CHECK_THROWS_AS(rank_one_psd_factor(CMatrix::identity(3)), InvalidArgument);
}

TEST_CASE("rank_one_psd_factor round-trips random conjugations") {
  Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 3;
    const CMatrix C = rng.ginibre(n);
    const auto got = rank_one_psd_factor(choi_matrix(MapSpec::conjugation(C)).mat);
    REQUIRE(got.has_value());
    CHECK(conjugation_action_diff(*got, C) <= 1e-9 * (1.0 + C.frobenius_norm()));
  }
}

TEST_CASE("standard bases classify as complete order isomorphisms") {
  for (int n = 2; n <= 4; ++n) {
    const DualityVerdict v = classify_duality(standard_basis(n));
    CHECK(v.kind == VerdictKind::CompleteOrderIso);
    REQUIRE(v.C.has_value());
    // M_E is the identity, so Phi_C must act as the identity.
    CHECK(m_map_vs_conjugation(standard_basis(n), *v.C, false) <= 1e-9);
  }
}

TEST_CASE("pauli basis classifies co-positive with C ~ sqrt(2) I") {
  const DualityVerdict v = classify_duality(pauli_basis());
  CHECK(v.kind == VerdictKind::CoPositiveOrderIso);
  REQUIRE(v.C.has_value());
  CHECK(m_map_vs_conjugation(pauli_basis(), *v.C, true) <= 1e-8);
  CHECK(std::abs((*v.C)(0, 0) - Complex(M_SQRT2, 0)) <= 1e-9);
  CHECK(std::abs((*v.C)(1, 0)) <= 1e-9);
  // Diagnostics carry both candidate spectra.
  CHECK(v.diagnostics.k1.smallest_eigenvalues.size() == 4);
  CHECK(v.diagnostics.k2.smallest_eigenvalues.size() == 4);
  CHECK(v.diagnostics.k1.min_eigenvalue < -0.5);  // 2*swap has eigenvalue -2
}

TEST_CASE("weyl dichotomy") {
  const DualityVerdict v2 = classify_duality(weyl_basis(2));
  CHECK(v2.kind == VerdictKind::CompleteOrderIso);
  REQUIRE(v2.C.has_value());
  CHECK(m_map_vs_conjugation(weyl_basis(2), *v2.C, false) <= 1e-9);

  for (int n = 3; n <= 5; ++n) {
    const DualityVerdict v = classify_duality(weyl_basis(n));
    CHECK(v.kind == VerdictKind::NotOrderIso);
    CHECK_FALSE(v.C.has_value());
    CHECK(v.diagnostics.k1.residual > 0.1);
    CHECK(v.diagnostics.k2.residual > 0.1);
  }
}

TEST_CASE("tensor pauli on M_4 is co-positive") {
  const MatrixBasis b = tensor_power(pauli_basis(), 2);
  CHECK(classify_duality(b).kind == VerdictKind::CoPositiveOrderIso);
}

TEST_CASE("scaled-unit closed form") {
  // lambda_ij^2 = alpha_i conj(alpha_j) with alpha = (1, 2, 3).
  CMatrix lambda(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      lambda(i, j) = std::sqrt(Complex((i + 1.0) * (j + 1.0), 0.0));
  const DualityVerdict v = classify_scaled_unit(lambda);
  CHECK(v.kind == VerdictKind::CompleteOrderIso);
  REQUIRE(v.C.has_value());
  CHECK(conjugation_action_diff(*v.C, CMatrix::diag({1.0, 2.0, 3.0})) <= 1e-9);

  // lambda_11 = i breaks positivity of (lambda^2).
  CMatrix bad(2);
  bad(0, 0) = Complex(0, 1);
  bad(0, 1) = bad(1, 0) = bad(1, 1) = 1.0;
  CHECK(classify_scaled_unit(bad).kind == VerdictKind::NotOrderIso);
  CHECK(classify_duality(scaled_unit_basis(bad)).kind == VerdictKind::NotOrderIso);

  CMatrix ones(2);
  for (Complex& z : ones.flat()) z = 1.0;
  const DualityVerdict vi = classify_scaled_unit(ones);
  CHECK(vi.kind == VerdictKind::CompleteOrderIso);
  REQUIRE(vi.C.has_value());
  CHECK(approx_eq(*vi.C, CMatrix::identity(2), 1e-10));

  CMatrix zero(2);
  zero(0, 1) = 1.0;
  CHECK_THROWS_AS(classify_scaled_unit(zero), ZeroLambdaError);
}

TEST_CASE("closed form agrees with the superoperator route") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 2;
    CMatrix lambda(n);
    if (trial % 2 == 0) {
      std::vector<Complex> alpha(n);
      for (Complex& a : alpha) {
        do {
          a = rng.cgauss();
        } while (std::abs(a) < 0.2);
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          lambda(i, j) = std::sqrt(alpha[i] * std::conj(alpha[j]));
    } else {
      for (Complex& z : lambda.flat()) {
        do {
          z = rng.cgauss();
        } while (std::abs(z) < 0.2);
      }
    }
    const DualityVerdict fast = classify_scaled_unit(lambda);
    const DualityVerdict full = classify_duality(scaled_unit_basis(lambda));
    CHECK(fast.kind == full.kind);
    if (fast.C && full.C)
      CHECK(conjugation_action_diff(*fast.C, *full.C) <= 1e-8);
  }
}

TEST_CASE("conjugated matrix units classify complete with M_B = Phi_(CC^t)") {
  Rng rng(73);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const CMatrix C = rng.ginibre(n);
    std::vector<CMatrix> elements;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        elements.push_back(C * CMatrix::unit(n, i, j) * C.adjoint());
    const MatrixBasis b = custom_basis(n, std::move(elements));
    const DualityVerdict v = classify_duality(b);
    CHECK(v.kind == VerdictKind::CompleteOrderIso);
    CHECK(m_map_vs_conjugation(b, C * C.transpose(), false) <= 1e-8);
  }

  // Matrix-unit systems from a haar unitary.
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 2 + trial % 2;
    const CMatrix V = rng.haar_unitary(n);
    std::vector<CMatrix> elements;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        elements.push_back(V * CMatrix::unit(n, i, j) * V.adjoint());
    CHECK(classify_duality(custom_basis(n, std::move(elements))).kind ==
          VerdictKind::CompleteOrderIso);
  }
}

TEST_CASE("n = 1 ties resolve to CompleteOrderIso") {
  std::vector<CMatrix> one = {2.0 * CMatrix::identity(1)};
  const DualityVerdict v = classify_duality(custom_basis(1, one));
  CHECK(v.kind == VerdictKind::CompleteOrderIso);

  // A complex scalar basis element with non-real square is not an
  // order isomorphism even at n = 1.
  std::vector<CMatrix> rot = {Complex(M_SQRT1_2, M_SQRT1_2) * CMatrix::identity(1)};
  CHECK(classify_duality(custom_basis(1, rot)).kind == VerdictKind::NotOrderIso);
}

TEST_CASE("classification is total on random bases") {
  // Generic bases are almost surely not order isomorphisms; the point
  // is that the classifier returns a verdict (never trips the
  // exclusivity assertion) and fills diagnostics for both candidates.
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<CMatrix> elements;
    for (int k = 0; k < n * n; ++k) elements.push_back(rng.ginibre(n));
    const DualityVerdict v = classify_duality(custom_basis(n, std::move(elements)));
    CHECK(v.diagnostics.k1.smallest_eigenvalues.size() ==
          static_cast<size_t>(std::min(4, n * n)));
    CHECK(v.diagnostics.k2.smallest_eigenvalues.size() ==
          static_cast<size_t>(std::min(4, n * n)));
    if (v.kind == VerdictKind::NotOrderIso) CHECK_FALSE(v.C.has_value());
    if (v.C) CHECK(v.diagnostics.action_residual.has_value());
  }
}

TEST_CASE("verdict C is always invertible") {
  Rng rng(79);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    CMatrix lambda(n);
    std::vector<Complex> alpha(n);
    for (Complex& a : alpha) {
      do {
        a = rng.cgauss();
      } while (std::abs(a) < 0.2);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        lambda(i, j) = std::sqrt(alpha[i] * std::conj(alpha[j]));
    const DualityVerdict v = classify_duality(scaled_unit_basis(lambda));
    REQUIRE(v.C.has_value());
    // diag entries all nonzero
    for (int i = 0; i < n; ++i) CHECK(std::abs((*v.C)(i, i)) > 1e-6);
  }
}
