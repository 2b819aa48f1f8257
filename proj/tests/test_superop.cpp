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

#include "dualcert/rng.hpp"
#include "dualcert/superop.hpp"
#include "test_util.hpp"

using namespace dualcert;
using namespace dualcert::testing;

TEST_CASE("superop_from_action tabulates the identity and transpose") {
  CHECK(approx_eq(superop_from_action(3, [](const CMatrix& X) { return X; }).mat,
                  CMatrix::identity(9), 0.0));

  // t(E_01) = E_10: flat indices 1 and 2 swap.
  const SuperOp t = superop_from_action(2, [](const CMatrix& X) {
    return X.transpose();
  });
  CHECK(approx_eq(t.mat, mat_of({{1, 0, 0, 0},
                                 {0, 0, 1, 0},
                                 {0, 1, 0, 0},
                                 {0, 0, 0, 1}}),
                  0.0));
  CHECK(approx_eq(t.mat, transpose_superop(2).mat, 0.0));
}

TEST_CASE("columns of a conjugation superop flatten C E_k C^*") {
  Rng rng(3);
  const CMatrix C = rng.ginibre(3);
  const CMatrix Cadj = C.adjoint();
  const SuperOp S =
      superop_from_action(3, [&](const CMatrix& X) { return C * X * Cadj; });
  for (int k = 0; k < 9; ++k) {
    const CMatrix img = C * CMatrix::unit(3, k / 3, k % 3) * Cadj;
    for (int r = 0; r < 9; ++r) CHECK(S.mat(r, k) == img.flat()[r]);
    // apply on E_k reproduces column k (coordinate convention).
    CHECK(approx_eq(apply(S, CMatrix::unit(3, k / 3, k % 3)), img, 1e-13));
  }
}

TEST_CASE("apply matches direct action and checks dims") {
  const SuperOp t = transpose_superop(2);
  CHECK(approx_eq(apply(t, CMatrix::unit(2, 0, 1)), CMatrix::unit(2, 1, 0), 0.0));
  CHECK_THROWS_AS(apply(t, CMatrix::identity(3)), DimensionMismatch);

  // Weyl M_W at n = 3 sends E_11 to E_22 (indices mod 3).
  const SuperOp mw = m_map(weyl_basis(3));
  CHECK(approx_eq(apply(mw, CMatrix::unit(3, 1, 1)), CMatrix::unit(3, 2, 2), 1e-12));
}

TEST_CASE("compose and transpose_rep") {
  Rng rng(5);
  SuperOp S{2, rng.ginibre(4)};
  CHECK(approx_eq(transpose_rep(identity_superop(2)).mat, CMatrix::identity(4), 0.0));
  CHECK(approx_eq(transpose_rep(transpose_rep(S)).mat, S.mat, 0.0));

  // Composition agrees with sequential application.
  SuperOp T{2, rng.ginibre(4)};
  const CMatrix X = rng.ginibre(2);
  CHECK(approx_eq(apply(compose(S, T), X), apply(S, apply(T, X)), 1e-12));
  SuperOp wrong{3, CMatrix::identity(9)};
  CHECK_THROWS_AS(compose(S, wrong), DimensionMismatch);
}

TEST_CASE("change_of_basis columns are the basis elements") {
  CHECK(approx_eq(change_of_basis(standard_basis(3)).mat, CMatrix::identity(9), 0.0));

  // Scaled matrix units give a diagonal change of basis.
  const CMatrix lambda = mat_of({{2, Complex(0, 1)}, {-1, 3}});
  const SuperOp cb = change_of_basis(scaled_unit_basis(lambda));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(cb.mat(r, c) == (r == c ? lambda.flat()[r] : Complex(0.0, 0.0)));

  // Weyl: [C_W]_{ab,cd} = (1/sqrt(n)) z^{db} delta_{b+c,a}.
  const int n = 4;
  const SuperOp cw = change_of_basis(weyl_basis(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          Complex expect = 0.0;
          if ((b + c) % n == a) {
            const double angle = 2.0 * M_PI * d * b / n;
            expect = scale * Complex(std::cos(angle), std::sin(angle));
          }
          CHECK(std::abs(cw.mat(a * n + b, c * n + d) - expect) <= 1e-12);
        }
}

TEST_CASE("change_of_basis rejects dependent sets") {
  std::vector<CMatrix> mats = {CMatrix::unit(2, 0, 0), CMatrix::unit(2, 0, 1),
                               CMatrix::unit(2, 1, 0),
                               CMatrix::unit(2, 0, 0) + CMatrix::unit(2, 0, 1)};
  MatrixBasis bad;
  bad.n = 2;
  bad.elements = mats;
  bad.labels = {"a", "b", "c", "d"};
  CHECK_THROWS_AS(change_of_basis(bad), NotABasisError);
}

TEST_CASE("m_map of standard, pauli and weyl bases") {
  CHECK(approx_eq(m_map(standard_basis(2)).mat, CMatrix::identity(4), 0.0));

  const SuperOp mp = m_map(pauli_basis());
  CHECK(approx_eq(mp.mat, mat_of({{2, 0, 0, 0},
                                  {0, 0, 2, 0},
                                  {0, 2, 0, 0},
                                  {0, 0, 0, 2}}),
                  1e-12));
  // ... which is twice the transpose map.
  CHECK(approx_eq(mp.mat, 2.0 * transpose_superop(2).mat, 1e-12));

  for (int n = 2; n <= 5; ++n) {
    const SuperOp mw = m_map(weyl_basis(n));
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        const CMatrix expect =
            CMatrix::unit(n, ((c - 2 * d) % n + n) % n, ((-d) % n + n) % n);
        CHECK(approx_eq(apply(mw, CMatrix::unit(n, c, d)), expect, 1e-10));
      }
  }
}

TEST_CASE("m_map is invariant under reordering the basis") {
  MatrixBasis b = pauli_basis();
  MatrixBasis reordered = b;
  std::swap(reordered.elements[0], reordered.elements[3]);
  std::swap(reordered.elements[1], reordered.elements[2]);
  CHECK(max_abs_diff(m_map(b).mat, m_map(reordered).mat) <= 1e-12);
}

TEST_CASE("apply_inverse solves rather than inverting") {
  Rng rng(9);
  const MatrixBasis b = weyl_basis(3);
  const SuperOp S = m_map(b);
  const CMatrix X = rng.ginibre(3);
  CHECK(approx_eq(apply(S, apply_inverse(S, X)), X, 1e-10));
  CHECK(approx_eq(apply_inverse(S, apply(S, X)), X, 1e-10));

  SuperOp singular{2, CMatrix::zero(4)};
  CHECK_THROWS_AS(apply_inverse(singular, CMatrix::identity(2)), InvalidArgument);
}
