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

#include "dualcert/json_io.hpp"
#include "dualcert/rng.hpp"
#include "dualcert/witness.hpp"
#include "test_util.hpp"

using namespace dualcert;
using namespace dualcert::testing;

TEST_CASE("build_witness forms and basis-kind gating") {
  const MatrixBasis std2 = standard_basis(2);
  const MapSpec id = MapSpec::builtin(Builtin::Identity, 2);
  const MapSpec t = MapSpec::builtin(Builtin::Transpose, 2);

  CMatrix omega(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      omega = omega + kron(CMatrix::unit(2, i, j), CMatrix::unit(2, i, j));
  CHECK(approx_eq(build_witness(std2, id, WitnessCase::Case1), omega, 0.0));
  CHECK(is_psd(omega));

  CHECK(approx_eq(build_witness(std2, t, WitnessCase::Case1), swap_matrix(), 0.0));

  // Pauli basis is co-positive; the transpose is completely co-positive,
  // so the case-3 witness matrix is PSD.
  const CMatrix W = build_witness(pauli_basis(), t, WitnessCase::Case3);
  CHECK(is_psd(W));

  CHECK_THROWS_AS(build_witness(pauli_basis(), t, WitnessCase::Case1),
                  WrongBasisKindError);
  CHECK_THROWS_AS(build_witness(std2, t, WitnessCase::Case3), WrongBasisKindError);
  CHECK_THROWS_AS(build_witness(weyl_basis(3), MapSpec::builtin(Builtin::Transpose, 3),
                                WitnessCase::Case1),
                  WrongBasisKindError);
  CHECK_THROWS_AS(build_witness(std2, MapSpec::builtin(Builtin::Identity, 3),
                                WitnessCase::Case1),
                  DimensionMismatch);
}

TEST_CASE("validate_witness on the swap detects the singlet") {
  const WitnessReport report = validate_witness(swap_matrix(), 2, 2, 500, 42);
  CHECK(report.num_samples == 500);
  CHECK(report.seed == 42);
  // <x (x) y, swap (x (x) y)> = |<x, y>|^2 >= 0 for every product state.
  CHECK(report.min_product_pairing >= -1e-12);
  CHECK(report.min_product_pairing <= 1.0 + 1e-12);
  REQUIRE(report.detected_state.has_value());
  REQUIRE(report.detected_pairing.has_value());
  CHECK(std::abs(*report.detected_pairing + 1.0) <= 1e-9);
  // The -1 eigenspace of swap is spanned by the singlet; the projector
  // is unique.
  const CMatrix singlet = mat_of({{0, 0, 0, 0},
                                  {0, 0.5, -0.5, 0},
                                  {0, -0.5, 0.5, 0},
                                  {0, 0, 0, 0}});
  CHECK(approx_eq(*report.detected_state, singlet, 1e-9));
  CHECK(is_psd(*report.detected_state));
  CHECK(std::abs(report.detected_state->trace() - Complex(1, 0)) <= 1e-9);
}

TEST_CASE("validate_witness leaves PSD witnesses undetected") {
  CMatrix omega(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      omega = omega + kron(CMatrix::unit(2, i, j), CMatrix::unit(2, i, j));
  const WitnessReport report = validate_witness(omega, 2, 2, 200, 7);
  CHECK(report.min_product_pairing >= -1e-12);
  CHECK_FALSE(report.detected_state.has_value());
}

TEST_CASE("validate_witness sanity path on -I") {
  const CMatrix negI = -1.0 * CMatrix::identity(4);
  const WitnessReport report = validate_witness(negI, 2, 2, 50, 3);
  REQUIRE(report.detected_pairing.has_value());
  CHECK(std::abs(*report.detected_pairing + 1.0) <= 1e-12);
  CHECK(report.min_product_pairing <= -1.0 + 1e-12);
}

TEST_CASE("validate_witness rejects non-hermitian input") {
  CMatrix bad(4);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(validate_witness(bad, 2, 2, 10, 1), NotHermitianError);
}

TEST_CASE("screen_positive_map") {
  CHECK(screen_positive_map(MapSpec::builtin(Builtin::Transpose, 2), 50, 1));
  CHECK(screen_positive_map(MapSpec::builtin(Builtin::Identity, 3), 50, 1));

  Rng rng(83);
  RectMatrix K(2, 2);
  for (Complex& z : K.a) z = rng.cgauss();
  CHECK(screen_positive_map(MapSpec::kraus(2, 2, {K}), 50, 1));

  // X -> -X fails on the first projector.
  RectMatrix neg(4, 4);
  for (int k = 0; k < 4; ++k) neg.at(k, k) = -1.0;
  CHECK_FALSE(screen_positive_map(MapSpec::superop_mat(2, 2, neg), 50, 1));
}

TEST_CASE("witness_report is deterministic and fully populated") {
  const MatrixBasis std2 = standard_basis(2);
  const MapSpec t = MapSpec::builtin(Builtin::Transpose, 2);
  const WitnessReport r1 = witness_report(std2, t, WitnessCase::Case1, 128, 99);
  const WitnessReport r2 = witness_report(std2, t, WitnessCase::Case1, 128, 99);
  CHECK(dump_canonical(witness_report_to_json(r1)) ==
        dump_canonical(witness_report_to_json(r2)));
  CHECK(r1.basis_kind_used == "CompleteOrderIso");
  CHECK(r1.map_positive_screen);
  CHECK(r1.min_product_pairing >=
        -1e-9 * (1.0 + r1.witness.frobenius_norm()));

  const WitnessReport r3 = witness_report(std2, t, WitnessCase::Case1, 128, 100);
  CHECK(dump_canonical(witness_report_to_json(r1)) !=
        dump_canonical(witness_report_to_json(r3)));
}
