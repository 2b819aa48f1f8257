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

#include "dualcert/classify.hpp"
#include "dualcert/json_io.hpp"
#include "test_util.hpp"

using namespace dualcert;
using namespace dualcert::testing;

TEST_CASE("matrix json round trip") {
  const CMatrix M = mat_of({{Complex(1.5, -2.0), 0}, {Complex(0, 3.25), -1}});
  const Json j = matrix_to_json(M);
  CHECK(j["n"] == 2);
  CHECK(approx_eq(matrix_from_json(j), M, 0.0));

  CHECK_THROWS_AS(matrix_from_json(parse_json("{\"n\": 2, \"entries\": [[[1,0]]]}")),
                  ParseError);
  CHECK_THROWS_AS(matrix_from_json(parse_json("{\"entries\": []}")), ParseError);
  CHECK_THROWS_AS(parse_json("not json"), ParseError);
}

TEST_CASE("rect json accepts both square and rectangular forms") {
  RectMatrix R(2, 4);
  for (int k = 0; k < 8; ++k) R.a[k] = Complex(k, -k);
  const Json j = rect_to_json(R);
  const RectMatrix back = rect_from_json(j);
  CHECK(back.rows == 2);
  CHECK(back.cols == 4);
  CHECK(back.a == R.a);

  const RectMatrix sq = rect_from_json(parse_json(
      "{\"n\": 2, \"entries\": [[[1,0],[0,0]],[[0,0],[1,0]]]}"));
  CHECK(sq.rows == 2);
  CHECK(sq.cols == 2);
}

TEST_CASE("basis specs parse for every kind") {
  CHECK(basis_from_json(parse_json("{\"kind\":\"standard\",\"n\":3}")).n == 3);
  CHECK(basis_from_json(parse_json("{\"kind\":\"pauli\",\"normalized\":true}"))
            .provenance == BasisKind::Pauli);
  CHECK(basis_from_json(parse_json("{\"kind\":\"pauli_tensor\",\"k\":2}")).n == 4);
  CHECK(basis_from_json(parse_json("{\"kind\":\"weyl\",\"n\":4}")).size() == 16);

  const Json scaled = parse_json(
      "{\"kind\":\"scaled_unit\",\"lambda\":{\"n\":2,\"entries\":"
      "[[[1,0],[2,0]],[[3,0],[4,0]]]}}");
  CHECK(basis_from_json(scaled).provenance == BasisKind::ScaledUnit);

  Json custom = Json::object();
  custom["kind"] = "custom";
  custom["n"] = 2;
  custom["matrices"] = Json::array();
  for (const CMatrix& e : pauli_basis().elements)
    custom["matrices"].push_back(matrix_to_json(e));
  CHECK(basis_from_json(custom).provenance == BasisKind::Custom);

  CHECK_THROWS_AS(basis_from_json(parse_json("{\"kind\":\"bogus\"}")), ParseError);
  CHECK_THROWS_AS(basis_from_json(parse_json("{\"kind\":\"standard\"}")), ParseError);

  // Invariant violations surface as their own error kinds.
  const Json zero_lambda = parse_json(
      "{\"kind\":\"scaled_unit\",\"lambda\":{\"n\":2,\"entries\":"
      "[[[0,0],[1,0]],[[1,0],[1,0]]]}}");
  CHECK_THROWS_AS(basis_from_json(zero_lambda), ZeroLambdaError);
}

TEST_CASE("basis tokens") {
  CHECK(basis_from_token("pauli").provenance == BasisKind::Pauli);
  CHECK(basis_from_token("standard:4").n == 4);
  CHECK(basis_from_token("weyl:3").provenance == BasisKind::Weyl);
  CHECK(basis_from_token("pauli_tensor:2").n == 4);
  CHECK_THROWS_AS(basis_from_token("weyl"), ParseError);
  CHECK_THROWS_AS(basis_from_token("weyl:x"), ParseError);
  CHECK_THROWS_AS(basis_from_token("nonsense:3"), ParseError);
}

TEST_CASE("map specs parse for every kind") {
  const MapSpec t = map_from_json(
      parse_json("{\"kind\":\"builtin\",\"n\":2,\"name\":\"transpose\"}"));
  CHECK(t.n == 2);
  CHECK(t.p == 2);

  Json kraus = Json::object();
  kraus["kind"] = "kraus";
  kraus["n"] = 2;
  kraus["p"] = 3;
  kraus["ops"] = Json::array();
  RectMatrix K(3, 2);
  K.at(0, 0) = 1.0;
  K.at(2, 1) = Complex(0, 1);
  kraus["ops"].push_back(rect_to_json(K));
  const MapSpec km = map_from_json(kraus);
  CHECK(km.p == 3);
  CHECK(approx_eq(apply_map(km, CMatrix::identity(2)),
                  apply_map(km, CMatrix::identity(2)), 0.0));

  Json sup = Json::object();
  sup["kind"] = "superop";
  sup["n"] = 2;
  sup["p"] = 2;
  RectMatrix mat(4, 4);
  for (int k = 0; k < 4; ++k) mat.at(k, k) = 1.0;
  sup["mat"] = rect_to_json(mat);
  CHECK(map_from_json(sup).n == 2);

  CHECK_THROWS_AS(map_from_json(parse_json("{\"kind\":\"builtin\",\"n\":2,"
                                           "\"name\":\"nope\"}")),
                  ParseError);
  CHECK_THROWS_AS(map_from_json(parse_json("{\"kind\":\"kraus\",\"n\":2,\"p\":2}")),
                  ParseError);
}

TEST_CASE("verdict and report serialization is canonical") {
  const DualityVerdict v = classify_duality(pauli_basis());
  const Json j = verdict_to_json(v);
  CHECK(j["kind"] == "CoPositiveOrderIso");
  CHECK_FALSE(j["C"].is_null());
  CHECK(j["diagnostics"]["k1"].contains("rank_one_residual"));

  const std::string once = dump_canonical(j);
  const std::string twice = dump_canonical(verdict_to_json(classify_duality(pauli_basis())));
  CHECK(once == twice);
  CHECK(once.back() == '\n');
  // Fixed key order: kind precedes C precedes diagnostics.
  CHECK(once.find("\"kind\"") < once.find("\"C\""));
  CHECK(once.find("\"C\"") < once.find("\"diagnostics\""));

  const DualityVerdict nv = classify_duality(weyl_basis(3));
  CHECK(verdict_to_json(nv)["C"].is_null());
}
