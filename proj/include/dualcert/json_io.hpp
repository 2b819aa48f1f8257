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

#ifndef DUALCERT_JSON_IO_HPP
#define DUALCERT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "dualcert/bases.hpp"
#include "dualcert/choi.hpp"
#include "dualcert/classify.hpp"
#include "dualcert/cmatrix.hpp"
#include "dualcert/witness.hpp"

namespace dualcert {

// All emitted JSON uses insertion-ordered objects so key order is fixed
// and identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

// Square matrix: {"n": int, "entries": [[[re, im], ...] per row]}.
Json matrix_to_json(const CMatrix& M);
CMatrix matrix_from_json(const Json& j);

// Rectangular matrix: {"rows": int, "cols": int, "entries": ...};
// also accepts the square {"n", "entries"} form.
Json rect_to_json(const RectMatrix& M);
RectMatrix rect_from_json(const Json& j);

// Basis spec files:
//   {"kind":"standard","n":3}
//   {"kind":"pauli","normalized":false}
//   {"kind":"pauli_tensor","k":2,"normalized":false}
//   {"kind":"weyl","n":3}
//   {"kind":"scaled_unit","lambda":<matrix>}
//   {"kind":"custom","n":2,"matrices":[<matrix>,...]}
MatrixBasis basis_from_json(const Json& j);

// Builtin tokens NAME or NAME:PARAM, e.g. "pauli", "standard:4",
// "weyl:3", "pauli_tensor:2".
MatrixBasis basis_from_token(const std::string& token);

// Map spec files:
//   {"kind":"kraus","n":2,"p":2,"ops":[<matrix>,...]}
//   {"kind":"superop","n":2,"p":3,"mat":<rect matrix>}
//   {"kind":"builtin","name":"transpose","n":2}
MapSpec map_from_json(const Json& j);

Json verdict_to_json(const DualityVerdict& verdict);
Json witness_report_to_json(const WitnessReport& report);

// Hermitian/eigenvalue/PSD summary of a computed matrix, used by the
// choi subcommand. Non-Hermitian matrices get null eigenvalues/psd.
Json matrix_analysis_to_json(const std::string& form, const CMatrix& M);

// Fixed-format dump: two-space indent, newline-terminated.
std::string dump_canonical(const Json& j);

Json parse_json(const std::string& text);  // throws ParseError

}  // namespace dualcert

#endif
