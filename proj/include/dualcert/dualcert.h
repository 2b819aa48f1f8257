/* Copyright 2026 The dualcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C API of the dualcert shared library.
 *
 * Bases of M_n and linear maps M_n -> M_p are held behind opaque
 * handles. Computation results are returned as newline-terminated JSON
 * strings in a fixed key order, so identical inputs (and seeds) yield
 * byte-identical output; free them with dc_string_free. Every function
 * returns DC_OK on success; on failure the out-parameters are left
 * untouched and dc_last_error() describes the violated precondition
 * for the calling thread.
 */

#ifndef DUALCERT_DUALCERT_H
#define DUALCERT_DUALCERT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dc_basis dc_basis;
typedef struct dc_map dc_map;

typedef enum dc_status {
  DC_OK = 0,
  DC_ERR_INVALID_ARGUMENT = 1,
  DC_ERR_DIMENSION_MISMATCH = 2,
  DC_ERR_NOT_HERMITIAN = 3,
  DC_ERR_NOT_A_BASIS = 4,
  DC_ERR_NOT_ORTHONORMAL = 5,
  DC_ERR_ZERO_LAMBDA = 6,
  DC_ERR_WRONG_BASIS_KIND = 7,
  DC_ERR_PARSE = 8,
  DC_ERR_INTERNAL = 9
} dc_status;

const char* dc_status_name(dc_status status);

/* Message for the most recent failure on this thread; never NULL. */
const char* dc_last_error(void);

const char* dc_version(void);

void dc_string_free(char* s);

/* ---- bases ---------------------------------------------------------- */

dc_status dc_basis_standard(int n, dc_basis** out);
dc_status dc_basis_pauli(int normalized, dc_basis** out);
dc_status dc_basis_pauli_tensor(int k, int normalized, dc_basis** out);
dc_status dc_basis_weyl(int n, dc_basis** out);
/* lambda is row-major interleaved re,im of length 2*n*n; all entries
 * must be nonzero. */
dc_status dc_basis_scaled_unit(int n, const double* lambda, dc_basis** out);
/* Basis spec file contents; see the README for the schema. */
dc_status dc_basis_from_json(const char* json, dc_basis** out);
/* Builtin token: "pauli", "standard:4", "weyl:3", "pauli_tensor:2". */
dc_status dc_basis_from_token(const char* token, dc_basis** out);
void dc_basis_free(dc_basis* basis);
int dc_basis_dim(const dc_basis* basis);

/* ---- maps ------------------------------------------------------------ */

/* name: "identity" | "transpose" | "trace_depolarize". */
dc_status dc_map_builtin(const char* name, int n, dc_map** out);
/* Map spec file contents; see the README for the schema. */
dc_status dc_map_from_json(const char* json, dc_map** out);
void dc_map_free(dc_map* map);
int dc_map_input_dim(const dc_map* map);
int dc_map_output_dim(const dc_map* map);

/* ---- computations ---------------------------------------------------- */

/* Order-isomorphism verdict for the duality map of the basis:
 * {"kind","C","diagnostics"}. tol <= 0 selects the default 1e-8. */
dc_status dc_classify(const dc_basis* basis, double tol, char** out_json);

/* Closed-form verdict for a scaled matrix-unit basis {lambda_ij E_ij}. */
dc_status dc_classify_scaled_unit(int n, const double* lambda, double tol,
                                  char** out_json);

/* form: "choi" | "jam" | "conj" | "genl". basis is required for conj
 * and genl (NULL otherwise); transposed applies to genl only. Output:
 * {"form","matrix","hermitian","eigenvalues","psd"}. */
dc_status dc_choi_form(const dc_map* map, const char* form, const dc_basis* basis,
                       int transposed, char** out_json);

/* Entanglement-witness pipeline: classify, build sum Phi(B_i) (x) B_i,
 * screen the map, sample product pairings. require: "case1" | "case3". */
dc_status dc_witness_report(const dc_basis* basis, const dc_map* map,
                            const char* require, int samples, uint64_t seed,
                            char** out_json);

/* Property suites ("all", "pauli", "weyl", "rankone", "conjugate",
 * "genlchoi"): {"suite","max_n","seed","checks":[...],"all_pass"}. */
dc_status dc_verify(const char* suite, int max_n, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
