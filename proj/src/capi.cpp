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

#include "dualcert/dualcert.h"

#include <cstring>
#include <string>

#include "dualcert/bases.hpp"
#include "dualcert/choi.hpp"
#include "dualcert/classify.hpp"
#include "dualcert/json_io.hpp"
#include "dualcert/verify.hpp"
#include "dualcert/witness.hpp"

struct dc_basis {
  dualcert::MatrixBasis value;
};

struct dc_map {
  dualcert::MapSpec value;
};

namespace {

thread_local std::string g_last_error = "";

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dc_status fail(dc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating dualcert exceptions into status codes.
template <typename Fn>
dc_status guarded(Fn&& fn) {
  using namespace dualcert;
  try {
    fn();
    return DC_OK;
  } catch (const DimensionMismatch& e) {
    return fail(DC_ERR_DIMENSION_MISMATCH, e.what());
  } catch (const NotHermitianError& e) {
    return fail(DC_ERR_NOT_HERMITIAN, e.what());
  } catch (const NotABasisError& e) {
    return fail(DC_ERR_NOT_A_BASIS, e.what());
  } catch (const NotOrthonormalError& e) {
    return fail(DC_ERR_NOT_ORTHONORMAL, e.what());
  } catch (const ZeroLambdaError& e) {
    return fail(DC_ERR_ZERO_LAMBDA, e.what());
  } catch (const WrongBasisKindError& e) {
    return fail(DC_ERR_WRONG_BASIS_KIND, e.what());
  } catch (const ParseError& e) {
    return fail(DC_ERR_PARSE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(DC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(DC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DC_ERR_INTERNAL, "unknown error");
  }
}

dualcert::CMatrix matrix_from_interleaved(int n, const double* data) {
  if (n < 1) throw dualcert::InvalidArgument("dimension must be positive");
  if (data == nullptr) throw dualcert::InvalidArgument("null entries pointer");
  dualcert::CMatrix M(n);
  for (int k = 0; k < n * n; ++k)
    M.flat()[k] = dualcert::Complex(data[2 * k], data[2 * k + 1]);
  return M;
}

void require_out(void* out) {
  if (out == nullptr) throw dualcert::InvalidArgument("null out pointer");
}

}  // namespace

extern "C" {

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "DC_OK";
    case DC_ERR_INVALID_ARGUMENT: return "DC_ERR_INVALID_ARGUMENT";
    case DC_ERR_DIMENSION_MISMATCH: return "DC_ERR_DIMENSION_MISMATCH";
    case DC_ERR_NOT_HERMITIAN: return "DC_ERR_NOT_HERMITIAN";
    case DC_ERR_NOT_A_BASIS: return "DC_ERR_NOT_A_BASIS";
    case DC_ERR_NOT_ORTHONORMAL: return "DC_ERR_NOT_ORTHONORMAL";
    case DC_ERR_ZERO_LAMBDA: return "DC_ERR_ZERO_LAMBDA";
    case DC_ERR_WRONG_BASIS_KIND: return "DC_ERR_WRONG_BASIS_KIND";
    case DC_ERR_PARSE: return "DC_ERR_PARSE";
    case DC_ERR_INTERNAL: return "DC_ERR_INTERNAL";
  }
  return "DC_ERR_UNKNOWN";
}

const char* dc_last_error(void) { return g_last_error.c_str(); }

const char* dc_version(void) { return "0.1.0"; }

void dc_string_free(char* s) { delete[] s; }

dc_status dc_basis_standard(int n, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    *out = new dc_basis{dualcert::standard_basis(n)};
  });
}

dc_status dc_basis_pauli(int normalized, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    *out = new dc_basis{dualcert::pauli_basis(normalized != 0)};
  });
}

dc_status dc_basis_pauli_tensor(int k, int normalized, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    *out = new dc_basis{
        dualcert::tensor_power(dualcert::pauli_basis(normalized != 0), k)};
  });
}

dc_status dc_basis_weyl(int n, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    *out = new dc_basis{dualcert::weyl_basis(n)};
  });
}

dc_status dc_basis_scaled_unit(int n, const double* lambda, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    *out = new dc_basis{dualcert::scaled_unit_basis(matrix_from_interleaved(n, lambda))};
  });
}

dc_status dc_basis_from_json(const char* json, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    if (json == nullptr) throw dualcert::InvalidArgument("null json pointer");
    *out = new dc_basis{dualcert::basis_from_json(dualcert::parse_json(json))};
  });
}

dc_status dc_basis_from_token(const char* token, dc_basis** out) {
  return guarded([&] {
    require_out(out);
    if (token == nullptr) throw dualcert::InvalidArgument("null token pointer");
    *out = new dc_basis{dualcert::basis_from_token(token)};
  });
}

void dc_basis_free(dc_basis* basis) { delete basis; }

int dc_basis_dim(const dc_basis* basis) { return basis ? basis->value.n : 0; }

dc_status dc_map_builtin(const char* name, int n, dc_map** out) {
  return guarded([&] {
    require_out(out);
    if (name == nullptr) throw dualcert::InvalidArgument("null name pointer");
    dualcert::Json j;
    j["kind"] = "builtin";
    j["n"] = n;
    j["name"] = name;
    *out = new dc_map{dualcert::map_from_json(j)};
  });
}

dc_status dc_map_from_json(const char* json, dc_map** out) {
  return guarded([&] {
    require_out(out);
    if (json == nullptr) throw dualcert::InvalidArgument("null json pointer");
    *out = new dc_map{dualcert::map_from_json(dualcert::parse_json(json))};
  });
}

void dc_map_free(dc_map* map) { delete map; }

int dc_map_input_dim(const dc_map* map) { return map ? map->value.n : 0; }

int dc_map_output_dim(const dc_map* map) { return map ? map->value.p : 0; }

dc_status dc_classify(const dc_basis* basis, double tol, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    if (basis == nullptr) throw dualcert::InvalidArgument("null basis handle");
    const double use_tol = tol > 0.0 ? tol : dualcert::kTolRank;
    const dualcert::DualityVerdict verdict =
        dualcert::classify_duality(basis->value, use_tol);
    *out_json = dup_string(dualcert::dump_canonical(dualcert::verdict_to_json(verdict)));
  });
}

dc_status dc_classify_scaled_unit(int n, const double* lambda, double tol,
                                  char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const double use_tol = tol > 0.0 ? tol : dualcert::kTolRank;
    const dualcert::DualityVerdict verdict =
        dualcert::classify_scaled_unit(matrix_from_interleaved(n, lambda), use_tol);
    *out_json = dup_string(dualcert::dump_canonical(dualcert::verdict_to_json(verdict)));
  });
}

dc_status dc_choi_form(const dc_map* map, const char* form, const dc_basis* basis,
                       int transposed, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    if (map == nullptr) throw dualcert::InvalidArgument("null map handle");
    if (form == nullptr) throw dualcert::InvalidArgument("null form pointer");
    const std::string f = form;
    dualcert::CMatrix M;
    if (f == "choi") {
      M = dualcert::choi_matrix(map->value).mat;
    } else if (f == "jam") {
      M = dualcert::jamiolkowski(map->value);
    } else if (f == "conj") {
      if (basis == nullptr)
        throw dualcert::InvalidArgument("form \"conj\" needs a basis");
      M = dualcert::conjugate_choi(map->value, basis->value);
    } else if (f == "genl") {
      if (basis == nullptr)
        throw dualcert::InvalidArgument("form \"genl\" needs a basis");
      M = dualcert::generalized_choi(map->value, basis->value, transposed != 0);
    } else {
      throw dualcert::InvalidArgument("unknown form \"" + f + "\"");
    }
    *out_json =
        dup_string(dualcert::dump_canonical(dualcert::matrix_analysis_to_json(f, M)));
  });
}

dc_status dc_witness_report(const dc_basis* basis, const dc_map* map,
                            const char* require, int samples, uint64_t seed,
                            char** out_json) {
  return guarded([&] {
    require_out(out_json);
    if (basis == nullptr) throw dualcert::InvalidArgument("null basis handle");
    if (map == nullptr) throw dualcert::InvalidArgument("null map handle");
    if (samples < 0) throw dualcert::InvalidArgument("samples must be >= 0");
    dualcert::WitnessCase wc = dualcert::WitnessCase::Case1;
    if (require != nullptr) {
      const std::string r = require;
      if (r == "case1") {
        wc = dualcert::WitnessCase::Case1;
      } else if (r == "case3") {
        wc = dualcert::WitnessCase::Case3;
      } else {
        throw dualcert::InvalidArgument("require must be \"case1\" or \"case3\"");
      }
    }
    const dualcert::WitnessReport report =
        dualcert::witness_report(basis->value, map->value, wc, samples, seed);
    *out_json =
        dup_string(dualcert::dump_canonical(dualcert::witness_report_to_json(report)));
  });
}

dc_status dc_verify(const char* suite, int max_n, uint64_t seed, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    const std::string s = suite ? suite : "all";
    const std::vector<dualcert::CheckResult> results =
        dualcert::run_suite(s, max_n, seed);
    dualcert::Json out = dualcert::Json::object();
    out["suite"] = s;
    out["max_n"] = max_n;
    out["seed"] = seed;
    dualcert::Json checks = dualcert::Json::array();
    bool all_pass = true;
    for (const dualcert::CheckResult& r : results) {
      dualcert::Json c = dualcert::Json::object();
      c["name"] = r.name;
      c["pass"] = r.pass;
      c["max_residual"] = r.max_residual;
      c["detail"] = r.detail;
      checks.push_back(std::move(c));
      all_pass = all_pass && r.pass;
    }
    out["checks"] = std::move(checks);
    out["all_pass"] = all_pass;
    *out_json = dup_string(dualcert::dump_canonical(out));
  });
}

}  // extern "C"
