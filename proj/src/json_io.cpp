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

#include "dualcert/json_io.hpp"

#include <utility>

namespace dualcert {

namespace {

Json entries_to_json(int rows, int cols, const std::vector<Complex>& a) {
  Json out = Json::array();
  for (int i = 0; i < rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < cols; ++j) {
      const Complex& z = a[static_cast<size_t>(i) * cols + j];
      row.push_back(Json::array({z.real(), z.imag()}));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Complex> entries_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ParseError("matrix entries: expected " + std::to_string(rows) + " rows");
  std::vector<Complex> a;
  a.reserve(static_cast<size_t>(rows) * cols);
  for (const Json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ParseError("matrix entries: expected " + std::to_string(cols) +
                       " columns per row");
    for (const Json& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ParseError("matrix entry must be a [re, im] pair of numbers");
      a.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  return a;
}

int require_int(const Json& j, const char* key, int min_value) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  const int v = j[key].get<int>();
  if (v < min_value)
    throw ParseError(std::string("field \"") + key + "\" must be >= " +
                     std::to_string(min_value));
  return v;
}

std::string require_string(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw ParseError(std::string("missing string field \"") + key + "\"");
  return j[key].get<std::string>();
}

Json optional_matrix(const std::optional<CMatrix>& M) {
  return M ? matrix_to_json(*M) : Json(nullptr);
}

Json eigenvalue_json(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(v);
  return out;
}

Json rank_one_diag_to_json(const RankOneDiagnostics& d) {
  Json out = Json::object();
  out["hermitian"] = d.hermitian;
  out["hermiticity_defect"] = d.herm_defect;
  out["smallest_eigenvalues"] = eigenvalue_json(d.smallest_eigenvalues);
  out["min_eigenvalue"] = d.min_eigenvalue;
  out["rank_one_residual"] = d.residual;
  return out;
}

}  // namespace

Json matrix_to_json(const CMatrix& M) {
  Json out = Json::object();
  out["n"] = M.dim();
  out["entries"] = entries_to_json(M.dim(), M.dim(), M.flat());
  return out;
}

CMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected an object");
  const int n = require_int(j, "n", 1);
  if (!j.contains("entries")) throw ParseError("matrix: missing \"entries\"");
  CMatrix M = CMatrix::from_flat(n, entries_from_json(j["entries"], n, n));
  return M;
}

Json rect_to_json(const RectMatrix& M) {
  Json out = Json::object();
  out["rows"] = M.rows;
  out["cols"] = M.cols;
  out["entries"] = entries_to_json(M.rows, M.cols, M.a);
  return out;
}

RectMatrix rect_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected an object");
  int rows, cols;
  if (j.contains("n") && !j.contains("rows")) {
    rows = cols = require_int(j, "n", 1);
  } else {
    rows = require_int(j, "rows", 1);
    cols = require_int(j, "cols", 1);
  }
  if (!j.contains("entries")) throw ParseError("matrix: missing \"entries\"");
  RectMatrix M(rows, cols);
  M.a = entries_from_json(j["entries"], rows, cols);
  if (!M.all_finite()) throw ParseError("matrix: non-finite entry");
  return M;
}

MatrixBasis basis_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("basis spec: expected an object");
  const std::string kind = require_string(j, "kind");
  if (kind == "standard") return standard_basis(require_int(j, "n", 1));
  if (kind == "pauli") {
    const bool normalized = j.value("normalized", false);
    return pauli_basis(normalized);
  }
  if (kind == "pauli_tensor") {
    const int k = require_int(j, "k", 1);
    const bool normalized = j.value("normalized", false);
    return tensor_power(pauli_basis(normalized), k);
  }
  if (kind == "weyl") return weyl_basis(require_int(j, "n", 1));
  if (kind == "scaled_unit") {
    if (!j.contains("lambda")) throw ParseError("scaled_unit basis: missing \"lambda\"");
    return scaled_unit_basis(matrix_from_json(j["lambda"]));
  }
  if (kind == "custom") {
    const int n = require_int(j, "n", 1);
    if (!j.contains("matrices") || !j["matrices"].is_array())
      throw ParseError("custom basis: missing \"matrices\" array");
    std::vector<CMatrix> elements;
    for (const Json& m : j["matrices"]) elements.push_back(matrix_from_json(m));
    return custom_basis(n, std::move(elements));
  }
  throw ParseError("basis spec: unknown kind \"" + kind + "\"");
}

MatrixBasis basis_from_token(const std::string& token) {
  std::string name = token;
  std::string param;
  if (const size_t colon = token.find(':'); colon != std::string::npos) {
    name = token.substr(0, colon);
    param = token.substr(colon + 1);
  }
  const auto param_int = [&](int fallback) {
    if (param.empty()) {
      if (fallback > 0) return fallback;
      throw ParseError("basis token \"" + token + "\" needs a parameter, e.g. \"" +
                       name + ":3\"");
    }
    try {
      return std::stoi(param);
    } catch (const std::exception&) {
      throw ParseError("basis token \"" + token + "\": bad parameter \"" + param + "\"");
    }
  };
  if (name == "standard") return standard_basis(param_int(0));
  if (name == "pauli") return pauli_basis(false);
  if (name == "pauli_norm") return pauli_basis(true);
  if (name == "pauli_tensor") return tensor_power(pauli_basis(false), param_int(0));
  if (name == "weyl") return weyl_basis(param_int(0));
  throw ParseError("unknown basis token \"" + token + "\"");
}

MapSpec map_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("map spec: expected an object");
  const std::string kind = require_string(j, "kind");
  const int n = require_int(j, "n", 1);
  if (kind == "builtin") {
    if (j.contains("p") && j["p"].get<int>() != n)
      throw ParseError("builtin map: requires p == n");
    const std::string name = require_string(j, "name");
    if (name == "identity") return MapSpec::builtin(Builtin::Identity, n);
    if (name == "transpose") return MapSpec::builtin(Builtin::Transpose, n);
    if (name == "trace_depolarize")
      return MapSpec::builtin(Builtin::TraceDepolarize, n);
    throw ParseError("map spec: unknown builtin \"" + name + "\"");
  }
  const int p = require_int(j, "p", 1);
  if (kind == "kraus") {
    if (!j.contains("ops") || !j["ops"].is_array())
      throw ParseError("kraus map: missing \"ops\" array");
    std::vector<RectMatrix> ops;
    for (const Json& o : j["ops"]) ops.push_back(rect_from_json(o));
    return MapSpec::kraus(n, p, std::move(ops));
  }
  if (kind == "superop") {
    if (!j.contains("mat")) throw ParseError("superop map: missing \"mat\"");
    return MapSpec::superop_mat(n, p, rect_from_json(j["mat"]));
  }
  throw ParseError("map spec: unknown kind \"" + kind + "\"");
}

Json verdict_to_json(const DualityVerdict& verdict) {
  Json out = Json::object();
  out["kind"] = to_string(verdict.kind);
  out["C"] = optional_matrix(verdict.C);
  Json diag = Json::object();
  diag["k1"] = rank_one_diag_to_json(verdict.diagnostics.k1);
  diag["k2"] = rank_one_diag_to_json(verdict.diagnostics.k2);
  diag["action_residual"] = verdict.diagnostics.action_residual
                                ? Json(*verdict.diagnostics.action_residual)
                                : Json(nullptr);
  out["diagnostics"] = std::move(diag);
  return out;
}

Json witness_report_to_json(const WitnessReport& report) {
  Json out = Json::object();
  out["witness"] = matrix_to_json(report.witness);
  out["min_product_pairing"] = report.min_product_pairing;
  out["num_samples"] = report.num_samples;
  out["seed"] = report.seed;
  out["detected_state"] = optional_matrix(report.detected_state);
  out["detected_pairing"] =
      report.detected_pairing ? Json(*report.detected_pairing) : Json(nullptr);
  out["basis_kind_used"] = report.basis_kind_used;
  out["map_positive_screen"] = report.map_positive_screen;
  return out;
}

Json matrix_analysis_to_json(const std::string& form, const CMatrix& M) {
  Json out = Json::object();
  out["form"] = form;
  out["matrix"] = matrix_to_json(M);
  const bool hermitian =
      hermiticity_defect(M) <= kTolHerm * (1.0 + M.frobenius_norm());
  out["hermitian"] = hermitian;
  if (hermitian) {
    const EigenDecomposition eig = herm_eig(M);
    out["eigenvalues"] = eigenvalue_json(eig.values);
    out["psd"] = is_psd(M);
  } else {
    out["eigenvalues"] = nullptr;
    out["psd"] = nullptr;
  }
  return out;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace dualcert
