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

// Command-line front end. Links the C API only; all math lives behind
// libdualcert. Exit codes: 0 success, 1 failed --check-kind or failed
// verify suite, 2 parse/validation failure (stderr only).

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualcert/dualcert.h"

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void die(const std::string& message) {
  std::cerr << "dualcert: " << message << "\n";
  std::exit(2);
}

void check(dc_status status) {
  if (status != DC_OK)
    die(std::string(dc_status_name(status)) + ": " + dc_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  dc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_path(const std::string& arg) {
  return arg.find('/') != std::string::npos ||
         arg.find(".json") != std::string::npos ||
         std::filesystem::exists(arg);
}

using BasisHandle = std::unique_ptr<dc_basis, decltype(&dc_basis_free)>;
using MapHandle = std::unique_ptr<dc_map, decltype(&dc_map_free)>;

BasisHandle load_basis(const std::string& arg) {
  dc_basis* basis = nullptr;
  if (looks_like_path(arg)) {
    check(dc_basis_from_json(read_file(arg).c_str(), &basis));
  } else {
    check(dc_basis_from_token(arg.c_str(), &basis));
  }
  return BasisHandle(basis, &dc_basis_free);
}

MapHandle load_map(const std::string& path) {
  dc_map* map = nullptr;
  check(dc_map_from_json(read_file(path).c_str(), &map));
  return MapHandle(map, &dc_map_free);
}

uint64_t default_seed() {
  if (const char* env = std::getenv("DUALCERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      die(std::string("bad DUALCERT_SEED value: ") + env);
    }
  }
  return 42;
}

void print_matrix(const Json& m, const std::string& indent) {
  for (const Json& row : m["entries"]) {
    std::string line = indent + "[";
    for (const Json& z : row) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), " (%.6g,%.6g)", z[0].get<double>(),
                    z[1].get<double>());
      line += buf;
    }
    std::cout << line << " ]\n";
  }
}

void print_classify_report(const Json& verdict) {
  std::cout << "kind: " << verdict["kind"].get<std::string>() << "\n";
  if (!verdict["C"].is_null()) {
    std::cout << "C:\n";
    print_matrix(verdict["C"], "  ");
  }
  const Json& diag = verdict["diagnostics"];
  for (const char* key : {"k1", "k2"}) {
    const Json& d = diag[key];
    std::cout << key << ": hermitian=" << (d["hermitian"].get<bool>() ? "yes" : "no")
              << " min_eigenvalue=" << d["min_eigenvalue"].get<double>()
              << " rank_one_residual=" << d["rank_one_residual"].get<double>() << "\n";
  }
  if (!diag["action_residual"].is_null())
    std::cout << "action_residual: " << diag["action_residual"].get<double>() << "\n";
}

int cmd_classify(const std::string& basis_arg, double tol, bool json,
                 const std::string& check_kind) {
  BasisHandle basis = load_basis(basis_arg);
  char* out = nullptr;
  check(dc_classify(basis.get(), tol, &out));
  const std::string text = take_string(out);
  if (json) {
    std::cout << text;
  } else {
    print_classify_report(Json::parse(text));
  }
  if (!check_kind.empty()) {
    const std::string kind = Json::parse(text)["kind"].get<std::string>();
    if (kind != check_kind) {
      std::cerr << "dualcert: verdict " << kind << " != expected " << check_kind
                << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_choi(const std::string& map_file, const std::string& form,
             const std::string& basis_arg, bool transposed, bool json) {
  MapHandle map = load_map(map_file);
  BasisHandle basis(nullptr, &dc_basis_free);
  if (form == "conj" || form == "genl") {
    if (basis_arg.empty()) die("--basis is required for form \"" + form + "\"");
    basis = load_basis(basis_arg);
  }
  char* out = nullptr;
  check(dc_choi_form(map.get(), form.c_str(), basis.get(), transposed ? 1 : 0, &out));
  const std::string text = take_string(out);
  if (json) {
    std::cout << text;
    return 0;
  }
  const Json result = Json::parse(text);
  std::cout << "form: " << form << "\n";
  std::cout << "hermitian: " << (result["hermitian"].get<bool>() ? "yes" : "no")
            << "\n";
  if (result["psd"].is_null()) {
    std::cout << "psd: undefined (matrix is not Hermitian)\n";
  } else {
    std::cout << "psd: " << (result["psd"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "eigenvalues:";
    for (const Json& v : result["eigenvalues"]) std::cout << " " << v.get<double>();
    std::cout << "\n";
  }
  std::cout << "matrix:\n";
  print_matrix(result["matrix"], "  ");
  return 0;
}

int cmd_witness(const std::string& basis_arg, const std::string& map_file,
                const std::string& require, int samples, uint64_t seed, bool json) {
  BasisHandle basis = load_basis(basis_arg);
  MapHandle map = load_map(map_file);
  char* out = nullptr;
  check(dc_witness_report(basis.get(), map.get(), require.c_str(), samples, seed,
                          &out));
  const std::string text = take_string(out);
  if (json) {
    std::cout << text;
    return 0;
  }
  const Json report = Json::parse(text);
  std::cout << "basis_kind_used: " << report["basis_kind_used"].get<std::string>()
            << "\n";
  std::cout << "map_positive_screen: "
            << (report["map_positive_screen"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "samples: " << report["num_samples"].get<int>()
            << " seed: " << report["seed"].get<uint64_t>() << "\n";
  std::cout << "min_product_pairing: " << report["min_product_pairing"].get<double>()
            << "\n";
  if (report["detected_state"].is_null()) {
    std::cout << "detected_state: none (witness is PSD)\n";
  } else {
    std::cout << "detected_state: pairing " << report["detected_pairing"].get<double>()
              << "\n";
    print_matrix(report["detected_state"], "  ");
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_n, uint64_t seed, bool json) {
  char* out = nullptr;
  check(dc_verify(suite.c_str(), max_n, seed, &out));
  const std::string text = take_string(out);
  const Json report = Json::parse(text);
  if (json) {
    std::cout << text;
  } else {
    for (const Json& c : report["checks"]) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3g", c["max_residual"].get<double>());
      std::cout << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                << c["name"].get<std::string>() << "  max_residual=" << buf;
      const std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) std::cout << "  (" << detail << ")";
      std::cout << "\n";
    }
    std::cout << (report["all_pass"].get<bool>() ? "all suites passed"
                                                 : "FAILURES present")
              << "\n";
  }
  return report["all_pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certify duality maps of matrix bases and run the Choi-type "
               "positivity criteria built on them"};
  app.set_version_flag("--version", dc_version());
  app.require_subcommand(1);

  std::string basis_arg, map_file, check_kind;
  std::string form = "choi";
  std::string require = "case1";
  std::string suite = "all";
  double tol = 0.0;
  bool json = false, transposed = false;
  int samples = 1000;
  int max_n = 6;
  uint64_t seed = default_seed();

  CLI::App* classify = app.add_subcommand(
      "classify", "decide whether a basis's duality map is a (co-positive) "
                  "complete order isomorphism");
  classify->add_option("basis", basis_arg,
                       "builtin token (pauli, standard:4, weyl:3, pauli_tensor:2) "
                       "or a basis JSON file")
      ->required();
  classify->add_option("--tol", tol, "rank-one residual tolerance (default 1e-8)");
  classify->add_flag("--json", json, "emit canonical JSON");
  classify->add_option("--check-kind", check_kind,
                       "exit 1 unless the verdict kind matches");

  CLI::App* choi = app.add_subcommand(
      "choi", "compute a map's Choi-type matrix and its PSD verdict");
  choi->add_option("map", map_file, "map JSON file")->required();
  choi->add_option("--form", form, "choi | jam | conj | genl")
      ->check(CLI::IsMember({"choi", "jam", "conj", "genl"}));
  choi->add_option("--basis", basis_arg, "basis (required for conj/genl)");
  choi->add_flag("--transposed", transposed, "transpose the basis factor (genl)");
  choi->add_flag("--json", json, "emit canonical JSON");

  CLI::App* witness = app.add_subcommand(
      "witness", "build and validate an entanglement witness from a basis and map");
  witness->add_option("basis", basis_arg, "basis token or JSON file")->required();
  witness->add_option("map", map_file, "map JSON file")->required();
  witness->add_option("--samples", samples, "number of product-state samples");
  witness->add_option("--seed", seed, "PRNG seed (default 42 or DUALCERT_SEED)");
  witness->add_option("--require", require, "case1 | case3")
      ->check(CLI::IsMember({"case1", "case3"}));
  witness->add_flag("--json", json, "emit canonical JSON");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the property suites; one pass/fail line per property");
  verify->add_option("--suite", suite, "all | pauli | weyl | rankone | conjugate | "
                                       "genlchoi")
      ->check(CLI::IsMember({"all", "pauli", "weyl", "rankone", "conjugate",
                             "genlchoi"}));
  verify->add_option("--max-n", max_n, "largest dimension for the swept checks");
  verify->add_option("--seed", seed, "PRNG seed (default 42 or DUALCERT_SEED)");
  verify->add_flag("--json", json, "emit canonical JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "dualcert: " << e.what() << "\n";
    return 2;
  }

  if (classify->parsed()) return cmd_classify(basis_arg, tol, json, check_kind);
  if (choi->parsed()) return cmd_choi(map_file, form, basis_arg, transposed, json);
  if (witness->parsed())
    return cmd_witness(basis_arg, map_file, require, samples, seed, json);
  if (verify->parsed()) return cmd_verify(suite, max_n, seed, json);
  return 2;
}
