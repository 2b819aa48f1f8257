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

#ifndef DUALCERT_VERIFY_HPP
#define DUALCERT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dualcert {

// One verified property: pass/fail plus the worst residual observed,
// so failures are auditable from the report alone.
struct CheckResult {
  std::string name;
  bool pass = false;
  double max_residual = 0.0;
  std::string detail;
};

// Suites: pauli, weyl, rankone, conjugate, genlchoi (or "all").
// max_n caps the dimension sweep of the weyl and duality-identity
// checks; seed drives every random corpus deterministically.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& suite);
std::vector<CheckResult> run_suite(const std::string& suite, int max_n, uint64_t seed);

}  // namespace dualcert

#endif
