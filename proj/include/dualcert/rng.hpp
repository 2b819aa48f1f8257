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

#ifndef DUALCERT_RNG_HPP
#define DUALCERT_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "dualcert/cmatrix.hpp"

namespace dualcert {

// Deterministic random source: mersenne-twister mt19937_64 with a
// hand-rolled Box-Muller gaussian, so identical seeds reproduce
// identical streams independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }
  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Complex cgauss();   // complex gaussian, E|z|^2 = 1

  // Haar-random unit vector in C^dim (normalized complex gaussian).
  std::vector<Complex> haar_vector(int dim);
  // Matrix of independent cgauss entries.
  CMatrix ginibre(int dim);
  // Haar-random unitary (QR of a ginibre matrix with phase-fixed R).
  CMatrix haar_unitary(int dim);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dualcert

#endif
