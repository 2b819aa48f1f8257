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

#ifndef DUALCERT_WITNESS_HPP
#define DUALCERT_WITNESS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dualcert/bases.hpp"
#include "dualcert/choi.hpp"
#include "dualcert/cmatrix.hpp"

namespace dualcert {

// Case1: basis must classify CompleteOrderIso (then sum_i B_i (x) B_i
// is PSD and the construction witnesses non-complete-positivity).
// Case3: basis must classify CoPositiveOrderIso (the witness matrix is
// PSD iff the map is completely co-positive).
enum class WitnessCase { Case1, Case3 };

struct WitnessReport {
  CMatrix witness;  // in M_p (x) M_n
  double min_product_pairing = 0.0;
  int num_samples = 0;
  uint64_t seed = 0;
  std::optional<CMatrix> detected_state;  // unit-trace PSD, pairing < -1e-6
  std::optional<double> detected_pairing;
  std::string basis_kind_used;
  // Result of screen_positive_map; always false for non-square maps,
  // which the screen does not cover.
  bool map_positive_screen = false;
};

// sum_i Phi(B_i) (x) B_i. Throws WrongBasisKindError when the basis
// does not classify as `require` demands.
CMatrix build_witness(const MatrixBasis& basis, const MapSpec& m, WitnessCase require);

// Pairs W (Hermitian, in M_p (x) M_n) with `samples` seeded Haar-random
// product states x x^* (x) y y^*, recording the minimum pairing; the
// detecting state is the projector onto the eigenvector of the most
// negative eigenvalue (absent when W is PSD). basis_kind_used and the
// screen flag are left for the caller.
WitnessReport validate_witness(const CMatrix& W, int n, int p, int samples,
                               uint64_t seed);

// One-sided heuristic: true iff Phi(x x^*) is PSD for `trials` seeded
// Haar-random unit vectors x. Never rejects a positive map; may accept
// a non-positive one with small probability.
bool screen_positive_map(const MapSpec& m, int trials, uint64_t seed);

// Full pipeline: classify, build, screen, validate; fills every
// WitnessReport field.
WitnessReport witness_report(const MatrixBasis& basis, const MapSpec& m,
                             WitnessCase require, int samples, uint64_t seed);

}  // namespace dualcert

#endif
