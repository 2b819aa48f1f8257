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

#include "dualcert/rng.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace dualcert {

double Rng::uniform() {
  // 53 uniform bits in [0, 1).
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 in (0, 1] so the log is finite.
  const double u1 = (static_cast<double>(gen_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return r * std::cos(theta);
}

Complex Rng::cgauss() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) * M_SQRT1_2;
}

std::vector<Complex> Rng::haar_vector(int dim) {
  std::vector<Complex> v(dim);
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    v[i] = cgauss();
    norm2 += std::norm(v[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (Complex& z : v) z *= inv;
  return v;
}

CMatrix Rng::ginibre(int dim) {
  CMatrix M(dim);
  for (Complex& z : M.flat()) z = cgauss();
  return M;
}

CMatrix Rng::haar_unitary(int dim) {
  CMatrix G = ginibre(dim);
  Eigen::MatrixXcd A(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) A(i, j) = G(i, j);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the R-diagonal phases so the distribution is Haar.
  for (int j = 0; j < dim; ++j) {
    Complex d = R(j, j);
    Complex phase = (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
    Q.col(j) *= phase;
  }
  CMatrix U(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) U(i, j) = Q(i, j);
  return U;
}

}  // namespace dualcert
