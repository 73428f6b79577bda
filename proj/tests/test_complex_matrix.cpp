// Copyright 2026 The qcpca authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/qubit.hpp"
#include "test_support.hpp"

using namespace qcpca;
using Catch::Matchers::WithinAbs;
using test_support::max_abs_diff;

namespace {
const Complex kI(0.0, 1.0);

ComplexMatrix sigma(PauliAxis axis) { return pauli(axis).matrix(); }
}  // namespace

TEST_CASE("matrix product of Pauli pairs", "[linalg]") {
  // sigma_x sigma_z = -i sigma_y
  const ComplexMatrix expected = ComplexMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}});
  CHECK(max_abs_diff(mat_mul(sigma(PauliAxis::X), sigma(PauliAxis::Z)), expected) == 0.0);
  CHECK(max_abs_diff(mat_mul(sigma(PauliAxis::X), sigma(PauliAxis::X)),
                     ComplexMatrix::identity(2)) == 0.0);
}

TEST_CASE("identity is neutral for the product", "[linalg]") {
  std::mt19937_64 rng(11);
  const ComplexMatrix m = test_support::random_matrix(rng, 4);
  CHECK(max_abs_diff(mat_mul(ComplexMatrix::identity(4), m), m) == 0.0);
  CHECK(max_abs_diff(mat_mul(m, ComplexMatrix::identity(4)), m) == 0.0);
}

TEST_CASE("product rejects mismatched dimensions", "[linalg]") {
  CHECK_THROWS_AS(mat_mul(ComplexMatrix::identity(2), ComplexMatrix::identity(3)),
                  DimensionError);
}

TEST_CASE("adjoint", "[linalg]") {
  CHECK(max_abs_diff(adjoint(sigma(PauliAxis::Y)), sigma(PauliAxis::Y)) == 0.0);

  const ComplexMatrix upper = ComplexMatrix::from_rows({{0.0, kI}, {0.0, 0.0}});
  const ComplexMatrix expected = ComplexMatrix::from_rows({{0.0, 0.0}, {-kI, 0.0}});
  CHECK(max_abs_diff(adjoint(upper), expected) == 0.0);
}

TEST_CASE("adjoint of a product reverses the factors", "[linalg]") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = test_support::random_matrix(rng, 3);
    const ComplexMatrix b = test_support::random_matrix(rng, 3);
    CHECK(max_abs_diff(adjoint(mat_mul(a, b)), mat_mul(adjoint(b), adjoint(a))) < 1e-14);
  }
}

TEST_CASE("trace basics", "[linalg]") {
  CHECK(trace(ComplexMatrix::identity(2)) == Complex(2.0));
  CHECK(trace(sigma(PauliAxis::X)) == Complex(0.0));
}

TEST_CASE("trace of rho(P) sigma_y recovers Py", "[linalg]") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int rep = 0; rep < 20; ++rep) {
    const double px = coord(rng);
    const double py = coord(rng);
    const double pz = coord(rng);
    const ComplexMatrix rho = ComplexMatrix::from_rows(
        {{0.5 * (1.0 + pz), 0.5 * (px - kI * py)}, {0.5 * (px + kI * py), 0.5 * (1.0 - pz)}});
    CHECK_THAT(trace(mat_mul(rho, sigma(PauliAxis::Y))).real(), WithinAbs(py, 1e-14));
    CHECK_THAT(trace(mat_mul(rho, sigma(PauliAxis::Y))).imag(), WithinAbs(0.0, 1e-14));
  }
}

TEST_CASE("trace is cyclic", "[linalg]") {
  std::mt19937_64 rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = test_support::random_matrix(rng, 4);
    const ComplexMatrix b = test_support::random_matrix(rng, 4);
    CHECK_THAT(std::abs(trace(mat_mul(a, b)) - trace(mat_mul(b, a))), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("hermiticity check", "[linalg]") {
  CHECK(is_hermitian(sigma(PauliAxis::Y), 0.0));
  CHECK_FALSE(is_hermitian(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), 1e-10));
  CHECK_THROWS_AS(is_hermitian(sigma(PauliAxis::Y), -1.0), ValidationError);
}

TEST_CASE("second-moment matrices of Hermitian inputs are Hermitian", "[linalg]") {
  // (tr rho O_i O_j)* = tr rho O_j O_i, checked on raw matrix arithmetic.
  std::mt19937_64 rng(15);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = test_support::random_density(rng, 3);
    const auto obs = test_support::random_observables(rng, 3, 3);
    ComplexMatrix s(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        s(i, j) = trace(mat_mul(rho.matrix(), mat_mul(obs[i].matrix(), obs[j].matrix())));
    CHECK(is_hermitian(s, 1e-12));
  }
}

TEST_CASE("construction rejects non-finite entries", "[linalg]") {
  const double inf = std::numeric_limits<double>::infinity();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(inf, 0.0)}), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(1, {Complex(0.0, nan)}), ValidationError);
  CHECK_THROWS_AS(ComplexMatrix(2, {Complex(1.0)}), DimensionError);
}

TEST_CASE("vector helpers", "[linalg]") {
  const ComplexVector a{Complex(1.0), Complex(0.0, 1.0)};
  const ComplexVector b{Complex(0.0, 1.0), Complex(1.0)};
  // <a|b> = conj(1)*i + conj(i)*1 = i - i = 0
  CHECK_THAT(std::abs(inner(a, b)), WithinAbs(0.0, 1e-15));
  CHECK_THAT(vec_norm(a), WithinAbs(std::sqrt(2.0), 1e-15));
  CHECK_THROWS_AS(normalized(ComplexVector{Complex(0.0)}), ValidationError);

  const ComplexVector v = apply(sigma(PauliAxis::X), {Complex(1.0), Complex(0.0)});
  CHECK(v == ComplexVector{Complex(0.0), Complex(1.0)});
}
