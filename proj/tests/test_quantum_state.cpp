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

#include <random>
#include <string>

#include "qcpca/quantum_state.hpp"
#include "qcpca/qubit.hpp"
#include "test_support.hpp"

using namespace qcpca;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {
const Complex kI(0.0, 1.0);
}

TEST_CASE("valid density matrices", "[quantum_state]") {
  CHECK_NOTHROW(DensityMatrix(Complex(0.5) * ComplexMatrix::identity(2)));
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})));
}

TEST_CASE("density-matrix violations are reported distinctly", "[quantum_state]") {
  // Bloch vector of length 1.5: eigenvalues (1 +/- 1.5)/2, one negative.
  const ComplexMatrix overlong = ComplexMatrix::from_rows(
      {{0.5, -0.75 * kI}, {0.75 * kI, 0.5}});
  CHECK_THROWS_MATCHES(DensityMatrix(overlong), ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("negative eigenvalue")));

  CHECK_THROWS_MATCHES(DensityMatrix(ComplexMatrix::identity(2)), ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("trace")));

  CHECK_THROWS_MATCHES(DensityMatrix(ComplexMatrix::from_rows({{0.5, 1.0}, {0.0, 0.5}})),
                       ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("not Hermitian")));
}

TEST_CASE("observable validation", "[quantum_state]") {
  CHECK_NOTHROW(Observable(pauli(PauliAxis::X).matrix(), "sigma_x"));
  CHECK_THROWS_MATCHES(Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}), "bad"),
                       ValidationError,
                       Catch::Matchers::MessageMatches(ContainsSubstring("'bad'")));
  // Real linear combinations of Hermitian matrices stay Hermitian.
  CHECK_NOTHROW(Observable(
      pauli(PauliAxis::X).matrix() + Complex(2.0) * pauli(PauliAxis::Z).matrix(),
      "sigma_x + 2 sigma_z"));
}

TEST_CASE("expectation values", "[quantum_state]") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-0.55, 0.55);
  for (int rep = 0; rep < 10; ++rep) {
    const PolarizationVector p{coord(rng), coord(rng), coord(rng)};
    const DensityMatrix rho = density_from_polarization(p);
    CHECK_THAT(expectation(rho, pauli(PauliAxis::Z)), WithinAbs(p.pz, 1e-12));
  }
  CHECK_THAT(expectation(DensityMatrix(Complex(0.5) * ComplexMatrix::identity(2)),
                         pauli(PauliAxis::X)),
             WithinAbs(0.0, 1e-15));
  CHECK_THAT(expectation(DensityMatrix(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}})),
                         pauli(PauliAxis::Z)),
             WithinAbs(1.0, 1e-15));
}

TEST_CASE("centering removes the mean", "[quantum_state]") {
  const DensityMatrix rho = density_from_polarization({0.0, 0.0, 0.5});

  const Observable centered_z = center(rho, pauli(PauliAxis::Z));
  const ComplexMatrix expected =
      pauli(PauliAxis::Z).matrix() - Complex(0.5) * ComplexMatrix::identity(2);
  CHECK(test_support::max_abs_diff(centered_z.matrix(), expected) <= 1e-15);

  // Px = 0: sigma_x is already zero-mean.
  const Observable centered_x = center(rho, pauli(PauliAxis::X));
  CHECK(test_support::max_abs_diff(centered_x.matrix(), pauli(PauliAxis::X).matrix()) == 0.0);

  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix r = test_support::random_density(rng, 3);
    const Observable o = test_support::random_observables(rng, 1, 3).front();
    CHECK_THAT(expectation(r, center(r, o)), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("dimension mismatches are rejected", "[quantum_state]") {
  const DensityMatrix rho(Complex(0.5) * ComplexMatrix::identity(2));
  const Observable o(ComplexMatrix::identity(3), "I3");
  CHECK_THROWS_AS(expectation(rho, o), DimensionError);
  CHECK_THROWS_AS(center(rho, o), DimensionError);
}

TEST_CASE("random convex mixtures are valid states", "[quantum_state]") {
  std::mt19937_64 rng(33);
  for (std::size_t dim : {2, 3, 4}) {
    for (int rep = 0; rep < 15; ++rep) {
      CHECK_NOTHROW(test_support::random_density(rng, dim));
    }
  }
}

TEST_CASE("purity of a polarized qubit", "[quantum_state]") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int rep = 0; rep < 20; ++rep) {
    const PolarizationVector p{coord(rng), coord(rng), coord(rng)};
    const DensityMatrix rho = density_from_polarization(p);
    CHECK_THAT(purity(rho), WithinAbs(0.5 * (1.0 + p.norm() * p.norm()), 1e-12));
  }
  // Pure iff |P| = 1.
  CHECK_THAT(purity(density_from_polarization({0.0, 0.0, 1.0})), WithinAbs(1.0, 1e-12));
  CHECK(purity(density_from_polarization({0.0, 0.6, 0.0})) < 1.0 - 1e-3);
}
