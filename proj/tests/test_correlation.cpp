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
#include <vector>

#include "qcpca/correlation.hpp"
#include "qcpca/qubit.hpp"
#include "test_support.hpp"

using namespace qcpca;
using Catch::Matchers::WithinAbs;

namespace {
const Complex kI(0.0, 1.0);

std::vector<Observable> all_paulis() {
  return {pauli(PauliAxis::X), pauli(PauliAxis::Y), pauli(PauliAxis::Z)};
}
}  // namespace

TEST_CASE("Pauli variances are raw second moments", "[correlation]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho =
        density_from_polarization({coord(rng), coord(rng), coord(rng)});
    // sigma_x^2 = I and tr rho = 1, for every polarization.
    CHECK_THAT(variance(rho, pauli(PauliAxis::X)), WithinAbs(1.0, 1e-12));
  }
  CHECK_THAT(variance(DensityMatrix(Complex(0.5) * ComplexMatrix::identity(2)),
                      pauli(PauliAxis::Z)),
             WithinAbs(1.0, 1e-15));

  const DensityMatrix rho = density_from_polarization({0.2, 0.1, -0.4});
  const double c = 1.7;
  CHECK_THAT(variance(rho, Observable(Complex(c) * ComplexMatrix::identity(2), "cI")),
             WithinAbs(c * c, 1e-12));
}

TEST_CASE("cross moments of sigma_x and sigma_z", "[correlation]") {
  const double py = 0.37;
  const DensityMatrix rho = density_from_polarization({0.0, py, 0.0});
  const Complex sxz = correlate(rho, pauli(PauliAxis::X), pauli(PauliAxis::Z));
  const Complex szx = correlate(rho, pauli(PauliAxis::Z), pauli(PauliAxis::X));
  CHECK_THAT(std::abs(sxz - (-kI * py)), WithinAbs(0.0, 1e-14));
  CHECK_THAT(std::abs(szx - (kI * py)), WithinAbs(0.0, 1e-14));
}

TEST_CASE("self-correlation equals the variance", "[correlation]") {
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = test_support::random_density(rng, 3);
    const Observable o = test_support::random_observables(rng, 1, 3).front();
    const Complex c = correlate(rho, o, o);
    CHECK_THAT(c.real(), WithinAbs(variance(rho, o), 1e-12));
    CHECK_THAT(c.imag(), WithinAbs(0.0, 1e-12));
  }
}

TEST_CASE("qubit correlation matrix for the (x, z) pair", "[correlation]") {
  const double py = 0.6;
  const DensityMatrix rho = density_from_polarization({0.0, py, 0.0});
  const CorrelationMatrix corr(rho, {pauli(PauliAxis::X), pauli(PauliAxis::Z)});
  const ComplexMatrix expected =
      ComplexMatrix::from_rows({{1.0, -kI * py}, {kI * py, 1.0}});
  CHECK(test_support::max_abs_diff(corr.matrix(), expected) <= 1e-12);
}

TEST_CASE("three-Pauli correlation matrix", "[correlation]") {
  // S_ij = delta_ij + i eps_ijk P_k, from sigma_i sigma_j = delta_ij I + i eps_ijk sigma_k.
  const double px = 0.3;
  const double py = -0.2;
  const double pz = 0.4;
  const DensityMatrix rho = density_from_polarization({px, py, pz});
  const CorrelationMatrix corr(rho, all_paulis());
  const ComplexMatrix expected = ComplexMatrix::from_rows({{1.0, kI * pz, -kI * py},
                                                           {-kI * pz, 1.0, kI * px},
                                                           {kI * py, -kI * px, 1.0}});
  CHECK(test_support::max_abs_diff(corr.matrix(), expected) <= 1e-12);

  const CorrelationMatrix unpolarized(
      DensityMatrix(Complex(0.5) * ComplexMatrix::identity(2)), all_paulis());
  CHECK(test_support::max_abs_diff(unpolarized.matrix(), ComplexMatrix::identity(3)) <= 1e-14);
}

TEST_CASE("correlation matrix preconditions", "[correlation]") {
  const DensityMatrix rho = density_from_polarization({0.0, 0.0, 0.0});
  CHECK_THROWS_AS(CorrelationMatrix(rho, {pauli(PauliAxis::X)}), DimensionError);
  CHECK_THROWS_AS(CorrelationMatrix(rho, {pauli(PauliAxis::X),
                                          Observable(ComplexMatrix::identity(3), "I3")}),
                  DimensionError);
}

TEST_CASE("correlation matrix invariants on random inputs", "[correlation]") {
  std::mt19937_64 rng(43);
  for (int rep = 0; rep < 20; ++rep) {
    const CorrelationMatrix corr = test_support::random_correlation(rng, 4, 3);
    CHECK(hermiticity_residual(corr.matrix()) <= 1e-12);
    for (std::size_t i = 0; i < corr.size(); ++i) {
      CHECK(corr.matrix()(i, i).real() >= -1e-12);
      CHECK(std::abs(corr.matrix()(i, i).imag()) <= 1e-12);
    }
    // a^dagger S a = tr(rho P^dagger P) >= 0 for unit vectors a.
    for (int probe = 0; probe < 10; ++probe) {
      const ComplexVector a = test_support::random_unit_vector(rng, corr.size());
      CHECK(inner(a, apply(corr.matrix(), a)).real() >= -1e-10);
    }
  }
}

TEST_CASE("symmetrization", "[correlation]") {
  const double py = 0.6;
  const DensityMatrix rho = density_from_polarization({0.0, py, 0.0});
  const CorrelationMatrix corr(rho, {pauli(PauliAxis::X), pauli(PauliAxis::Z)});
  // The imaginary cross terms cancel: phi is the identity.
  CHECK(test_support::max_abs_diff(symmetrize(corr).phi, ComplexMatrix::identity(2)) <= 1e-14);

  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 10; ++rep) {
    const CorrelationMatrix c = test_support::random_correlation(rng, 3, 3);
    const ComplexMatrix phi = symmetrize(c).phi;
    for (std::size_t i = 0; i < phi.dim(); ++i) {
      for (std::size_t j = 0; j < phi.dim(); ++j) {
        CHECK(std::abs(phi(i, j).imag()) <= 1e-12);
        CHECK(std::abs(phi(i, j) - phi(j, i)) <= 1e-12);
      }
    }
    // A real-symmetric S is a fixed point.
    CHECK(test_support::max_abs_diff(symmetrize(c).phi, phi) == 0.0);
  }
}

TEST_CASE("Pauli anticommutators make phi the identity", "[correlation]") {
  // {sigma_i, sigma_j} = 2 delta_ij I under any polarization.
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> coord(-0.5, 0.5);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho =
        density_from_polarization({coord(rng), coord(rng), coord(rng)});
    const CorrelationMatrix corr(rho, all_paulis());
    CHECK(test_support::max_abs_diff(symmetrize(corr).phi, ComplexMatrix::identity(3)) <=
          1e-13);
  }
}
