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

#pragma once

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/correlation.hpp"
#include "qcpca/errors.hpp"
#include "qcpca/pca.hpp"
#include "qcpca/quantum_state.hpp"

namespace qcpca {

inline constexpr double kPolarizationTol = 1e-12;  // |P| <= 1 + kPolarizationTol
inline constexpr double kBasisOrthoTol = 1e-12;

enum class PauliAxis { X, Y, Z };

inline char axis_name(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return 'x';
    case PauliAxis::Y: return 'y';
    case PauliAxis::Z: return 'z';
  }
  throw Error("axis_name: invalid axis");
}

inline Observable pauli(PauliAxis axis) {
  const Complex i(0.0, 1.0);
  switch (axis) {
    case PauliAxis::X:
      return Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}), "sigma_x");
    case PauliAxis::Y:
      return Observable(ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}}), "sigma_y");
    case PauliAxis::Z:
      return Observable(ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}), "sigma_z");
  }
  throw Error("pauli: invalid axis");
}

/// Bloch-sphere polarization vector; |P| = 1 is a pure state, |P| < 1 mixed.
struct PolarizationVector {
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  double norm() const { return std::sqrt(px * px + py * py + pz * pz); }
};

/// rho = 1/2 [[1+Pz, Px-iPy], [Px+iPy, 1-Pz]]; round-trips tr(rho sigma_i) = P_i.
inline DensityMatrix density_from_polarization(const PolarizationVector& p) {
  if (!(p.norm() <= 1.0 + kPolarizationTol)) {
    throw ValidationError("polarization vector: |P| = " + fmt_g(p.norm()) +
                          " exceeds 1, not a state");
  }
  const Complex i(0.0, 1.0);
  return DensityMatrix(ComplexMatrix::from_rows(
      {{0.5 * (1.0 + p.pz), 0.5 * (p.px - i * p.py)},
       {0.5 * (p.px + i * p.py), 0.5 * (1.0 - p.pz)}}));
}

/// An orthonormal qubit basis, stored as two kets.
struct QubitBasis {
  ComplexVector ket0;
  ComplexVector ket1;

  QubitBasis(ComplexVector k0, ComplexVector k1)
      : ket0(std::move(k0)), ket1(std::move(k1)) {
    if (ket0.size() != 2 || ket1.size() != 2) {
      throw DimensionError("qubit basis: kets must have 2 components");
    }
    const double r = std::max({std::abs(inner(ket0, ket0) - Complex(1.0)),
                               std::abs(inner(ket1, ket1) - Complex(1.0)),
                               std::abs(inner(ket0, ket1))});
    if (!(r <= kBasisOrthoTol)) {
      throw ValidationError("qubit basis: not orthonormal (residual " + fmt_sci(r) + ")");
    }
  }
};

/// |0'> = (|0> + i|1>)/sqrt(2), |1'> = (|0> - i|1>)/sqrt(2).
inline QubitBasis circular_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  return QubitBasis({r, i * r}, {r, -i * r});
}

/// PCA of a Pauli pair under a polarized qubit state, with the overlap of
/// each coefficient vector against the circular-polarization basis.
///
/// Overlaps are reported as |<ket|a>| rather than asserted as identities:
/// global phase and degenerate spectra make exact vector equality ill-posed,
/// and overlap 1 is the testable form of "the principal axes coincide with
/// the circular basis".
struct SpinPcaDemo {
  CorrelationMatrix correlation;
  PcaResult pca;
  QubitBasis basis;
  // overlaps[k] = { |<0'|a_k>|, |<1'|a_k>| } for the rank-(k+1) component.
  std::vector<std::array<double, 2>> overlaps;
};

inline SpinPcaDemo spin_pca_demo(const PolarizationVector& p, PauliAxis first,
                                 PauliAxis second) {
  if (first == second) {
    throw ValidationError(std::string("spin_pca_demo: axes must be distinct, got (") +
                          axis_name(first) + ", " + axis_name(second) + ")");
  }
  const DensityMatrix rho = density_from_polarization(p);
  CorrelationMatrix corr(rho, {pauli(first), pauli(second)});
  PcaResult pca = run_pca(corr);
  QubitBasis basis = circular_basis();

  std::vector<std::array<double, 2>> overlaps;
  overlaps.reserve(pca.size());
  for (const PrincipalComponent& pc : pca.components()) {
    overlaps.push_back({std::abs(inner(basis.ket0, pc.coefficients.values())),
                        std::abs(inner(basis.ket1, pc.coefficients.values()))});
  }
  return SpinPcaDemo{std::move(corr), std::move(pca), std::move(basis),
                     std::move(overlaps)};
}

}  // namespace qcpca
