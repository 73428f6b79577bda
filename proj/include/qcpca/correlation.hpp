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

#include <cstddef>
#include <utility>
#include <vector>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/eig.hpp"
#include "qcpca/errors.hpp"
#include "qcpca/quantum_state.hpp"

namespace qcpca {

inline constexpr double kCorrHermTol = 1e-12;
inline constexpr double kCorrDiagTol = 1e-12;  // diagonal >= -kCorrDiagTol
inline constexpr double kCorrPsdTol = 1e-10;
inline constexpr double kPhiSymTol = 1e-12;

/// var(O) = tr(rho O^2), the second moment of the (uncentered) observable.
inline double variance(const DensityMatrix& rho, const Observable& o) {
  detail::require_same_dim(rho.matrix(), o.matrix(), "variance");
  return real_checked(trace(mat_mul(rho.matrix(), mat_mul(o.matrix(), o.matrix()))),
                      kImagTraceTol, "variance");
}

/// S_AB = tr(rho A B). Order matters: swapping A and B conjugates the value.
inline Complex correlate(const DensityMatrix& rho, const Observable& a,
                         const Observable& b) {
  detail::require_same_dim(rho.matrix(), a.matrix(), "correlate");
  detail::require_same_dim(a.matrix(), b.matrix(), "correlate");
  return trace(mat_mul(rho.matrix(), mat_mul(a.matrix(), b.matrix())));
}

/// Second-moment matrix S_ij = tr(rho O_i O_j) together with its inputs.
///
/// For Hermitian rho and observables S is Hermitian (generally complex and
/// non-symmetric) and positive semidefinite; construction validates both,
/// plus real nonnegative diagonal entries. Diagonal entries are raw second
/// moments, not normalized correlation coefficients.
class CorrelationMatrix {
 public:
  CorrelationMatrix(DensityMatrix rho, std::vector<Observable> observables)
      : rho_(std::move(rho)), observables_(std::move(observables)), s_(0) {
    if (observables_.size() < 2) {
      throw DimensionError("correlation matrix: need at least 2 observables, got " +
                           std::to_string(observables_.size()));
    }
    for (const Observable& o : observables_) {
      detail::require_same_dim(rho_.matrix(), o.matrix(), "correlation matrix");
    }
    const std::size_t n = observables_.size();
    s_ = ComplexMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        s_(i, j) = correlate(rho_, observables_[i], observables_[j]);
      }
    }

    if (!is_hermitian(s_, kCorrHermTol)) {
      throw ValidationError("correlation matrix: not Hermitian (residual " +
                            fmt_sci(hermiticity_residual(s_)) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!(s_(i, i).real() >= -kCorrDiagTol)) {
        throw ValidationError("correlation matrix: negative diagonal entry " +
                              fmt_g(s_(i, i).real()) + " for '" +
                              observables_[i].label() + "'");
      }
    }
    const EigenDecomposition eig = eig_hermitian(s_);
    if (!(eig.eigenvalues.back() >= -kCorrPsdTol)) {
      throw ValidationError("correlation matrix: not positive semidefinite, eigenvalue " +
                            fmt_g(eig.eigenvalues.back()));
    }
  }

  const ComplexMatrix& matrix() const { return s_; }
  const std::vector<Observable>& observables() const { return observables_; }
  const DensityMatrix& rho() const { return rho_; }
  std::size_t size() const { return observables_.size(); }

 private:
  DensityMatrix rho_;
  std::vector<Observable> observables_;
  ComplexMatrix s_;
};

/// phi = (S + S^T)/2, the symmetric part of S entry-wise. For Hermitian S
/// this equals its entry-wise real part and plays the role of a classical
/// correlation function.
struct SymmetrizedCorrelation {
  ComplexMatrix phi;
};

inline SymmetrizedCorrelation symmetrize(const CorrelationMatrix& s) {
  const ComplexMatrix& m = s.matrix();
  ComplexMatrix phi(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) phi(i, j) = 0.5 * (m(i, j) + m(j, i));

  double residual = 0.0;
  for (std::size_t i = 0; i < phi.dim(); ++i) {
    for (std::size_t j = 0; j < phi.dim(); ++j) {
      residual = std::max(residual, std::abs(phi(i, j).imag()));
      residual = std::max(residual, std::abs(phi(i, j) - phi(j, i)));
    }
  }
  if (!(residual <= kPhiSymTol)) {
    throw ValidationError("symmetrized correlation: not real-symmetric (residual " +
                          fmt_sci(residual) + ")");
  }
  return SymmetrizedCorrelation{std::move(phi)};
}

}  // namespace qcpca
