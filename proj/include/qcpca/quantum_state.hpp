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

#include <string>
#include <utility>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/eig.hpp"
#include "qcpca/errors.hpp"

namespace qcpca {

inline constexpr double kStateHermTol = 1e-10;
inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kStatePsdTol = 1e-10;  // eigenvalues >= -kStatePsdTol
inline constexpr double kImagTraceTol = 1e-12;

/// Validated quantum state: Hermitian, unit trace, positive semidefinite.
/// Each violated invariant is reported distinctly.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.empty()) throw DimensionError("density matrix: empty");
    if (!is_hermitian(matrix_, kStateHermTol)) {
      throw ValidationError("density matrix: not Hermitian (residual " +
                            fmt_sci(hermiticity_residual(matrix_)) + ")");
    }
    const Complex tr = trace(matrix_);
    if (!(std::abs(tr - 1.0) <= kStateTraceTol)) {
      throw ValidationError("density matrix: trace " + fmt_complex(tr) +
                            " differs from 1 by " + fmt_sci(std::abs(tr - 1.0)));
    }
    // PSD check through the eigensolver; tolerance absorbs rounding noise in
    // numerically constructed mixed states.
    const EigenDecomposition eig = eig_hermitian(matrix_);
    const double lambda_min = eig.eigenvalues.back();
    if (!(lambda_min >= -kStatePsdTol)) {
      throw ValidationError("density matrix: negative eigenvalue " + fmt_g(lambda_min));
    }
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

/// Validated Hermitian operator with a display label.
class Observable {
 public:
  Observable(ComplexMatrix matrix, std::string label)
      : matrix_(std::move(matrix)), label_(std::move(label)) {
    if (matrix_.empty()) throw DimensionError("observable '" + label_ + "': empty");
    if (!is_hermitian(matrix_, kStateHermTol)) {
      throw ValidationError("observable '" + label_ + "': not Hermitian (residual " +
                            fmt_sci(hermiticity_residual(matrix_)) + ")");
    }
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::string& label() const { return label_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
  std::string label_;
};

/// <O> = tr(rho O). Real for Hermitian factors; the residual imaginary part
/// is checked against 1e-12 and discarded.
inline double expectation(const DensityMatrix& rho, const Observable& o) {
  detail::require_same_dim(rho.matrix(), o.matrix(), "expectation");
  return real_checked(trace(mat_mul(rho.matrix(), o.matrix())), kImagTraceTol,
                      "expectation");
}

/// O - tr(rho O) * I; the result has zero mean under rho.
inline Observable center(const DensityMatrix& rho, const Observable& o) {
  detail::require_same_dim(rho.matrix(), o.matrix(), "center");
  const double mean = expectation(rho, o);
  ComplexMatrix shifted = o.matrix();
  for (std::size_t i = 0; i < shifted.dim(); ++i) shifted(i, i) -= mean;
  return Observable(std::move(shifted), o.label());
}

/// tr(rho^2); 1 exactly for pure states.
inline double purity(const DensityMatrix& rho) {
  return real_checked(trace(mat_mul(rho.matrix(), rho.matrix())), kImagTraceTol,
                      "purity");
}

}  // namespace qcpca
