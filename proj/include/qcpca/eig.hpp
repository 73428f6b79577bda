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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/errors.hpp"

namespace qcpca {

inline constexpr double kEigInputHermTol = 1e-10;
inline constexpr double kEigOffDiagonalFactor = 1e-13;  // relative to ||M||_F
inline constexpr int kEigMaxSweeps = 100;
inline constexpr double kEigTieTol = 1e-12;        // eigenvalues treated as equal
inline constexpr double kEigOrthoTol = 1e-10;      // pairwise orthonormality
inline constexpr double kEigResidualFactor = 1e-10;  // ||Mv - lambda v|| vs 1+||M||_F

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted descending; near-equal values (within 1e-12) keep
/// the solver-produced column order. Eigenvector k is column k of
/// `eigenvectors`, unit norm, with its largest-magnitude component
/// (ties: lowest index) made real and nonnegative.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexVector eigenvector(std::size_t k) const {
    ComplexVector v(eigenvectors.dim());
    for (std::size_t i = 0; i < eigenvectors.dim(); ++i) v[i] = eigenvectors(i, k);
    return v;
  }
};

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

inline void canonicalize_phase(ComplexMatrix& vectors, std::size_t col) {
  const std::size_t n = vectors.dim();
  std::size_t imax = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(vectors(i, col));
    if (a > best) {
      best = a;
      imax = i;
    }
  }
  if (best == 0.0) return;
  const Complex phase = std::conj(vectors(imax, col)) / best;
  for (std::size_t i = 0; i < n; ++i) vectors(i, col) *= phase;
  vectors(imax, col) = Complex(std::abs(vectors(imax, col)), 0.0);
}

/// Descending order; runs of eigenvalues chained closer than kEigTieTol keep
/// the solver's column order among themselves.
inline std::vector<std::size_t> descending_order(const std::vector<double>& d) {
  std::vector<std::size_t> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return d[i] > d[j]; });
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && d[order[end - 1]] - d[order[end]] < kEigTieTol) ++end;
    std::sort(order.begin() + start, order.begin() + end);
    start = end;
  }
  return order;
}

}  // namespace detail

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Each rotation annihilates one off-diagonal pair; the sweep loop stops once
/// the off-diagonal Frobenius norm falls below 1e-13 * ||M||_F, with a hard
/// cap of 100 sweeps. Throws ValidationError for non-Hermitian input and
/// ConvergenceError if the cap is hit.
inline EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (m.empty()) throw DimensionError("eig_hermitian: empty matrix");
  if (!is_hermitian(m, kEigInputHermTol)) {
    throw ValidationError("eig_hermitian: input not Hermitian (residual " +
                          fmt_sci(hermiticity_residual(m)) + ", tol " +
                          fmt_sci(kEigInputHermTol) + ")");
  }

  const std::size_t n = m.dim();
  // Work on the Hermitian average so rounding noise in one triangle cannot
  // bias the rotations.
  ComplexMatrix a = hermitian_part(m);
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = kEigOffDiagonalFactor * frobenius_norm(a);

  bool converged = detail::off_diagonal_norm(a) <= target;
  for (int sweep = 0; sweep < kEigMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double b = std::abs(a(p, q));
        if (b == 0.0) continue;
        const Complex w = a(p, q) / b;  // pivot phase
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        // tan(2*theta) = 2b / (alpha - gamma), stable root for tan(theta).
        const double theta = (gamma - alpha) / (2.0 * b);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(w) * akq;
          a(k, q) = s * w * akp + c * akq;
          a(p, k) = std::conj(a(k, p));
          a(q, k) = std::conj(a(k, q));
        }
        a(p, p) = alpha - t * b;
        a(q, q) = gamma + t * b;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(w) * vkq;
          v(k, q) = s * w * vkp + c * vkq;
        }
      }
    }
    converged = detail::off_diagonal_norm(a) <= target;
  }
  if (!converged) {
    throw ConvergenceError("eig_hermitian: off-diagonal norm " +
                           fmt_sci(detail::off_diagonal_norm(a)) + " above target " +
                           fmt_sci(target) + " after " + std::to_string(kEigMaxSweeps) +
                           " sweeps");
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  const std::vector<std::size_t> order = detail::descending_order(diag);

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = diag[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    detail::canonicalize_phase(out.eigenvectors, k);
  }

  // Construction-time gate on the decomposition invariants. Failures here
  // indicate an ill-conditioned input rather than a caller mistake.
  const ComplexMatrix h = hermitian_part(m);
  const double residual_allow = kEigResidualFactor * (1.0 + frobenius_norm(h));
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexVector vk = out.eigenvector(k);
    const ComplexVector hv = apply(h, vk);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      r2 += std::norm(hv[i] - out.eigenvalues[k] * vk[i]);
    }
    if (!(std::sqrt(r2) <= residual_allow)) {
      throw ConvergenceError("eig_hermitian: eigenpair residual " + fmt_sci(std::sqrt(r2)) +
                             " above " + fmt_sci(residual_allow));
    }
    for (std::size_t l = 0; l <= k; ++l) {
      const Complex g = inner(out.eigenvector(l), vk);
      const double dev = std::abs(g - (l == k ? Complex(1.0) : Complex(0.0)));
      if (!(dev <= kEigOrthoTol)) {
        throw ConvergenceError("eig_hermitian: eigenvector orthonormality residual " +
                               fmt_sci(dev));
      }
    }
  }
  return out;
}

}  // namespace qcpca
