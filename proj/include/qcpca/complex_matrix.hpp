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

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "qcpca/errors.hpp"
#include "qcpca/format.hpp"

namespace qcpca {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense square complex matrix, row-major storage.
///
/// The validating constructors reject non-finite entries; element access is
/// unchecked and intended for building values that the domain types on top
/// re-validate on construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  ComplexMatrix(std::size_t dim, ComplexVector entries)
      : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
      throw DimensionError("ComplexMatrix: dimension " + std::to_string(dim_) +
                           " needs " + std::to_string(dim_ * dim_) +
                           " entries, got " + std::to_string(entries_.size()));
    }
    for (const Complex& z : entries_) {
      if (!is_finite(z)) {
        throw ValidationError("ComplexMatrix: non-finite entry " + fmt_complex(z));
      }
    }
  }

  static ComplexMatrix identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Row-by-row literal construction; all rows must match in length.
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    ComplexVector entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) {
        throw DimensionError("ComplexMatrix: ragged row in literal");
      }
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(entries));
  }

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  const ComplexVector& entries() const { return entries_; }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  ComplexVector entries_;
};

namespace detail {

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                             const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace detail

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return mat_mul(a, b);
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_dim(a, b, "operator+");
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  detail::require_same_dim(a, b, "operator-");
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline ComplexMatrix operator*(const Complex& s, const ComplexMatrix& m) {
  ComplexMatrix c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) = s * m(i, j);
  return c;
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix c(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) c(i, j) = std::conj(m(j, i));
  return c;
}

inline Complex trace(const ComplexMatrix& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

/// max_ij |m_ij - conj(m_ji)|. NaN entries make the residual NaN, which every
/// tolerance comparison rejects.
inline double hermiticity_residual(const ComplexMatrix& m) {
  double r = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i; j < m.dim(); ++j) {
      const double d = std::abs(m(i, j) - std::conj(m(j, i)));
      if (!(d <= r)) r = d;  // keeps NaN sticky
    }
  }
  return r;
}

inline bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (tol < 0.0) throw ValidationError("is_hermitian: negative tolerance");
  return hermiticity_residual(m) <= tol;
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

inline double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs_entry(const ComplexMatrix& m) {
  double r = 0.0;
  for (const Complex& z : m.entries()) r = std::max(r, std::abs(z));
  return r;
}

/// Takes the real part of a quantity that is real by construction
/// (e.g. tr(rho O) for Hermitian factors); rejects residual imaginary
/// parts above tol.
inline double real_checked(const Complex& z, double tol, const char* context) {
  if (!(std::abs(z.imag()) <= tol)) {
    throw ValidationError(std::string(context) + ": imaginary part " +
                          fmt_sci(z.imag()) + " exceeds " + fmt_sci(tol));
  }
  return z.real();
}

// ---------------------------------------------------------------------------
// Column-vector helpers shared by the eigensolver and the PCA layer.

/// Hermitian inner product, conjugate-linear in the first argument.
inline Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double vec_norm(const ComplexVector& a) {
  double s = 0.0;
  for (const Complex& z : a) s += std::norm(z);
  return std::sqrt(s);
}

inline ComplexVector normalized(const ComplexVector& a) {
  const double n = vec_norm(a);
  if (n == 0.0) throw ValidationError("normalized: zero vector");
  ComplexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] / n;
  return out;
}

inline ComplexVector apply(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.dim() != v.size()) throw DimensionError("apply: dimension mismatch");
  ComplexVector out(v.size());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

/// a b^dagger as a matrix (used to assemble states from kets).
inline ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw DimensionError("outer: length mismatch");
  ComplexMatrix m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

}  // namespace qcpca
