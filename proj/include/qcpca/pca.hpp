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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/correlation.hpp"
#include "qcpca/eig.hpp"
#include "qcpca/errors.hpp"
#include "qcpca/quantum_state.hpp"

namespace qcpca {

inline constexpr double kCoeffUnitTol = 1e-12;
inline constexpr double kCombinationConstraintTol = 1e-9;
inline constexpr double kPcaVarianceTol = 1e-10;     // eigenvalue vs measured variance
inline constexpr double kPcaDegeneracyGap = 1e-10;   // adjacent eigenvalue gap

/// Unit-norm complex coefficient vector: sum_i |a_i|^2 = 1 to 1e-12.
class CoefficientVector {
 public:
  explicit CoefficientVector(ComplexVector values) : values_(std::move(values)) {
    if (values_.empty()) throw DimensionError("coefficient vector: empty");
    const double n = vec_norm(values_);
    if (!(std::abs(n * n - 1.0) <= kCoeffUnitTol)) {
      throw ValidationError("coefficient vector: squared norm " + fmt_g(n * n) +
                            " differs from 1 beyond " + fmt_sci(kCoeffUnitTol));
    }
  }

  static CoefficientVector normalize(const ComplexVector& values) {
    return CoefficientVector(normalized(values));
  }

  const ComplexVector& values() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  ComplexVector values_;
};

/// P = sum_i a_i O_i. Complex coefficients make P generally non-Hermitian,
/// so the result stays a raw matrix.
inline ComplexMatrix combine_observables(const ComplexVector& a,
                                         const std::vector<Observable>& obs) {
  if (a.size() != obs.size()) {
    throw DimensionError("combine_observables: " + std::to_string(a.size()) +
                         " coefficients for " + std::to_string(obs.size()) +
                         " observables");
  }
  if (obs.empty()) throw DimensionError("combine_observables: no observables");
  ComplexMatrix p(obs.front().dim());
  for (std::size_t i = 0; i < obs.size(); ++i) {
    detail::require_same_dim(p, obs[i].matrix(), "combine_observables");
    p = p + a[i] * obs[i].matrix();
  }
  return p;
}

/// Variance of the combination P = sum_i a_i O_i under rho, computed as
/// tr(rho P^dagger P).
///
/// The adjoint form is what makes complex coefficients meaningful: it equals
/// a^dagger S a for the correlation matrix S, which tr(rho P^2) does not once
/// the a_i pick up imaginary parts.
inline double variance_of_combination(const DensityMatrix& rho, const ComplexVector& a,
                                      const std::vector<Observable>& obs) {
  const double n = vec_norm(a);
  if (!(std::abs(n * n - 1.0) <= kCombinationConstraintTol)) {
    throw ValidationError("variance_of_combination: constraint sum |a_i|^2 = 1 violated (" +
                          fmt_g(n * n) + ")");
  }
  const ComplexMatrix p = combine_observables(a, obs);
  detail::require_same_dim(rho.matrix(), p, "variance_of_combination");
  return real_checked(trace(mat_mul(rho.matrix(), mat_mul(adjoint(p), p))),
                      kImagTraceTol, "variance_of_combination");
}

inline double variance_of_combination(const DensityMatrix& rho,
                                      const CoefficientVector& a,
                                      const std::vector<Observable>& obs) {
  return variance_of_combination(rho, a.values(), obs);
}

/// One principal axis: eigenvector coefficients, its eigenvalue, and the
/// assembled operator. rank 1 carries the largest variance. `degenerate`
/// flags eigenvalues within 1e-10 of a neighbor, where individual vectors
/// are not unique and only the spanned eigenspace is meaningful.
struct PrincipalComponent {
  CoefficientVector coefficients;
  double eigenvalue = 0.0;
  ComplexMatrix operator_matrix;
  std::size_t rank = 0;
  bool degenerate = false;
};

/// tr(rho P1^dagger P2); vanishes for distinct components of one analysis.
inline Complex cross_correlation(const DensityMatrix& rho, const PrincipalComponent& p1,
                                 const PrincipalComponent& p2) {
  detail::require_same_dim(rho.matrix(), p1.operator_matrix, "cross_correlation");
  detail::require_same_dim(p1.operator_matrix, p2.operator_matrix, "cross_correlation");
  return trace(
      mat_mul(rho.matrix(), mat_mul(adjoint(p1.operator_matrix), p2.operator_matrix)));
}

/// Rank-ordered principal components of a correlation matrix.
class PcaResult {
 public:
  PcaResult(std::vector<PrincipalComponent> components, CorrelationMatrix source)
      : components_(std::move(components)), source_(std::move(source)) {
    for (std::size_t k = 0; k + 1 < components_.size(); ++k) {
      // Tie-ordered solver output may sit up to the tie tolerance out of order.
      if (!(components_[k + 1].eigenvalue <= components_[k].eigenvalue + kEigTieTol)) {
        throw ValidationError("pca result: eigenvalues not non-increasing");
      }
    }
    for (std::size_t k = 0; k < components_.size(); ++k) {
      for (std::size_t l = 0; l <= k; ++l) {
        const Complex g =
            inner(components_[l].coefficients.values(), components_[k].coefficients.values());
        const double dev = std::abs(g - (l == k ? Complex(1.0) : Complex(0.0)));
        if (!(dev <= kEigOrthoTol)) {
          throw ValidationError("pca result: coefficient vectors not orthonormal (residual " +
                                fmt_sci(dev) + ")");
        }
      }
    }
  }

  const std::vector<PrincipalComponent>& components() const { return components_; }
  const PrincipalComponent& component(std::size_t rank) const {
    if (rank < 1 || rank > components_.size()) {
      throw DimensionError("pca result: rank " + std::to_string(rank) + " out of range");
    }
    return components_[rank - 1];
  }
  const CorrelationMatrix& source() const { return source_; }
  std::size_t size() const { return components_.size(); }

 private:
  std::vector<PrincipalComponent> components_;
  CorrelationMatrix source_;
};

/// Solves S a = lambda a and assembles the principal-component operators.
/// Each component is verified at construction: lambda >= -1e-10 and the
/// measured variance tr(rho P^dagger P) matches lambda to 1e-10.
inline PcaResult run_pca(const CorrelationMatrix& s) {
  const EigenDecomposition eig = eig_hermitian(s.matrix());
  const std::size_t n = eig.eigenvalues.size();
  std::vector<PrincipalComponent> components;
  components.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    PrincipalComponent pc{CoefficientVector(eig.eigenvector(k)),
                          eig.eigenvalues[k],
                          combine_observables(eig.eigenvector(k), s.observables()),
                          k + 1,
                          false};
    if (!(pc.eigenvalue >= -kPcaDegeneracyGap)) {
      throw ValidationError("principal component " + std::to_string(pc.rank) +
                            ": negative eigenvalue " + fmt_g(pc.eigenvalue));
    }
    const double measured = variance_of_combination(s.rho(), pc.coefficients, s.observables());
    if (!(std::abs(measured - pc.eigenvalue) <= kPcaVarianceTol)) {
      throw ValidationError("principal component " + std::to_string(pc.rank) +
                            ": variance " + fmt_g(measured) + " does not match eigenvalue " +
                            fmt_g(pc.eigenvalue));
    }
    components.push_back(std::move(pc));
  }
  for (std::size_t k = 0; k < n; ++k) {
    const bool near_prev =
        k > 0 && std::abs(eig.eigenvalues[k - 1] - eig.eigenvalues[k]) < kPcaDegeneracyGap;
    const bool near_next =
        k + 1 < n && std::abs(eig.eigenvalues[k] - eig.eigenvalues[k + 1]) < kPcaDegeneracyGap;
    components[k].degenerate = near_prev || near_next;
  }
  return PcaResult(std::move(components), s);
}

namespace detail {

/// Standard normal pairs from explicitly constructed uniforms, so the stream
/// depends only on the mt19937_64 sequence and stays identical across
/// standard libraries.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;          // [0,1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace detail

/// Monte-Carlo check of the variance-maximization theorem: the maximum of
/// a^dagger S a over `samples` unit vectors drawn uniformly from the complex
/// sphere (normalized complex Gaussians). Deterministic for a given seed,
/// bounded above by the top eigenvalue, and approaches it from below as the
/// sample count grows.
inline double sampling_oracle(const CorrelationMatrix& s, std::size_t samples,
                              std::uint64_t seed) {
  if (samples < 1) throw ValidationError("sampling_oracle: need at least 1 sample");
  const ComplexMatrix& m = s.matrix();
  const std::size_t n = m.dim();
  detail::NormalSource normals(seed);

  double best = -std::numeric_limits<double>::infinity();
  ComplexVector a(n);
  for (std::size_t sample = 0; sample < samples; ++sample) {
    double norm2 = 0.0;
    do {
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = Complex(normals.next(), normals.next());
      }
      norm2 = 0.0;
      for (const Complex& z : a) norm2 += std::norm(z);
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& z : a) z *= inv;

    // a^dagger S a is real for Hermitian S; sum it directly.
    double value = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex row = 0.0;
      for (std::size_t j = 0; j < n; ++j) row += m(i, j) * a[j];
      value += (std::conj(a[i]) * row).real();
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace qcpca
