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
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcpca/correlation.hpp"
#include "qcpca/pca.hpp"
#include "qcpca/problem.hpp"
#include "qcpca/quantum_state.hpp"
#include "qcpca/qubit.hpp"

namespace qcpca {

struct InvariantCheck {
  std::string invariant;
  bool pass = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

/// Residuals of every quantum_state and correlation invariant a problem is
/// subject to. Checks whose prerequisites failed (e.g. the S invariants when
/// rho itself is invalid) are not listed; all_pass is false in that case
/// because the prerequisite check already failed.
struct ValidationReport {
  std::vector<InvariantCheck> checks;
  std::optional<double> purity_value;

  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const InvariantCheck& c) { return c.pass; });
  }

  const InvariantCheck* first_failure() const {
    for (const InvariantCheck& c : checks) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }

  std::string to_text() const {
    std::ostringstream out;
    for (const InvariantCheck& c : checks) {
      out << (c.pass ? "[pass] " : "[FAIL] ") << c.invariant << "  residual "
          << fmt_sci(c.residual) << " (tol " << fmt_sci(c.tolerance) << ")\n";
    }
    if (purity_value) out << "purity tr(rho^2) = " << fmt_g(*purity_value) << "\n";
    return out.str();
  }
};

namespace detail {

inline void add_check(ValidationReport& report, std::string name, double residual,
                      double tolerance) {
  report.checks.push_back({std::move(name), residual <= tolerance, residual, tolerance});
}

/// Observables the analysis actually uses: centered when the option asks for it.
inline std::vector<Observable> effective_observables(const ProblemFile& problem,
                                                     const DensityMatrix& rho) {
  std::vector<Observable> obs;
  obs.reserve(problem.observables.size());
  for (const auto& [label, matrix] : problem.observables) {
    obs.emplace_back(matrix, label);
  }
  if (problem.options.center) {
    for (Observable& o : obs) o = center(rho, o);
  }
  return obs;
}

}  // namespace detail

inline ValidationReport validate_problem(const ProblemFile& problem) {
  ValidationReport report;

  for (const auto& [label, matrix] : problem.observables) {
    detail::add_check(report, "observable '" + label + "' hermitian",
                      hermiticity_residual(matrix), kStateHermTol);
  }

  const double rho_herm = hermiticity_residual(problem.rho);
  detail::add_check(report, "rho hermitian", rho_herm, kStateHermTol);
  detail::add_check(report, "rho unit trace", std::abs(trace(problem.rho) - 1.0),
                    kStateTraceTol);

  if (!(rho_herm <= kStateHermTol)) return report;
  const EigenDecomposition rho_eig = eig_hermitian(problem.rho);
  detail::add_check(report, "rho positive semidefinite",
                    std::max(0.0, -rho_eig.eigenvalues.back()), kStatePsdTol);

  if (!report.all_pass() || problem.observables.size() < 2) return report;

  // Prerequisites hold: construct the validated objects and measure the
  // correlation-matrix invariants on the same observables the analysis uses.
  const DensityMatrix rho{problem.rho};
  const std::vector<Observable> obs = detail::effective_observables(problem, rho);
  const std::size_t n = obs.size();
  ComplexMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s(i, j) = correlate(rho, obs[i], obs[j]);

  detail::add_check(report, "S hermitian", hermiticity_residual(s), kCorrHermTol);
  double diag_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diag_residual = std::max(diag_residual, std::abs(s(i, i).imag()));
    diag_residual = std::max(diag_residual, std::max(0.0, -s(i, i).real()));
  }
  detail::add_check(report, "S diagonal real nonnegative", diag_residual, kCorrDiagTol);
  if (hermiticity_residual(s) <= kEigInputHermTol) {
    const EigenDecomposition s_eig = eig_hermitian(s);
    detail::add_check(report, "S positive semidefinite",
                      std::max(0.0, -s_eig.eigenvalues.back()), kCorrPsdTol);
  }

  double phi_residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex phi_ij = 0.5 * (s(i, j) + s(j, i));
      const Complex phi_ji = 0.5 * (s(j, i) + s(i, j));
      phi_residual = std::max(phi_residual, std::abs(phi_ij.imag()));
      phi_residual = std::max(phi_residual, std::abs(phi_ij - phi_ji));
    }
  }
  detail::add_check(report, "phi real-symmetric", phi_residual, kPhiSymTol);

  report.purity_value = purity(rho);
  return report;
}

/// Per-component slice of an analysis report.
struct ComponentReport {
  std::size_t rank = 0;
  double eigenvalue = 0.0;
  double variance = 0.0;
  bool degenerate = false;
  ComplexVector coefficients;
  ComplexMatrix operator_matrix;
};

/// Full machine-readable result of one analysis run. Serialization is
/// deterministic: identical input and seed produce byte-identical JSON.
struct AnalysisReport {
  ProblemFile input;  // the effective problem (flag overrides applied)
  ComplexMatrix correlation;
  ComplexMatrix symmetrized;
  std::vector<double> eigenvalues;
  std::vector<ComponentReport> components;
  std::optional<double> oracle_max;
  ValidationReport validation;

  nlohmann::json to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (const ComponentReport& c : components) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Complex& z : c.coefficients) {
        coeffs.push_back(nlohmann::json::array({z.real(), z.imag()}));
      }
      comps.push_back({{"rank", c.rank},
                       {"eigenvalue", c.eigenvalue},
                       {"variance", c.variance},
                       {"degenerate", c.degenerate},
                       {"coefficients", coeffs},
                       {"operator", detail::matrix_to_json(c.operator_matrix)}});
    }
    nlohmann::json sym = nlohmann::json::array();
    for (const Complex& z : symmetrized.entries()) sym.push_back(z.real());
    nlohmann::json checks = nlohmann::json::array();
    for (const InvariantCheck& c : validation.checks) {
      checks.push_back({{"invariant", c.invariant},
                        {"pass", c.pass},
                        {"residual", c.residual},
                        {"tolerance", c.tolerance}});
    }
    nlohmann::json out = {{"input", input.to_json()},
                          {"correlation_matrix", detail::matrix_to_json(correlation)},
                          {"symmetrized", sym},
                          {"eigenvalues", eigenvalues},
                          {"components", comps},
                          {"validation", checks}};
    if (oracle_max) out["oracle_max"] = *oracle_max;
    return out;
  }

  std::string to_text() const;
};

/// Runs the whole pipeline on a parsed problem: validation, correlation
/// matrix, symmetrization, PCA, and the optional sampling oracle. Throws
/// ValidationError (naming the invariant) when the inputs are not a valid
/// quantum problem.
inline AnalysisReport analyze(const ProblemFile& problem) {
  if (problem.observables.size() < 2) {
    throw ValidationError("analyze: need at least 2 observables, got " +
                          std::to_string(problem.observables.size()));
  }
  AnalysisReport report;
  report.input = problem;
  report.validation = validate_problem(problem);
  if (const InvariantCheck* failure = report.validation.first_failure()) {
    throw ValidationError(failure->invariant + " violated (residual " +
                          fmt_sci(failure->residual) + ", tol " +
                          fmt_sci(failure->tolerance) + ")");
  }

  const DensityMatrix rho{problem.rho};
  const CorrelationMatrix corr(rho, detail::effective_observables(problem, rho));
  const PcaResult pca = run_pca(corr);

  report.correlation = corr.matrix();
  report.symmetrized = symmetrize(corr).phi;
  for (const PrincipalComponent& pc : pca.components()) {
    report.eigenvalues.push_back(pc.eigenvalue);
    report.components.push_back(
        {pc.rank, pc.eigenvalue,
         variance_of_combination(corr.rho(), pc.coefficients, corr.observables()),
         pc.degenerate, pc.coefficients.values(), pc.operator_matrix});
  }
  if (problem.options.oracle_samples > 0) {
    report.oracle_max =
        sampling_oracle(corr, problem.options.oracle_samples, problem.options.seed);
  }
  return report;
}

namespace detail {

inline void append_matrix_text(std::ostringstream& out, const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out << ' ' << fmt_complex(m(i, j));
    }
    out << " ]\n";
  }
}

}  // namespace detail

inline std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  out << "problem: dimension " << input.dimension << ", " << input.observables.size()
      << " observables (";
  for (std::size_t i = 0; i < input.observables.size(); ++i) {
    out << (i ? ", " : "") << input.observables[i].first;
  }
  out << ")\n";
  out << "options: center=" << (input.options.center ? "on" : "off")
      << ", oracle_samples=" << input.options.oracle_samples
      << ", seed=" << input.options.seed << "\n\n";

  out << "correlation matrix S:\n";
  detail::append_matrix_text(out, correlation);
  out << "symmetrized phi:\n";
  for (std::size_t i = 0; i < symmetrized.dim(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < symmetrized.dim(); ++j) {
      out << ' ' << fmt_g(symmetrized(i, j).real());
    }
    out << " ]\n";
  }

  out << "eigenvalues:";
  for (double v : eigenvalues) out << ' ' << fmt_g(v);
  out << '\n';
  for (const ComponentReport& c : components) {
    out << "component " << c.rank << ": eigenvalue " << fmt_g(c.eigenvalue) << ", variance "
        << fmt_g(c.variance) << (c.degenerate ? ", degenerate" : "") << "\n  coefficients:";
    for (const Complex& z : c.coefficients) out << ' ' << fmt_complex(z);
    out << '\n';
  }
  if (oracle_max) {
    out << "sampling oracle max: " << fmt_g(*oracle_max) << " (samples "
        << input.options.oracle_samples << ", seed " << input.options.seed << ")\n";
  }
  out << "\nvalidation:\n" << validation.to_text();
  return out.str();
}

/// Human-readable rendering of the qubit demo.
inline std::string spin_demo_text(const SpinPcaDemo& demo) {
  std::ostringstream out;
  const std::vector<Observable>& obs = demo.correlation.observables();
  out << "observables: " << obs[0].label() << ", " << obs[1].label() << "\n";
  out << "correlation matrix S:\n";
  detail::append_matrix_text(out, demo.correlation.matrix());
  out << "eigenvalues:";
  for (const PrincipalComponent& pc : demo.pca.components()) out << ' ' << fmt_g(pc.eigenvalue);
  out << '\n';
  for (std::size_t k = 0; k < demo.pca.size(); ++k) {
    const PrincipalComponent& pc = demo.pca.components()[k];
    out << "component " << pc.rank << ": eigenvalue " << fmt_g(pc.eigenvalue)
        << (pc.degenerate ? " (degenerate)" : "") << "\n  coefficients:";
    for (const Complex& z : pc.coefficients.values()) out << ' ' << fmt_complex(z);
    out << "\n  overlap with |0'> = " << fmt_g(demo.overlaps[k][0])
        << ", with |1'> = " << fmt_g(demo.overlaps[k][1]) << '\n';
  }
  return out.str();
}

}  // namespace qcpca
