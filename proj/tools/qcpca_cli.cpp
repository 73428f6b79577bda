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

// Command-line front end. Exit codes: 0 success, 1 domain failure
// (invariant violation), 2 I/O or parse failure.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcpca/qcpca.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;

qcpca::PolarizationVector parse_polarization(const std::string& text) {
  std::vector<double> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = text.find(',', begin);
    const std::string piece =
        text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(piece, &used));
      if (used != piece.size()) throw std::invalid_argument(piece);
    } catch (const std::exception&) {
      throw qcpca::ParseError("--p: malformed number '" + piece + "'");
    }
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  if (parts.size() != 3) {
    throw qcpca::ParseError("--p expects PX,PY,PZ, got '" + text + "'");
  }
  return {parts[0], parts[1], parts[2]};
}

qcpca::PauliAxis axis_from_char(char c) {
  switch (c) {
    case 'x': return qcpca::PauliAxis::X;
    case 'y': return qcpca::PauliAxis::Y;
    case 'z': return qcpca::PauliAxis::Z;
  }
  throw qcpca::ParseError(std::string("--axes: unknown axis '") + c + "'");
}

int run_analyze(const std::string& input_path, const std::string& out_path,
                bool center_flag, std::int64_t oracle_samples, std::int64_t seed) {
  qcpca::ProblemFile problem = qcpca::ProblemFile::load(input_path);
  if (center_flag) problem.options.center = true;
  if (oracle_samples >= 0) problem.options.oracle_samples = static_cast<std::uint64_t>(oracle_samples);
  if (seed >= 0) problem.options.seed = static_cast<std::uint64_t>(seed);

  const qcpca::AnalysisReport report = qcpca::analyze(problem);
  const std::string json_text = report.to_json().dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << json_text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qcpca::ParseError("cannot write '" + out_path + "'");
    out << json_text;
    if (!out) throw qcpca::ParseError("i/o error while writing '" + out_path + "'");
    std::cout << report.to_text();
  }
  return kExitOk;
}

int run_qubit(const std::string& p_text, const std::string& axes) {
  const qcpca::PolarizationVector p = parse_polarization(p_text);
  const qcpca::SpinPcaDemo demo =
      qcpca::spin_pca_demo(p, axis_from_char(axes[0]), axis_from_char(axes[1]));
  std::cout << "polarization P = (" << qcpca::fmt_g(p.px) << ", " << qcpca::fmt_g(p.py)
            << ", " << qcpca::fmt_g(p.pz) << "), axes (" << axes[0] << ", " << axes[1]
            << ")\n"
            << qcpca::spin_demo_text(demo);
  return kExitOk;
}

int run_validate(const std::string& input_path) {
  const qcpca::ProblemFile problem = qcpca::ProblemFile::load(input_path);
  const qcpca::ValidationReport report = qcpca::validate_problem(problem);
  std::cout << report.to_text();
  if (!report.all_pass()) {
    std::cout << "validation FAILED: " << report.first_failure()->invariant << "\n";
    return kExitDomain;
  }
  std::cout << "validation passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PCA on the quantum correlation matrix of a set of observables"};
  app.require_subcommand(1);

  std::string analyze_input;
  std::string analyze_out;
  bool center_flag = false;
  std::int64_t oracle_samples = -1;  // <0: keep the file's value
  std::int64_t seed = -1;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze a problem file");
  analyze_cmd->add_option("input", analyze_input, "problem file (JSON)")->required();
  analyze_cmd->add_option("--out", analyze_out, "write the JSON report here");
  analyze_cmd->add_flag("--center", center_flag, "center observables to zero mean under rho");
  analyze_cmd->add_option("--oracle-samples", oracle_samples,
                          "sampling-oracle draws (overrides the file; 0 skips)");
  analyze_cmd->add_option("--seed", seed, "sampling-oracle seed (overrides the file)");

  std::string p_text;
  std::string axes;
  CLI::App* qubit_cmd = app.add_subcommand("qubit", "run the polarized-qubit Pauli demo");
  qubit_cmd->add_option("--p", p_text, "polarization vector PX,PY,PZ")->required();
  qubit_cmd->add_option("--axes", axes, "Pauli axis pair")
      ->required()
      ->check(CLI::IsMember({"xy", "xz", "yz", "yx", "zx", "zy"}));

  std::string validate_input;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check every invariant of a problem file");
  validate_cmd->add_option("input", validate_input, "problem file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (analyze_cmd->parsed()) {
      return run_analyze(analyze_input, analyze_out, center_flag, oracle_samples, seed);
    }
    if (qubit_cmd->parsed()) {
      return run_qubit(p_text, axes);
    }
    return run_validate(validate_input);
  } catch (const qcpca::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qcpca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
