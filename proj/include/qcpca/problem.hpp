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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcpca/complex_matrix.hpp"
#include "qcpca/errors.hpp"

namespace qcpca {

struct ProblemOptions {
  bool center = false;
  std::uint64_t oracle_samples = 0;  // 0 = skip the sampling oracle
  std::uint64_t seed = 42;

  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

/// Parsed problem document: a density matrix, a named list of observables,
/// and analysis options.
///
/// On disk this is JSON. Complex numbers are two-element arrays [re, im];
/// matrices are row-major arrays of n^2 such pairs. Unknown keys are
/// rejected so typos fail loudly instead of being ignored.
struct ProblemFile {
  std::size_t dimension = 0;
  ComplexMatrix rho;
  std::vector<std::pair<std::string, ComplexMatrix>> observables;
  ProblemOptions options;

  static ProblemFile parse(const std::string& text);
  static ProblemFile load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("problem file: missing key '") + key + "'");
  return *it;
}

inline void reject_unknown_keys(const nlohmann::json& j,
                                std::initializer_list<const char*> known,
                                const char* where) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || item.key() == k;
    if (!ok) {
      throw ParseError(std::string("problem file: unknown key '") + item.key() + "' in " +
                       where);
    }
  }
}

inline double parse_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("problem file: ") + what + " must be a number");
  return j.get<double>();
}

inline Complex parse_complex(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError(std::string("problem file: ") + what +
                     " must be a two-element [re, im] array");
  }
  return Complex(parse_number(j[0], what), parse_number(j[1], what));
}

inline ComplexMatrix parse_matrix(const nlohmann::json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim * dim) {
    throw ParseError(std::string("problem file: ") + what + " must be a row-major array of " +
                     std::to_string(dim * dim) + " complex pairs");
  }
  ComplexVector entries;
  entries.reserve(dim * dim);
  for (const auto& e : j) entries.push_back(parse_complex(e, what));
  try {
    return ComplexMatrix(dim, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("problem file: ") + what + ": " + e.what());
  }
}

}  // namespace detail

inline ProblemFile ProblemFile::parse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem file: top level must be an object");
  detail::reject_unknown_keys(j, {"dimension", "rho", "observables", "options"}, "top level");

  ProblemFile p;
  const nlohmann::json& dim = detail::require_key(j, "dimension");
  if (!dim.is_number_unsigned() || dim.get<std::uint64_t>() == 0) {
    throw ParseError("problem file: dimension must be a positive integer");
  }
  p.dimension = dim.get<std::size_t>();
  p.rho = detail::parse_matrix(detail::require_key(j, "rho"), p.dimension, "rho");

  const nlohmann::json& obs = detail::require_key(j, "observables");
  if (!obs.is_array() || obs.empty()) {
    throw ParseError("problem file: observables must be a non-empty array");
  }
  for (const auto& entry : obs) {
    if (!entry.is_object()) throw ParseError("problem file: each observable must be an object");
    detail::reject_unknown_keys(entry, {"label", "matrix"}, "observable");
    const nlohmann::json& label = detail::require_key(entry, "label");
    if (!label.is_string()) throw ParseError("problem file: observable label must be a string");
    p.observables.emplace_back(
        label.get<std::string>(),
        detail::parse_matrix(detail::require_key(entry, "matrix"), p.dimension,
                             "observable matrix"));
  }

  if (j.contains("options")) {
    const nlohmann::json& opt = j["options"];
    if (!opt.is_object()) throw ParseError("problem file: options must be an object");
    detail::reject_unknown_keys(opt, {"center", "oracle_samples", "seed"}, "options");
    if (opt.contains("center")) {
      if (!opt["center"].is_boolean()) throw ParseError("problem file: center must be a boolean");
      p.options.center = opt["center"].get<bool>();
    }
    if (opt.contains("oracle_samples")) {
      if (!opt["oracle_samples"].is_number_unsigned()) {
        throw ParseError("problem file: oracle_samples must be a nonnegative integer");
      }
      p.options.oracle_samples = opt["oracle_samples"].get<std::uint64_t>();
    }
    if (opt.contains("seed")) {
      if (!opt["seed"].is_number_unsigned()) {
        throw ParseError("problem file: seed must be a nonnegative integer");
      }
      p.options.seed = opt["seed"].get<std::uint64_t>();
    }
  }
  return p;
}

inline ProblemFile ProblemFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("i/o error while reading '" + path.string() + "'");
  return parse(buf.str());
}

namespace detail {

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const Complex& z : m.entries()) {
    out.push_back(nlohmann::json::array({z.real(), z.imag()}));
  }
  return out;
}

}  // namespace detail

inline nlohmann::json ProblemFile::to_json() const {
  nlohmann::json obs = nlohmann::json::array();
  for (const auto& [label, matrix] : observables) {
    obs.push_back({{"label", label}, {"matrix", detail::matrix_to_json(matrix)}});
  }
  return {{"dimension", dimension},
          {"rho", detail::matrix_to_json(rho)},
          {"observables", obs},
          {"options",
           {{"center", options.center},
            {"oracle_samples", options.oracle_samples},
            {"seed", options.seed}}}};
}

}  // namespace qcpca
