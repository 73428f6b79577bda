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

// Umbrella header: PCA on the quantum correlation matrix of a set of
// observables under a density matrix, with the qubit worked example.

#pragma once

#include "qcpca/complex_matrix.hpp"
#include "qcpca/correlation.hpp"
#include "qcpca/eig.hpp"
#include "qcpca/errors.hpp"
#include "qcpca/pca.hpp"
#include "qcpca/problem.hpp"
#include "qcpca/quantum_state.hpp"
#include "qcpca/qubit.hpp"
#include "qcpca/report.hpp"
