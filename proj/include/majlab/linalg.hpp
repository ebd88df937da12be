// Copyright 2026 The majlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Comparison of matrices modulo a global phase.

#include <Eigen/Dense>

namespace majlab {

/// Multiplies `m` by the unit phase that makes its first entry (column-major
/// scan) with |z| > tol real and positive. The zero matrix is returned as is.
Eigen::MatrixXcd canonicalize_phase(const Eigen::MatrixXcd &m, double tol = 1e-9);

/// max |a - b| after canonicalising both phases.
double distance_mod_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tol = 1e-9);

/// |Tr(a^dag b)| / d for d x d unitaries; 1 iff a = e^{i theta} b.
double gate_fidelity(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b);

/// max |u^dag u - 1|.
double unitarity_residual(const Eigen::MatrixXcd &u);

}  // namespace majlab
