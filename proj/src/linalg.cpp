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

#include "majlab/linalg.hpp"

#include <cmath>

#include "majlab/errors.hpp"

namespace majlab {

Eigen::MatrixXcd canonicalize_phase(const Eigen::MatrixXcd &m, double tol) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const std::complex<double> z = m(r, c);
            if (std::abs(z) > tol) return (std::conj(z) / std::abs(z)) * m;
        }
    }
    return m;
}

double distance_mod_phase(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix shapes differ");
    return (canonicalize_phase(a, tol) - canonicalize_phase(b, tol)).cwiseAbs().maxCoeff();
}

double gate_fidelity(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw PreconditionError("gate fidelity needs square matrices of equal size");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double unitarity_residual(const Eigen::MatrixXcd &u) {
    return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace majlab
