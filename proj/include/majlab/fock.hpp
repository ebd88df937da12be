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

// Jordan-Wigner matrix representation of the Majorana algebra on the 2^N
// dimensional fermionic Fock space.
//
// Basis state index s encodes occupations |n_1 n_2 ... n_N>, mode 1 being the
// most significant bit. c_k carries the string sign (-1)^{n_1 + ... + n_{k-1}}.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "majlab/majorana_algebra.hpp"

namespace majlab::algebra {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr int kMaxFockModes = 12;

struct FockOperator {
    CMatrix matrix;
    bool hermitian = false;

    /// Wraps `m`, setting the Hermitian flag by a residual test.
    static FockOperator from_matrix(CMatrix m, double tol = 1e-13);
    Eigen::Index dim() const { return matrix.rows(); }
};

enum class ParitySector { even, odd };

struct ParitySectorProjector {
    ParitySector sector;
    FockOperator projector;
};

class FockSpace {
  public:
    /// Throws ResourceError for n_modes > kMaxFockModes and RangeError for n_modes < 1.
    explicit FockSpace(int n_modes);

    int n_modes() const { return n_modes_; }
    Eigen::Index dim() const { return Eigen::Index{1} << n_modes_; }

    /// Occupation of mode k (1-based) in basis state s.
    int occupation(Eigen::Index s, int k) const;

    /// gamma_index as a dense matrix.
    CMatrix generator(int index) const;
    CMatrix annihilation(int k) const;
    CMatrix creation(int k) const;
    /// Diagonal (-1)^{sum_k n_k}.
    CMatrix total_parity() const;

    CMatrix monomial(const MajoranaMonomial &m) const;
    CMatrix polynomial(const MajoranaPolynomial &p) const;
    ParitySectorProjector projector(ParitySector sector) const;

  private:
    int n_modes_;
};

/// All 2N generator matrices.
std::vector<FockOperator> fock_representation(int n_modes);

struct SuperselectionResult {
    cplx value;
    /// True when the observable fails P A P = A, i.e. it is not an even operator.
    bool parity_violating;
};

/// <psi_minus| A |psi_plus>. Throws PreconditionError if the states are not
/// parity eigenstates with eigenvalues +1 and -1 respectively.
SuperselectionResult superselection_expectation(const FockSpace &space, const CMatrix &observable,
                                                const CVector &psi_plus, const CVector &psi_minus);

}  // namespace majlab::algebra
