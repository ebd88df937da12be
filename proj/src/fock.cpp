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

#include "majlab/fock.hpp"

#include <bit>
#include <string>

#include "majlab/errors.hpp"

namespace majlab::algebra {

FockOperator FockOperator::from_matrix(CMatrix m, double tol) {
    const bool herm = m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() < tol;
    return {std::move(m), herm};
}

FockSpace::FockSpace(int n_modes) : n_modes_(n_modes) {
    if (n_modes < 1) throw RangeError("Fock space needs at least one mode");
    if (n_modes > kMaxFockModes) {
        throw ResourceError("dense Fock representation capped at " + std::to_string(kMaxFockModes) +
                            " modes, requested " + std::to_string(n_modes));
    }
}

int FockSpace::occupation(Eigen::Index s, int k) const {
    return static_cast<int>((s >> (n_modes_ - k)) & 1);
}

CMatrix FockSpace::annihilation(int k) const {
    if (k < 1 || k > n_modes_) throw RangeError("mode " + std::to_string(k) + " out of range");
    const Eigen::Index d = dim();
    const Eigen::Index bit = Eigen::Index{1} << (n_modes_ - k);
    // Modes 1..k-1 sit in the bits above `bit`.
    const auto higher_mask = static_cast<unsigned long long>(~((bit << 1) - 1) & (d - 1));
    CMatrix c = CMatrix::Zero(d, d);
    for (Eigen::Index s = 0; s < d; ++s) {
        if ((s & bit) == 0) continue;
        const int string = std::popcount(static_cast<unsigned long long>(s) & higher_mask);
        c(s ^ bit, s) = (string % 2 == 0) ? 1.0 : -1.0;
    }
    return c;
}

CMatrix FockSpace::creation(int k) const { return annihilation(k).adjoint(); }

CMatrix FockSpace::generator(int index) const {
    if (index < 1 || index > 2 * n_modes_) {
        throw RangeError("Majorana index " + std::to_string(index) + " out of range");
    }
    const int k = (index + 1) / 2;
    const CMatrix c = annihilation(k);
    const CMatrix cd = c.adjoint();
    if (index % 2 == 1) return c + cd;
    return cplx{0, 1} * (cd - c);
}

CMatrix FockSpace::total_parity() const {
    const Eigen::Index d = dim();
    CMatrix p = CMatrix::Zero(d, d);
    for (Eigen::Index s = 0; s < d; ++s) {
        p(s, s) = (std::popcount(static_cast<unsigned long long>(s)) % 2 == 0) ? 1.0 : -1.0;
    }
    return p;
}

CMatrix FockSpace::monomial(const MajoranaMonomial &m) const {
    if (m.n_modes() != n_modes_) throw PreconditionError("monomial and Fock space disagree on mode count");
    CMatrix out = CMatrix::Identity(dim(), dim());
    for (int idx : m.support()) out = out * generator(idx);
    return m.phase() * out;
}

CMatrix FockSpace::polynomial(const MajoranaPolynomial &p) const {
    if (p.n_modes() != n_modes_) throw PreconditionError("polynomial and Fock space disagree on mode count");
    CMatrix out = CMatrix::Zero(dim(), dim());
    for (const auto &[support, coeff] : p.terms()) {
        out += coeff * monomial(MajoranaMonomial::from_product(support, n_modes_));
    }
    return out;
}

ParitySectorProjector FockSpace::projector(ParitySector sector) const {
    const double sign = sector == ParitySector::even ? 1.0 : -1.0;
    CMatrix id = CMatrix::Identity(dim(), dim());
    return {sector, FockOperator::from_matrix(0.5 * (id + sign * total_parity()))};
}

std::vector<FockOperator> fock_representation(int n_modes) {
    FockSpace space(n_modes);
    std::vector<FockOperator> out;
    out.reserve(static_cast<std::size_t>(2 * n_modes));
    for (int j = 1; j <= 2 * n_modes; ++j) out.push_back(FockOperator::from_matrix(space.generator(j)));
    return out;
}

SuperselectionResult superselection_expectation(const FockSpace &space, const CMatrix &observable,
                                                const CVector &psi_plus, const CVector &psi_minus) {
    constexpr double kEigenTol = 1e-10;
    const CMatrix parity = space.total_parity();
    if (psi_plus.size() != space.dim() || psi_minus.size() != space.dim() ||
        observable.rows() != space.dim() || observable.cols() != space.dim()) {
        throw PreconditionError("state or observable dimension does not match the Fock space");
    }
    const double scale_p = std::max(1.0, psi_plus.norm());
    const double scale_m = std::max(1.0, psi_minus.norm());
    if ((parity * psi_plus - psi_plus).norm() > kEigenTol * scale_p) {
        throw PreconditionError("psi_plus is not an even-parity eigenstate");
    }
    if ((parity * psi_minus + psi_minus).norm() > kEigenTol * scale_m) {
        throw PreconditionError("psi_minus is not an odd-parity eigenstate");
    }
    const double scale_a = std::max(1.0, observable.cwiseAbs().maxCoeff());
    const bool odd_part = (parity * observable * parity - observable).cwiseAbs().maxCoeff() > 1e-12 * scale_a;
    return {psi_minus.dot(observable * psi_plus), odd_part};
}

}  // namespace majlab::algebra
