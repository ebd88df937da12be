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

#include "majlab/hybrid_gates.hpp"

#include <algorithm>
#include <cmath>

#include "majlab/errors.hpp"

namespace majlab::hybrid {

void CooperPairBoxParams::validate() const {
    if (!(e_j0 > 0.0) || !(e_c > 0.0) || !(delta0 > 0.0)) {
        throw RangeError("Cooper-pair box needs e_j0, e_c, delta0 > 0");
    }
}

double josephson_energy(const CooperPairBoxParams &p) {
    p.validate();
    return p.e_j0 * std::abs(std::cos(p.flux_to_angle * p.flux));
}

double charge_splitting(double e_j, double e_c, double delta0) {
    if (!(e_c > 0.0)) throw DomainError("charge splitting needs e_c > 0");
    if (e_j < 0.0) throw DomainError("charge splitting needs e_j >= 0");
    return delta0 * std::exp(-std::sqrt(8.0 * e_j / e_c));
}

double charge_splitting(const CooperPairBoxParams &p) {
    return charge_splitting(josephson_energy(p), p.e_c, p.delta0);
}

PhaseGatePlan phase_gate_plan(double phi, double delta, double hbar) {
    if (!(delta > 0.0)) throw DomainError("phase gate needs a finite splitting delta > 0");
    return {delta, 2.0 * phi * hbar / delta, phi};
}

braid::LogicalGate simulate_phase_gate(const PhaseGatePlan &plan, double hbar) {
    const braid::Gate2 h = -0.5 * plan.delta * braid::pauli_z();
    Eigen::SelfAdjointEigenSolver<braid::Gate2> eig(h);
    const Eigen::Vector2cd phases =
        (eig.eigenvalues().cast<std::complex<double>>() * std::complex<double>{0, -plan.tau / hbar})
            .array()
            .exp();
    return {eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint()};
}

void ReadoutParams::validate() const {
    if (sigma_z != 1 && sigma_z != -1) throw RangeError("logical sigma_z must be +1 or -1");
    if (!(hbar > 0.0)) throw RangeError("hbar must be positive");
}

bool ReadoutParams::dispersive_regime() const { return std::abs(g_jc / detuning()) < 0.1; }

double dispersive_shift(const ReadoutParams &r) {
    r.validate();
    const double det = r.detuning();
    if (det == 0.0) throw DomainError("cavity resonant with the transmon: dispersive formula has a pole");
    return r.omega0 + r.g_jc * r.g_jc / det;
}

ReadoutContrast readout_contrast(ReadoutParams r) {
    r.sigma_z = 1;
    const double plus = dispersive_shift(r);
    r.sigma_z = -1;
    return {plus, dispersive_shift(r)};
}

JcSpectrum jc_oracle(const ReadoutParams &r, int photon_cutoff) {
    r.validate();
    if (photon_cutoff < 1) throw RangeError("photon cutoff must be positive");
    const double eps = r.transmon_splitting() / r.hbar;
    JcSpectrum out{};
    out.cutoff_warning = photon_cutoff < 5;
    out.ground_energy = -0.5 * eps;
    out.levels.push_back(out.ground_energy);
    for (int n = 0; n < photon_cutoff; ++n) {
        // Basis {|g, n+1>, |e, n>}.
        Eigen::Matrix2d block;
        const double coupling = r.g_jc * std::sqrt(static_cast<double>(n + 1));
        block << (n + 1) * r.omega0 - 0.5 * eps, coupling, coupling, n * r.omega0 + 0.5 * eps;
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(block);
        const Eigen::Vector2d e = eig.eigenvalues();
        out.levels.push_back(e(0));
        out.levels.push_back(e(1));
        out.block_splittings.push_back(e(1) - e(0));
        if (n == 0) {
            // Cavity-like state: larger weight on |g, 1>.
            const Eigen::Index cav = std::abs(eig.eigenvectors()(0, 0)) >= std::abs(eig.eigenvectors()(0, 1)) ? 0 : 1;
            out.cavity_frequency = e(cav) - out.ground_energy;
            out.qubit_frequency = e(1 - cav) - out.ground_energy;
        }
    }
    std::sort(out.levels.begin(), out.levels.end());
    return out;
}

}  // namespace majlab::hybrid
