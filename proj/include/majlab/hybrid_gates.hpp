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

// Cooper-pair-box controlled splitting of the Majorana qubit, the timed phase
// gate and dispersive readout through a cavity. Natural units: hbar = 1 unless
// passed explicitly; energies divided by hbar are angular frequencies.

#include <vector>

#include "majlab/braid.hpp"

namespace majlab::hybrid {

struct CooperPairBoxParams {
    double e_j0 = 1.0;
    double e_c = 1.0;
    double flux = 0.0;
    /// Splitting prefactor: delta = delta0 exp(-sqrt(8 E_J / E_C)).
    double delta0 = 1.0;
    /// Josephson angle = flux_to_angle * flux. The default 1 reads the flux
    /// in units where e / hbar = 1, i.e. E_J ~ cos(e Phi / hbar).
    double flux_to_angle = 1.0;

    void validate() const;
};

/// E_J = e_j0 |cos(flux_to_angle * flux)|.
double josephson_energy(const CooperPairBoxParams &p);

/// delta0 exp(-sqrt(8 e_j / e_c)). Throws DomainError for e_c <= 0 or e_j < 0.
double charge_splitting(double e_j, double e_c, double delta0 = 1.0);

/// Splitting of a box at its current flux.
double charge_splitting(const CooperPairBoxParams &p);

struct PhaseGatePlan {
    double delta;
    double tau;
    double phi;
};

/// tau = 2 phi hbar / delta. Throws DomainError for delta <= 0.
PhaseGatePlan phase_gate_plan(double phi, double delta, double hbar = 1.0);

/// Evolves H = -(delta / 2) sigma_z (the |1bar> state raised by delta) for the
/// planned time: U = exp(-i H tau / hbar) = exp(i phi sigma_z).
braid::LogicalGate simulate_phase_gate(const PhaseGatePlan &plan, double hbar = 1.0);

struct ReadoutParams {
    double omega0 = 1.0;
    double g_jc = 0.0;
    double depsilon = 0.0;
    double delta = 0.0;
    int sigma_z = 1;
    double hbar = 1.0;

    void validate() const;
    /// Transmon splitting for the current logical state, depsilon + delta sigma_z.
    double transmon_splitting() const { return depsilon + delta * sigma_z; }
    /// omega0 - transmon_splitting / hbar.
    double detuning() const { return omega0 - transmon_splitting() / hbar; }
    /// |g / detuning| < 0.1.
    bool dispersive_regime() const;
};

/// Cavity resonance with the transmon in its ground state,
///   omega_res = omega0 + g^2 / (omega0 - depsilon_sigma / hbar).
/// Throws DomainError at the pole omega0 = depsilon_sigma / hbar.
double dispersive_shift(const ReadoutParams &r);

struct ReadoutContrast {
    double omega_plus;   // sigma_z = +1
    double omega_minus;  // sigma_z = -1
    double difference() const { return omega_plus - omega_minus; }
};

ReadoutContrast readout_contrast(ReadoutParams r);

struct JcSpectrum {
    /// Dressed levels of the blocks {|g, n+1>, |e, n>}, n = 0..cutoff-1, plus
    /// the uncoupled ground state |g, 0>; ascending.
    std::vector<double> levels;
    double ground_energy;
    /// Exact splitting of each excitation block.
    std::vector<double> block_splittings;
    /// Transition |g,0> -> cavity-like dressed state of the first block.
    double cavity_frequency;
    /// Transition |g,0> -> transmon-like dressed state of the first block.
    double qubit_frequency;
    /// Set when photon_cutoff < 5.
    bool cutoff_warning;
};

/// Exact Jaynes-Cummings spectrum
///   H / hbar = omega0 a^dag a + (depsilon_sigma / 2 hbar) sigma_z + g (a^dag sigma^- + a sigma^+)
/// by diagonalising each conserved-excitation 2 x 2 block.
JcSpectrum jc_oracle(const ReadoutParams &r, int photon_cutoff);

}  // namespace majlab::hybrid
