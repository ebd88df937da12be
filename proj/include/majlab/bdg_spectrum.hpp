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

#include <array>
#include <vector>

#include "majlab/bdg_models.hpp"

namespace majlab::bdg {

struct Spectrum {
    RVector eigenvalues;   // ascending
    CMatrix eigenvectors;  // columns, in `layout`
    NambuLayout layout;
    /// max_n |E_n + E_{-n}| over the sorted spectrum.
    double phs_pairing_residual = 0.0;
};

/// Full dense Hermitian eigendecomposition. Throws PreconditionError when the
/// input is not Hermitian to 1e-12 (relative to its largest entry).
Spectrum diagonalize(const BdGMatrix &h);

/// Eigenvalues only, ascending.
RVector eigenvalues(const BdGMatrix &h);

double phs_pairing_residual(const RVector &sorted_eigenvalues);

struct ZeroModeReport {
    int count = 0;
    std::vector<double> energies;
    /// Zero-energy subspace rotated to Majorana modes (C w = w), ordered by
    /// decreasing weight on the left half of the chain.
    std::vector<CVector> majorana_modes;
    /// ||C v - v|| per Majorana mode after the optimal global phase.
    std::vector<double> majorana_residuals;
    /// Probability in the [left, right] half of the chain per Majorana mode.
    std::vector<std::array<double, 2>> edge_weights;
    /// Decay length (in lattice spacings) from a log-linear fit of the
    /// probability envelope, averaged over the modes. Zero when count == 0.
    double decay_length_fit = 0.0;
    /// Odd number of states inside the window: the pair could not be resolved.
    bool unresolved_degeneracy = false;
};

/// Default threshold for zero-mode detection: 1e-6 times the pairing scale.
inline double default_zero_mode_threshold(double pairing) { return 1e-6 * pairing; }

ZeroModeReport find_zero_modes(const Spectrum &s, double threshold);

/// Decay length of the tail sum T(j) = sum_{i >= j} p_i of a site probability
/// profile, where p decays away from site 0. Returns 0 when no fit is possible.
double fit_decay_length(const std::vector<double> &site_probability);

/// Site probability (summed over orbitals and Nambu components).
std::vector<double> site_probability(const CVector &v, const NambuLayout &layout);

/// Continuum p-wave dispersion sqrt(xi(p)^2 + Delta^2 (p/p_F)^2) with
/// xi(p) = p^2/2m - mu and p_F = sqrt(2 m |mu|). For mu <= 0 the pairing uses
/// p lambda_F / hbar, lambda_F = hbar / sqrt(2 m |mu|); mu = 0 with Delta != 0
/// is the critical point and throws DomainError.
double continuum_dispersion(double p, double mu, double delta, double mass);

/// sqrt(2/xi) sin(k_F z) exp(-z/xi).
double analytic_zero_mode_envelope(double z, double xi, double k_f);

/// Lattice Fermi wavevector (units 1/a) of the Kitaev chain, -2t cos(k_F) = mu.
/// Throws PreconditionError outside the band.
double kitaev_fermi_wavevector(const KitaevChainParams &p);

/// hbar v_F / Delta_F in lattice spacings, with v_F and the gap Delta_F taken
/// at the lattice Fermi point.
double kitaev_coherence_length(const KitaevChainParams &p);

}  // namespace majlab::bdg
