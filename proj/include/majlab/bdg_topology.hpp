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

#include "majlab/bdg_models.hpp"

namespace majlab::bdg {

enum class Charge { trivial = 0, topological = 1, critical = 2 };
enum class ChargeMethod { analytic, numeric };

const char *to_string(Charge q);

/// Z2 charge of the continuum p-wave wire: 1 for mu > 0, 0 for mu < 0.
Charge continuum_kitaev_charge(double mu);

/// Lattice Kitaev chain. Analytic: topological iff |mu| < 2t and Delta != 0.
/// Numeric: sign of Pf A(0) Pf A(pi) of the Majorana-basis Bloch matrices.
Charge topological_charge(const KitaevChainParams &p, ChargeMethod method);

/// Nanowire. Analytic: topological iff |mu| < mu_c. Numeric as above.
Charge topological_charge(const NanowireParams &p, ChargeMethod method);

/// mu_c = sqrt(E_Z^2 - Delta^2) for E_Z > Delta, else 0.
double critical_chemical_potential(double e_zeeman, double delta);

/// |sqrt(mu^2 + Delta^2) - E_Z|, the k = 0 gap of the nanowire.
double nanowire_k0_gap(double mu, double delta, double e_zeeman);

/// Pfaffian of a real antisymmetric matrix by expansion along the first row.
/// Intended for the small (<= 8 x 8) blocks used here.
double pfaffian(const Eigen::MatrixXd &a);

/// Real antisymmetric A with H = (i/4) gamma^T A gamma, from a Nambu block
/// h satisfying tau^x conj(h) tau^x = -h (true at k = 0 and k = pi).
Eigen::MatrixXd majorana_form(const CMatrix &nambu_block, int orbitals);

/// Pf A(0) * Pf A(pi).
double pfaffian_product(const LatticeCell &cell);

/// Minimum |E| over the Bloch bands at k_j = 2 pi j / k_grid_size.
/// Requires periodic boundary and k_grid_size >= 64.
double bulk_gap(const KitaevChainParams &p, int k_grid_size);
double bulk_gap(const NanowireParams &p, int k_grid_size);
double bulk_gap(const LatticeCell &cell, int k_grid_size);

struct EffectiveParams {
    double mu_eff;
    /// p-wave amplitude density (energy x length).
    double delta_eff;
    /// E_Z exceeds both Delta and m alpha^2 / hbar^2.
    bool perturbative;
};

/// mu_eff = mu + E_Z, Delta_eff = Delta alpha / (2 hbar E_Z).
/// Throws DomainError for E_Z = 0.
EffectiveParams effective_params(const NanowireParams &p);

/// Number of eigenvalues below sigma of the open chain built from `cell`,
/// by block LDL^T inertia (Sylvester / Haynsworth) in O(n) time.
int count_eigenvalues_below(const LatticeCell &cell, int n_sites, double sigma);

/// Number of eigenvalues in the open interval (lo, hi).
int count_eigenvalues_in(const LatticeCell &cell, int n_sites, double lo, double hi);

/// Largest mu in [0, mu_max] for which the open wire still has states with
/// |E| < threshold, by bisection. `base.mu` is ignored. Throws
/// PreconditionError if the bracket does not contain the transition.
double zero_mode_onset(const NanowireParams &base, double threshold, double mu_max, int iterations = 50);

}  // namespace majlab::bdg
