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

// Bogoliubov-de Gennes matrices for nearest-neighbour lattice models.
//
// Nambu layout (site-major): site j owns the contiguous block
//   [c_{j,1} .. c_{j,m}, c_{j,1}^dag .. c_{j,m}^dag]
// of size 2m, m being the number of orbitals per site (1 for the Kitaev chain,
// 2 spin states for the nanowire). The particle-hole operator is C = tau^x K:
// swap the particle and hole halves of every site block, then complex conjugate.
// H = 1/2 Psi^dag h Psi + 1/2 Tr(h_particle).

#include <string>

#include <Eigen/Dense>

namespace majlab::bdg {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class Boundary { open, periodic };

/// Spinless p-wave chain. `mu` is the lattice chemical potential: onsite
/// energy -mu, band -2t cos(k a) - mu, so the band bottom sits at mu = -2t.
/// The continuum chemical potential measured from the band bottom is mu + 2t.
/// A single site (n_sites = 1) is admitted for the many-body oracle.
struct KitaevChainParams {
    int n_sites = 2;
    double t = 1.0;
    double mu = 0.0;
    double delta = 0.0;
    Boundary boundary = Boundary::open;

    void validate() const;
    /// mu measured from the band bottom, i.e. the continuum chemical potential.
    double continuum_mu() const { return mu + 2.0 * t; }
};

/// Single-channel Rashba nanowire with proximity s-wave pairing and Zeeman
/// field along the wire. Discretised with t = hbar^2 / (2 m a^2) and onsite
/// 2t - mu, which makes xi(k = 0) = -mu exact on the lattice.
struct NanowireParams {
    int n_sites = 2;
    double lattice_spacing = 1.0;
    double mass = 0.25;
    double mu = 0.0;
    double alpha_so = 0.0;
    double e_zeeman = 0.0;
    double delta = 0.0;
    Boundary boundary = Boundary::open;
    double hbar = 1.0;

    void validate() const;
    double hopping() const { return hbar * hbar / (2.0 * mass * lattice_spacing * lattice_spacing); }

    /// InSb-like preset in units meV, nm, ps (hbar = 0.6582 meV ps):
    /// m = 0.015 m_e, g = 50, alpha = 0.2 eV A = 20 meV nm, Delta = 1 K = 0.0862 meV.
    /// The Zeeman energy corresponds to B = 0.1 T; mu, a and wire length are choices.
    static NanowireParams insb_preset();
};

struct NambuLayout {
    int n_sites = 0;
    int orbitals = 1;

    Eigen::Index dim() const { return Eigen::Index{2} * n_sites * orbitals; }
    Eigen::Index particle(int site, int orb) const { return Eigen::Index{2} * orbitals * site + orb; }
    Eigen::Index hole(int site, int orb) const { return Eigen::Index{2} * orbitals * site + orbitals + orb; }

    /// C v = U_C conj(v).
    CVector apply_phs(const CVector &v) const;
    /// The unitary (a permutation) U_C.
    CMatrix phs_unitary() const;
    std::string describe() const;
};

/// Translation-invariant nearest-neighbour couplings in the per-site Nambu
/// basis. `hop` is the block h(j, j+1); h(j+1, j) = hop^dag.
struct LatticeCell {
    int orbitals = 1;
    CMatrix onsite;
    CMatrix hop;
};

struct BdGMatrix {
    CMatrix matrix;
    NambuLayout layout;
    Boundary boundary = Boundary::open;

    double hermiticity_residual() const;
    /// max |(h C + C h)_{ij}|, i.e. max |h U_C + U_C conj(h)|.
    double phs_residual() const;
    std::string phs_description() const;
};

LatticeCell kitaev_cell(const KitaevChainParams &p);
LatticeCell nanowire_cell(const NanowireParams &p);

BdGMatrix assemble(const LatticeCell &cell, int n_sites, Boundary boundary);
BdGMatrix build_kitaev_bdg(const KitaevChainParams &p);
BdGMatrix build_nanowire_bdg(const NanowireParams &p);

/// h(k) = onsite + hop e^{ik} + hop^dag e^{-ik}, k in units of 1/a.
CMatrix bloch_hamiltonian(const LatticeCell &cell, double k);

/// (h - C h C^{-1}) / 2: projects an arbitrary Hermitian matrix onto the
/// particle-hole antisymmetric subspace for `layout`.
CMatrix symmetrize_phs(const CMatrix &h, const NambuLayout &layout);

}  // namespace majlab::bdg
