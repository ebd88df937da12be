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

#include "majlab/bdg_models.hpp"

#include <cmath>
#include <sstream>

#include "majlab/errors.hpp"

namespace majlab::bdg {

void KitaevChainParams::validate() const {
    if (n_sites < 1) throw RangeError("Kitaev chain needs n_sites >= 1");
    if (!(t > 0.0)) throw RangeError("Kitaev chain needs t > 0");
    if (!std::isfinite(mu) || !std::isfinite(delta)) throw RangeError("Kitaev parameters must be finite");
}

void NanowireParams::validate() const {
    if (n_sites < 2) throw RangeError("nanowire needs n_sites >= 2");
    if (!(mass > 0.0)) throw RangeError("nanowire needs mass > 0");
    if (!(lattice_spacing > 0.0)) throw RangeError("nanowire needs lattice_spacing > 0");
    if (delta < 0.0) throw RangeError("nanowire needs delta >= 0");
    if (e_zeeman < 0.0) throw RangeError("nanowire needs e_zeeman >= 0");
    if (!(hbar > 0.0)) throw RangeError("hbar must be positive");
}

NanowireParams NanowireParams::insb_preset() {
    constexpr double kHbar = 0.6582119569;         // meV ps
    constexpr double kElectronMass = 5.6856301e-3;  // meV ps^2 / nm^2
    constexpr double kBohrMagneton = 5.7883818e-2;  // meV / T
    constexpr double kKelvin = 8.617333262e-2;      // meV
    NanowireParams p;
    p.n_sites = 200;
    p.lattice_spacing = 10.0;
    p.mass = 0.015 * kElectronMass;
    p.mu = 0.0;
    p.alpha_so = 20.0;  // 0.2 eV A
    p.e_zeeman = 0.5 * 50.0 * kBohrMagneton * 0.1;
    p.delta = 1.0 * kKelvin;
    p.hbar = kHbar;
    return p;
}

CVector NambuLayout::apply_phs(const CVector &v) const {
    if (v.size() != dim()) throw PreconditionError("vector size does not match the Nambu layout");
    CVector out(v.size());
    for (int s = 0; s < n_sites; ++s) {
        for (int o = 0; o < orbitals; ++o) {
            out(particle(s, o)) = std::conj(v(hole(s, o)));
            out(hole(s, o)) = std::conj(v(particle(s, o)));
        }
    }
    return out;
}

CMatrix NambuLayout::phs_unitary() const {
    CMatrix u = CMatrix::Zero(dim(), dim());
    for (int s = 0; s < n_sites; ++s) {
        for (int o = 0; o < orbitals; ++o) {
            u(particle(s, o), hole(s, o)) = 1.0;
            u(hole(s, o), particle(s, o)) = 1.0;
        }
    }
    return u;
}

std::string NambuLayout::describe() const {
    std::ostringstream os;
    os << "site-major Nambu layout, " << n_sites << " sites x " << orbitals
       << " orbitals; site block [c_1..c_m, c_1^dag..c_m^dag]";
    return os.str();
}

double BdGMatrix::hermiticity_residual() const { return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff(); }

double BdGMatrix::phs_residual() const {
    const CMatrix u = layout.phs_unitary();
    return (matrix * u + u * matrix.conjugate()).cwiseAbs().maxCoeff();
}

std::string BdGMatrix::phs_description() const {
    return "C = tau^x K: swap particle/hole halves of each site block, then complex-conjugate";
}

LatticeCell kitaev_cell(const KitaevChainParams &p) {
    p.validate();
    LatticeCell cell;
    cell.orbitals = 1;
    cell.onsite = CMatrix::Zero(2, 2);
    cell.onsite(0, 0) = -p.mu;
    cell.onsite(1, 1) = p.mu;
    // Pairing Delta (c_j c_{j+1} + c_{j+1}^dag c_j^dag), odd under j <-> j+1.
    cell.hop = CMatrix::Zero(2, 2);
    cell.hop(0, 0) = -p.t;
    cell.hop(0, 1) = -p.delta;
    cell.hop(1, 0) = p.delta;
    cell.hop(1, 1) = p.t;
    return cell;
}

LatticeCell nanowire_cell(const NanowireParams &p) {
    p.validate();
    const double t = p.hopping();
    const double so = p.alpha_so / (2.0 * p.lattice_spacing);
    const cplx i{0, 1};

    // Normal-state blocks, spin order (up, down).
    Eigen::Matrix2cd sigma_y;
    sigma_y << 0.0, -i, i, 0.0;
    Eigen::Matrix2cd sigma_z;
    sigma_z << 1.0, 0.0, 0.0, -1.0;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

    const Eigen::Matrix2cd h0_onsite = (2.0 * t - p.mu) * id - p.e_zeeman * sigma_z;
    // (alpha/hbar) sigma^y p with a central difference: -i alpha/(2a) sigma^y (psi_{j+1} - psi_{j-1}).
    const Eigen::Matrix2cd h0_hop = -t * id - i * so * sigma_y;
    // Delta (psi_dn^dag psi_up^dag + h.c.): antisymmetric pairing block D.
    Eigen::Matrix2cd pairing;
    pairing << 0.0, -p.delta, p.delta, 0.0;

    LatticeCell cell;
    cell.orbitals = 2;
    cell.onsite = CMatrix::Zero(4, 4);
    cell.onsite.block(0, 0, 2, 2) = h0_onsite;
    cell.onsite.block(0, 2, 2, 2) = pairing;
    cell.onsite.block(2, 0, 2, 2) = -pairing.conjugate();
    cell.onsite.block(2, 2, 2, 2) = -h0_onsite.conjugate();
    cell.hop = CMatrix::Zero(4, 4);
    cell.hop.block(0, 0, 2, 2) = h0_hop;
    cell.hop.block(2, 2, 2, 2) = -h0_hop.conjugate();
    return cell;
}

BdGMatrix assemble(const LatticeCell &cell, int n_sites, Boundary boundary) {
    const Eigen::Index b = 2 * cell.orbitals;
    BdGMatrix out;
    out.layout = NambuLayout{n_sites, cell.orbitals};
    out.boundary = boundary;
    out.matrix = CMatrix::Zero(out.layout.dim(), out.layout.dim());
    const CMatrix hop_dag = cell.hop.adjoint();
    for (int j = 0; j < n_sites; ++j) {
        out.matrix.block(b * j, b * j, b, b) = cell.onsite;
        if (j + 1 < n_sites) {
            out.matrix.block(b * j, b * (j + 1), b, b) += cell.hop;
            out.matrix.block(b * (j + 1), b * j, b, b) += hop_dag;
        }
    }
    if (boundary == Boundary::periodic && n_sites > 1) {
        const Eigen::Index last = b * (n_sites - 1);
        out.matrix.block(last, 0, b, b) += cell.hop;
        out.matrix.block(0, last, b, b) += hop_dag;
    }
    return out;
}

BdGMatrix build_kitaev_bdg(const KitaevChainParams &p) { return assemble(kitaev_cell(p), p.n_sites, p.boundary); }

BdGMatrix build_nanowire_bdg(const NanowireParams &p) {
    return assemble(nanowire_cell(p), p.n_sites, p.boundary);
}

CMatrix bloch_hamiltonian(const LatticeCell &cell, double k) {
    const cplx phase = std::polar(1.0, k);
    return cell.onsite + phase * cell.hop + std::conj(phase) * cell.hop.adjoint();
}

CMatrix symmetrize_phs(const CMatrix &h, const NambuLayout &layout) {
    if (h.rows() != layout.dim() || h.cols() != layout.dim()) {
        throw PreconditionError("matrix size does not match the Nambu layout");
    }
    const CMatrix u = layout.phs_unitary();
    return 0.5 * (h - u * h.conjugate() * u.adjoint());
}

}  // namespace majlab::bdg
