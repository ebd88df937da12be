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

#include "majlab/bdg_topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>
#include <numbers>

#include "majlab/errors.hpp"

namespace majlab::bdg {

namespace {

constexpr double kCriticalTol = 1e-12;

Charge from_pfaffians(double pf0, double pfpi, double scale0, double scalepi) {
    if (std::abs(pf0) <= 1e-10 * scale0 || std::abs(pfpi) <= 1e-10 * scalepi) return Charge::critical;
    return (pf0 * pfpi < 0.0) ? Charge::topological : Charge::trivial;
}

Charge numeric_charge(const LatticeCell &cell) {
    const Eigen::MatrixXd a0 = majorana_form(bloch_hamiltonian(cell, 0.0), cell.orbitals);
    const Eigen::MatrixXd api = majorana_form(bloch_hamiltonian(cell, std::numbers::pi), cell.orbitals);
    const auto half = static_cast<double>(a0.rows() / 2);
    const double s0 = std::pow(std::max(a0.cwiseAbs().maxCoeff(), 1e-300), half);
    const double spi = std::pow(std::max(api.cwiseAbs().maxCoeff(), 1e-300), half);
    return from_pfaffians(pfaffian(a0), pfaffian(api), s0, spi);
}

double pfaffian_impl(const Eigen::MatrixXd &a, std::vector<int> &rows) {
    if (rows.empty()) return 1.0;
    const int first = rows.front();
    double sum = 0.0;
    // Pf(A) = sum_j (-1)^{j} a_{0 j} Pf(A without rows/cols 0, j), j over remaining positions.
    for (std::size_t j = 1; j < rows.size(); ++j) {
        const double entry = a(first, rows[j]);
        if (entry == 0.0) continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 2);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            if (r != j) rest.push_back(rows[r]);
        }
        const double sign = (j % 2 == 1) ? 1.0 : -1.0;
        sum += sign * entry * pfaffian_impl(a, rest);
    }
    return sum;
}

}  // namespace

const char *to_string(Charge q) {
    switch (q) {
        case Charge::trivial:
            return "0";
        case Charge::topological:
            return "1";
        case Charge::critical:
            return "critical";
    }
    return "?";
}

Charge continuum_kitaev_charge(double mu) {
    if (mu > 0.0) return Charge::topological;
    if (mu < 0.0) return Charge::trivial;
    return Charge::critical;
}

Charge topological_charge(const KitaevChainParams &p, ChargeMethod method) {
    p.validate();
    if (method == ChargeMethod::numeric) return numeric_charge(kitaev_cell(p));
    const double d = std::abs(p.mu) - 2.0 * p.t;
    if (std::abs(d) <= kCriticalTol * p.t) return Charge::critical;
    if (d > 0.0) return Charge::trivial;
    return p.delta == 0.0 ? Charge::critical : Charge::topological;
}

Charge topological_charge(const NanowireParams &p, ChargeMethod method) {
    p.validate();
    if (method == ChargeMethod::numeric) return numeric_charge(nanowire_cell(p));
    if (p.delta == 0.0) return Charge::critical;
    // |mu| < mu_c  <=>  mu^2 + Delta^2 < E_Z^2.
    const double lhs = p.mu * p.mu + p.delta * p.delta;
    const double rhs = p.e_zeeman * p.e_zeeman;
    if (std::abs(lhs - rhs) <= kCriticalTol * std::max(lhs, rhs)) return Charge::critical;
    return lhs < rhs ? Charge::topological : Charge::trivial;
}

double critical_chemical_potential(double e_zeeman, double delta) {
    return e_zeeman > delta ? std::sqrt(e_zeeman * e_zeeman - delta * delta) : 0.0;
}

double nanowire_k0_gap(double mu, double delta, double e_zeeman) {
    return std::abs(std::hypot(mu, delta) - e_zeeman);
}

double pfaffian(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) throw PreconditionError("Pfaffian needs a square matrix");
    if (a.rows() % 2 != 0) return 0.0;
    if (a.rows() > 12) throw ResourceError("combinatorial Pfaffian limited to 12 x 12");
    std::vector<int> rows(static_cast<std::size_t>(a.rows()));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = static_cast<int>(i);
    return pfaffian_impl(a, rows);
}

Eigen::MatrixXd majorana_form(const CMatrix &h, int orbitals) {
    const Eigen::Index m = orbitals;
    if (h.rows() != 2 * m || h.cols() != 2 * m) throw PreconditionError("Nambu block has the wrong size");
    const cplx i{0, 1};
    // gamma_{2o-1} = c_o + c_o^dag, gamma_{2o} = i (c_o^dag - c_o).
    CMatrix omega = CMatrix::Zero(2 * m, 2 * m);
    for (Eigen::Index o = 0; o < m; ++o) {
        omega(2 * o, o) = 1.0;
        omega(2 * o, m + o) = 1.0;
        omega(2 * o + 1, o) = -i;
        omega(2 * o + 1, m + o) = i;
    }
    const CMatrix a = -0.5 * i * omega * h * omega.adjoint();
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if (a.imag().cwiseAbs().maxCoeff() > 1e-10 * scale) {
        throw ConsistencyError("Nambu block is not particle-hole symmetric: Majorana form is not real");
    }
    Eigen::MatrixXd real = a.real();
    return 0.5 * (real - real.transpose());
}

double pfaffian_product(const LatticeCell &cell) {
    return pfaffian(majorana_form(bloch_hamiltonian(cell, 0.0), cell.orbitals)) *
           pfaffian(majorana_form(bloch_hamiltonian(cell, std::numbers::pi), cell.orbitals));
}

double bulk_gap(const LatticeCell &cell, int k_grid_size) {
    if (k_grid_size < 64) throw PreconditionError("bulk gap needs k_grid_size >= 64");
    double gap = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k_grid_size; ++j) {
        const double k = 2.0 * std::numbers::pi * j / k_grid_size;
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(bloch_hamiltonian(cell, k), Eigen::EigenvaluesOnly);
        gap = std::min(gap, solver.eigenvalues().cwiseAbs().minCoeff());
    }
    return gap;
}

double bulk_gap(const KitaevChainParams &p, int k_grid_size) {
    if (p.boundary != Boundary::periodic) throw PreconditionError("bulk gap needs periodic boundary");
    return bulk_gap(kitaev_cell(p), k_grid_size);
}

double bulk_gap(const NanowireParams &p, int k_grid_size) {
    if (p.boundary != Boundary::periodic) throw PreconditionError("bulk gap needs periodic boundary");
    return bulk_gap(nanowire_cell(p), k_grid_size);
}

EffectiveParams effective_params(const NanowireParams &p) {
    p.validate();
    if (p.e_zeeman == 0.0) throw DomainError("effective p-wave parameters need E_Z > 0");
    const double so_energy = p.mass * p.alpha_so * p.alpha_so / (p.hbar * p.hbar);
    return {p.mu + p.e_zeeman, p.delta * p.alpha_so / (2.0 * p.hbar * p.e_zeeman),
            p.e_zeeman > p.delta && p.e_zeeman > so_energy};
}

int count_eigenvalues_below(const LatticeCell &cell, int n_sites, double sigma) {
    if (n_sites < 1) throw RangeError("need at least one site");
    const Eigen::Index b = 2 * cell.orbitals;
    const CMatrix shifted = cell.onsite - sigma * CMatrix::Identity(b, b);
    const double scale = std::max({1.0, cell.onsite.cwiseAbs().maxCoeff(), cell.hop.cwiseAbs().maxCoeff(),
                                   std::abs(sigma)});
    const double pivmin = 1e-14 * scale;

    int negatives = 0;
    CMatrix schur = shifted;
    for (int j = 0; j < n_sites; ++j) {
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (schur + schur.adjoint()));
        Eigen::VectorXd lambda = eig.eigenvalues();
        for (Eigen::Index r = 0; r < lambda.size(); ++r) {
            if (std::abs(lambda(r)) < pivmin) lambda(r) = -pivmin;
            if (lambda(r) < 0.0) ++negatives;
        }
        if (j + 1 == n_sites) break;
        const CMatrix inv =
            eig.eigenvectors() * lambda.cwiseInverse().asDiagonal() * eig.eigenvectors().adjoint();
        schur = shifted - cell.hop.adjoint() * inv * cell.hop;
    }
    return negatives;
}

int count_eigenvalues_in(const LatticeCell &cell, int n_sites, double lo, double hi) {
    if (!(hi > lo)) return 0;
    return count_eigenvalues_below(cell, n_sites, hi) - count_eigenvalues_below(cell, n_sites, lo);
}

double zero_mode_onset(const NanowireParams &base, double threshold, double mu_max, int iterations) {
    auto has_zero_modes = [&](double mu) {
        NanowireParams p = base;
        p.mu = mu;
        p.boundary = Boundary::open;
        return count_eigenvalues_in(nanowire_cell(p), p.n_sites, -threshold, threshold) > 0;
    };
    if (!has_zero_modes(0.0)) throw PreconditionError("no zero modes at mu = 0: wire is not topological");
    if (has_zero_modes(mu_max)) throw PreconditionError("zero modes persist up to mu_max: bracket too small");
    double lo = 0.0;
    double hi = mu_max;
    for (int it = 0; it < iterations; ++it) {
        const double mid = 0.5 * (lo + hi);
        (has_zero_modes(mid) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace majlab::bdg
