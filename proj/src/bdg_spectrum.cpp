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

#include "majlab/bdg_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>

#include "majlab/errors.hpp"

namespace majlab::bdg {

namespace {

bool is_real(const CMatrix &m) { return m.imag().cwiseAbs().maxCoeff() == 0.0; }

void require_hermitian(const BdGMatrix &h) {
    if (h.matrix.rows() != h.matrix.cols() || h.matrix.rows() != h.layout.dim()) {
        throw PreconditionError("BdG matrix shape does not match its layout");
    }
    if (h.matrix.size() == 0) return;
    const double scale = std::max(1.0, h.matrix.cwiseAbs().maxCoeff());
    if (h.hermiticity_residual() > 1e-12 * scale) {
        throw PreconditionError("diagonalize: input matrix is not Hermitian");
    }
}

// C-invariant vectors w (w_hole = conj(w_particle)) <-> real vectors, per
// (site, orbital): [sqrt2 Re w_p, sqrt2 Im w_p]. The map is norm preserving.
Eigen::VectorXd realify(const CVector &w, const NambuLayout &layout) {
    Eigen::VectorXd x(layout.dim());
    Eigen::Index r = 0;
    for (int s = 0; s < layout.n_sites; ++s) {
        for (int o = 0; o < layout.orbitals; ++o) {
            const cplx wp = w(layout.particle(s, o));
            x(r++) = std::numbers::sqrt2 * wp.real();
            x(r++) = std::numbers::sqrt2 * wp.imag();
        }
    }
    return x;
}

CVector complexify(const Eigen::VectorXd &x, const NambuLayout &layout) {
    CVector w(layout.dim());
    Eigen::Index r = 0;
    for (int s = 0; s < layout.n_sites; ++s) {
        for (int o = 0; o < layout.orbitals; ++o) {
            const cplx wp = cplx{x(r), x(r + 1)} / std::numbers::sqrt2;
            r += 2;
            w(layout.particle(s, o)) = wp;
            w(layout.hole(s, o)) = std::conj(wp);
        }
    }
    return w;
}

double gauge_fixed_residual(const CVector &w, const NambuLayout &layout) {
    const CVector cw = layout.apply_phs(w);
    const cplx overlap = w.dot(cw);
    // C(e^{i theta} w) = e^{-i theta} C w; choose e^{2 i theta} = arg <w|Cw>.
    const cplx phase = std::polar(1.0, 0.5 * std::arg(overlap));
    const CVector v = phase * w;
    return (layout.apply_phs(v) - v).norm();
}

}  // namespace

double phs_pairing_residual(const RVector &e) {
    double r = 0.0;
    const Eigen::Index n = e.size();
    for (Eigen::Index i = 0; i < n; ++i) r = std::max(r, std::abs(e(i) + e(n - 1 - i)));
    return r;
}

Spectrum diagonalize(const BdGMatrix &h) {
    require_hermitian(h);
    Spectrum s;
    s.layout = h.layout;
    if (is_real(h.matrix)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix.real());
        if (solver.info() != Eigen::Success) throw ConsistencyError("eigensolver failed to converge");
        s.eigenvalues = solver.eigenvalues();
        s.eigenvectors = solver.eigenvectors().cast<cplx>();
    } else {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix);
        if (solver.info() != Eigen::Success) throw ConsistencyError("eigensolver failed to converge");
        s.eigenvalues = solver.eigenvalues();
        s.eigenvectors = solver.eigenvectors();
    }
    s.phs_pairing_residual = phs_pairing_residual(s.eigenvalues);
    return s;
}

RVector eigenvalues(const BdGMatrix &h) {
    require_hermitian(h);
    if (is_real(h.matrix)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.matrix.real(), Eigen::EigenvaluesOnly);
        return solver.eigenvalues();
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

std::vector<double> site_probability(const CVector &v, const NambuLayout &layout) {
    std::vector<double> p(static_cast<std::size_t>(layout.n_sites), 0.0);
    for (int s = 0; s < layout.n_sites; ++s) {
        for (int o = 0; o < layout.orbitals; ++o) {
            p[static_cast<std::size_t>(s)] += std::norm(v(layout.particle(s, o))) + std::norm(v(layout.hole(s, o)));
        }
    }
    return p;
}

double fit_decay_length(const std::vector<double> &p) {
    const std::size_t n = p.size();
    if (n < 4) return 0.0;
    std::vector<double> tail(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;) tail[j] = tail[j + 1] + p[j];
    const double total = tail[0];
    if (!(total > 0.0)) return 0.0;

    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t j = 0; j <= n / 2; ++j) {
        const double rel = tail[j] / total;
        if (rel <= 0.5 && rel >= 1e-12) {
            xs.push_back(static_cast<double>(j));
            ys.push_back(std::log(rel));
        }
    }
    if (xs.size() < 3) return 0.0;
    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    if (!(slope < 0.0)) return 0.0;
    // Probability decays as exp(-2 z / xi).
    return -2.0 / slope;
}

ZeroModeReport find_zero_modes(const Spectrum &s, double threshold) {
    ZeroModeReport report;
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
        if (std::abs(s.eigenvalues(i)) < threshold) idx.push_back(i);
    }
    report.count = static_cast<int>(idx.size());
    if (idx.empty()) return report;
    report.unresolved_degeneracy = idx.size() % 2 != 0;

    const NambuLayout &layout = s.layout;
    const Eigen::Index dim = layout.dim();
    const auto count = static_cast<Eigen::Index>(idx.size());
    CMatrix zero_space(dim, count);
    for (Eigen::Index c = 0; c < count; ++c) {
        zero_space.col(c) = s.eigenvectors.col(idx[static_cast<std::size_t>(c)]);
        report.energies.push_back(s.eigenvalues(idx[static_cast<std::size_t>(c)]));
    }

    // Candidate self-conjugate vectors v + Cv and i(v - Cv), in real coordinates.
    Eigen::MatrixXd candidates(dim, 2 * count);
    for (Eigen::Index c = 0; c < count; ++c) {
        const CVector v = zero_space.col(c);
        const CVector cv = layout.apply_phs(v);
        candidates.col(2 * c) = realify(v + cv, layout);
        candidates.col(2 * c + 1) = realify(cplx{0, 1} * (v - cv), layout);
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(candidates, Eigen::ComputeThinU);
    Eigen::MatrixXd basis = svd.matrixU().leftCols(count);

    // Rotate within the real span to diagonalise the left-half weight.
    const Eigen::Index left_rows = Eigen::Index{2} * layout.orbitals * (layout.n_sites / 2);
    const Eigen::MatrixXd left = basis.topRows(left_rows);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> loc(left.transpose() * left);
    const Eigen::MatrixXd rotated = basis * loc.eigenvectors().rowwise().reverse();

    double decay_sum = 0.0;
    int decay_terms = 0;
    for (Eigen::Index c = 0; c < count; ++c) {
        CVector w = complexify(rotated.col(c), layout);
        // Project back onto the zero-energy subspace before measuring Majorana-ness.
        w = zero_space * (zero_space.adjoint() * w);
        const double norm = w.norm();
        if (norm > 0.0) w /= norm;
        report.majorana_residuals.push_back(gauge_fixed_residual(w, layout));

        auto prob = site_probability(w, layout);
        double lw = 0.0;
        double rw = 0.0;
        for (int site = 0; site < layout.n_sites; ++site) {
            const double v = prob[static_cast<std::size_t>(site)];
            if (site < layout.n_sites / 2) {
                lw += v;
            } else if (layout.n_sites % 2 == 1 && site == layout.n_sites / 2) {
                lw += 0.5 * v;
                rw += 0.5 * v;
            } else {
                rw += v;
            }
        }
        report.edge_weights.push_back({lw, rw});
        if (rw > lw) std::reverse(prob.begin(), prob.end());
        const double xi = fit_decay_length(prob);
        if (xi > 0.0) {
            decay_sum += xi;
            ++decay_terms;
        }
        report.majorana_modes.push_back(std::move(w));
    }
    report.decay_length_fit = decay_terms > 0 ? decay_sum / decay_terms : 0.0;
    return report;
}

double continuum_dispersion(double p, double mu, double delta, double mass) {
    if (!(mass > 0.0)) throw RangeError("continuum dispersion needs mass > 0");
    const double xi = p * p / (2.0 * mass) - mu;
    if (delta == 0.0) return std::abs(xi);
    if (mu == 0.0) throw DomainError("p_F undefined at mu = 0 with finite pairing (critical point)");
    const double p_f = std::sqrt(2.0 * mass * std::abs(mu));
    const double pairing = delta * p / p_f;
    return std::sqrt(xi * xi + pairing * pairing);
}

double analytic_zero_mode_envelope(double z, double xi, double k_f) {
    if (!(xi > 0.0)) throw RangeError("coherence length must be positive");
    return std::sqrt(2.0 / xi) * std::sin(k_f * z) * std::exp(-z / xi);
}

double kitaev_fermi_wavevector(const KitaevChainParams &p) {
    p.validate();
    const double c = -p.mu / (2.0 * p.t);
    if (std::abs(c) >= 1.0) throw PreconditionError("chemical potential outside the band: no Fermi point");
    return std::acos(c);
}

double kitaev_coherence_length(const KitaevChainParams &p) {
    const double k_f = kitaev_fermi_wavevector(p);
    if (p.delta == 0.0) throw DomainError("coherence length diverges at zero pairing");
    // d/dk (-2t cos k) and |2 Delta sin k| at the Fermi point.
    const double v_f = 2.0 * p.t * std::sin(k_f);
    const double gap = 2.0 * std::abs(p.delta) * std::sin(k_f);
    return v_f / gap;
}

}  // namespace majlab::bdg
