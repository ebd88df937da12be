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

#include "majlab/many_body.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "majlab/bdg_spectrum.hpp"
#include "majlab/errors.hpp"
#include "majlab/fock.hpp"

namespace majlab::bdg {

RVector many_body_spectrum(const KitaevChainParams &p) {
    p.validate();
    if (p.n_sites > kMaxManyBodySites) {
        throw ResourceError("many-body oracle limited to " + std::to_string(kMaxManyBodySites) + " sites");
    }
    const algebra::FockSpace space(p.n_sites);
    std::vector<CMatrix> c;
    for (int k = 1; k <= p.n_sites; ++k) c.push_back(space.annihilation(k));

    const Eigen::Index d = space.dim();
    CMatrix h = CMatrix::Zero(d, d);
    const auto bond = [&](std::size_t i, std::size_t j) {
        h += -p.t * (c[i].adjoint() * c[j] + c[j].adjoint() * c[i]);
        h += p.delta * (c[i] * c[j] + c[j].adjoint() * c[i].adjoint());
    };
    const auto n = static_cast<std::size_t>(p.n_sites);
    for (std::size_t j = 0; j < n; ++j) {
        h += -p.mu * (c[j].adjoint() * c[j]);
        if (j + 1 < n) bond(j, j + 1);
    }
    if (p.boundary == Boundary::periodic && n > 2) bond(n - 1, 0);

    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

RVector levels_from_bdg(const KitaevChainParams &p) {
    if (p.boundary == Boundary::periodic && p.n_sites <= 2) {
        throw PreconditionError("periodic many-body comparison needs n_sites > 2");
    }
    const BdGMatrix h = build_kitaev_bdg(p);
    const RVector e = eigenvalues(h);
    const int n = p.n_sites;
    // Upper half of the sorted spectrum: the n non-negative quasiparticle energies.
    const RVector positive = e.tail(n);

    double trace_particle = 0.0;
    for (int s = 0; s < n; ++s) trace_particle += h.matrix(h.layout.particle(s, 0), h.layout.particle(s, 0)).real();
    const double ground = 0.5 * (trace_particle - positive.sum());

    const Eigen::Index count = Eigen::Index{1} << n;
    RVector levels(count);
    for (Eigen::Index mask = 0; mask < count; ++mask) {
        double e_mask = ground;
        for (int q = 0; q < n; ++q) {
            if ((mask >> q) & 1) e_mask += positive(q);
        }
        levels(mask) = e_mask;
    }
    std::sort(levels.data(), levels.data() + levels.size());
    return levels;
}

ManyBodyComparison many_body_oracle(const KitaevChainParams &p) {
    ManyBodyComparison out;
    out.many_body_levels = many_body_spectrum(p);
    out.reconstructed_levels = levels_from_bdg(p);
    out.max_level_mismatch = (out.many_body_levels - out.reconstructed_levels).cwiseAbs().maxCoeff();
    const RVector gaps_mb = out.many_body_levels.array() - out.many_body_levels(0);
    const RVector gaps_bdg = out.reconstructed_levels.array() - out.reconstructed_levels(0);
    out.max_gap_mismatch = (gaps_mb - gaps_bdg).cwiseAbs().maxCoeff();
    return out;
}

}  // namespace majlab::bdg
