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

inline constexpr int kMaxManyBodySites = 6;

/// All 2^n levels (ascending) of the second-quantized Kitaev chain
///   H = sum_j -mu n_j + sum_j [-t (c_j^dag c_{j+1} + h.c.) + Delta (c_j c_{j+1} + h.c.)]
/// built in the Jordan-Wigner Fock representation and diagonalised exactly.
/// Throws ResourceError for n_sites > kMaxManyBodySites.
RVector many_body_spectrum(const KitaevChainParams &p);

/// All 2^n levels rebuilt from the BdG spectrum: E_0 + sum_{n in S} E_n over
/// subsets S of the positive BdG energies, E_0 = (Tr h_particle - sum E_n) / 2.
RVector levels_from_bdg(const KitaevChainParams &p);

struct ManyBodyComparison {
    RVector many_body_levels;
    RVector reconstructed_levels;
    double max_level_mismatch = 0.0;
    /// Mismatch of excitation gaps E_i - E_0.
    double max_gap_mismatch = 0.0;
};

ManyBodyComparison many_body_oracle(const KitaevChainParams &p);

}  // namespace majlab::bdg
