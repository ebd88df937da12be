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

// Braiding of Majorana zero modes.
//
// Strand j carries gamma_j. The generator B_k exchanges strands k and k+1 and
// acts (Heisenberg picture, U^dag gamma U) as
//   gamma_k -> gamma_{k+1},  gamma_{k+1} -> -gamma_k,
// realised by U_k = (1 + gamma_k gamma_{k+1}) / sqrt(2). B_k^{-1} reverses both
// signs. Letters of a word act left to right in time: "B1 B2" means B1 first.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "majlab/fock.hpp"

namespace majlab::braid {

using Gate2 = Eigen::Matrix2cd;

struct BraidLetter {
    int generator;  // k in [1, n_strands - 1]
    int exponent;   // +1 or -1
    friend bool operator==(const BraidLetter &, const BraidLetter &) = default;
};

class BraidWord {
  public:
    /// Throws RangeError for n_strands < 2, out-of-range generators or exponents.
    BraidWord(int n_strands, std::vector<BraidLetter> letters = {});

    int n_strands() const { return n_strands_; }
    const std::vector<BraidLetter> &letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }

    /// w^{-1}: reversed letters with flipped exponents.
    BraidWord inverse() const;
    /// This word followed in time by `later`.
    BraidWord then(const BraidWord &later) const;
    /// Canonical DSL text, e.g. "B1 B2^-1".
    std::string to_string() const;

    friend bool operator==(const BraidWord &, const BraidWord &) = default;

  private:
    int n_strands_;
    std::vector<BraidLetter> letters_;
};

/// Grammar: word := token*; token := "B" digits suffix?; suffix := "'" | "^-1";
/// tokens separated by whitespace. Throws ParseError for malformed tokens and
/// RangeError for generator indices outside [1, n_strands - 1].
BraidWord parse_braid_word(std::string_view text, int n_strands);

/// gamma_j -> sign_j gamma_{target_j} on labels 1..n.
class SignedPermutation {
  public:
    static SignedPermutation identity(int n);
    /// Action of B_k^{exponent}.
    static SignedPermutation generator(int k, int exponent, int n);

    int size() const { return static_cast<int>(targets_.size()); }
    /// (target label, sign) for label j (1-based).
    std::pair<int, int> image(int j) const;
    /// Orthogonal matrix with row j the image of gamma_j.
    Eigen::MatrixXd matrix() const;
    /// Determinant of matrix(), computed combinatorially (+-1).
    int determinant() const;
    bool is_identity() const;

    friend bool operator==(const SignedPermutation &, const SignedPermutation &) = default;

  private:
    std::vector<int> targets_;  // 1-based labels
    std::vector<int> signs_;
    friend SignedPermutation compose(const SignedPermutation &f, const SignedPermutation &g);
};

/// (f o g)(gamma) = f(g(gamma)).
SignedPermutation compose(const SignedPermutation &f, const SignedPermutation &g);

/// Heisenberg action gamma -> U_w^dag gamma U_w of the word.
SignedPermutation word_action(const BraidWord &w);

/// U_w = U_last ... U_first on the 2^{n_modes} Fock space.
/// Requires 2 n_modes >= n_strands.
Eigen::MatrixXcd word_unitary(const BraidWord &w, int n_modes);
Eigen::MatrixXcd word_unitary(const BraidWord &w, const algebra::FockSpace &space);

enum class Representation { signed_perm, fock };

struct RelationCheck {
    std::string relation;
    double residual;
    bool passed;
};

struct BraidRelationReport {
    int n_strands;
    Representation representation;
    std::vector<RelationCheck> checks;
    bool all_passed() const;
};

/// Far commutation for |k - l| >= 2 and Yang-Baxter for adjacent pairs.
/// Signed permutations are compared exactly; Fock unitaries modulo global
/// phase with tolerance `tol`.
BraidRelationReport verify_braid_relations(int n_strands, Representation rep, double tol = 1e-12);

/// Four Majoranas gamma_1..gamma_4 on two Dirac modes, even parity sector,
/// |0bar> = |00>, |1bar> = |11>.
struct QubitEncoding {
    algebra::FockSpace space{2};
    Eigen::Index zero_state = 0;  // |00>
    Eigen::Index one_state = 3;   // |11>

    /// Restriction of a 4 x 4 Fock operator to the logical basis.
    Gate2 restrict(const Eigen::MatrixXcd &op) const;
    /// -i gamma_1 gamma_2 (equal to -i gamma_3 gamma_4 on the sector).
    Eigen::MatrixXcd sigma_z_bar() const;
    /// -i gamma_2 gamma_3 (equal to -i gamma_1 gamma_4 on the sector).
    Eigen::MatrixXcd sigma_x_bar() const;
};

struct LogicalGate {
    Gate2 matrix;
    double unitarity_residual() const;
};

/// exp(i theta sigma), sigma one of the Pauli matrices.
Gate2 pauli_x();
Gate2 pauli_y();
Gate2 pauli_z();
Gate2 exp_i_pauli(double theta, const Gate2 &pauli);

/// Restricts word_unitary to the logical qubit. The word must live on 4
/// strands. Throws ConsistencyError if the unitary leaks out of the sector.
LogicalGate logical_gate_from_word(const BraidWord &w, const QubitEncoding &enc = {});

struct ClosureResult {
    std::vector<Gate2> elements;  // phase-canonical representatives
    bool closed;
};

/// Breadth-first closure of the group generated by `generators`, modulo
/// global phase, starting from the identity. Stops with closed = false when
/// more than max_elements elements are found. Requires max_elements >= 24.
ClosureResult clifford_closure(const std::vector<Gate2> &generators, std::size_t max_elements = 1024);

/// Whether `g` equals some element of `set` modulo phase.
bool contains_mod_phase(const ClosureResult &set, const Gate2 &g, double tol = 1e-9);

}  // namespace majlab::braid
