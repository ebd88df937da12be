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

#include "doctest.h"

#include <numbers>
#include <random>

#include "majlab/braid.hpp"
#include "majlab/errors.hpp"
#include "majlab/linalg.hpp"
#include "oracles.hpp"

using namespace majlab;
using namespace majlab::braid;

namespace {

// (1 + gamma_k gamma_{k+1}) / sqrt(2) from the reference representation.
oracle::CMat reference_generator(int k, int exponent, int n_modes) {
    const oracle::CMat pair = oracle::majorana(k, n_modes) * oracle::majorana(k + 1, n_modes);
    const oracle::CMat id = oracle::CMat::Identity(pair.rows(), pair.cols());
    return (id + double(exponent) * pair) / std::sqrt(2.0);
}

oracle::CMat reference_word(const BraidWord &w, int n_modes) {
    oracle::CMat u = oracle::CMat::Identity(Eigen::Index{1} << n_modes, Eigen::Index{1} << n_modes);
    for (const auto &l : w.letters()) u = reference_generator(l.generator, l.exponent, n_modes) * u;
    return u;
}

BraidWord random_word(std::mt19937 &rng, int n, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), s(0, 1);
    std::vector<BraidLetter> letters;
    for (int i = len(rng); i > 0; --i) letters.push_back({gen(rng), s(rng) ? 1 : -1});
    return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("parser") {
    CHECK(parse_braid_word("B1 B2", 5).letters() == std::vector<BraidLetter>{{1, 1}, {2, 1}});
    CHECK(parse_braid_word("B4^-1", 5).letters() == std::vector<BraidLetter>{{4, -1}});
    CHECK(parse_braid_word("B3'", 5).letters() == std::vector<BraidLetter>{{3, -1}});
    CHECK(parse_braid_word("", 5).empty());
    CHECK(parse_braid_word("   \t ", 5).empty());
    CHECK(parse_braid_word("  B2\tB12^-1 ", 14).letters() == std::vector<BraidLetter>{{2, 1}, {12, -1}});
    CHECK_THROWS_AS(parse_braid_word("B0", 5), RangeError);
    CHECK_THROWS_AS(parse_braid_word("B5", 5), RangeError);
}

TEST_CASE("parser reports the position of malformed tokens") {
    auto position = [](const char *text) -> long {
        try {
            parse_braid_word(text, 5);
        } catch (const ParseError &e) {
            return static_cast<long>(e.position);
        }
        return -1;
    };
    CHECK(position("B1 X2") == 3);
    CHECK(position("B1 B") == 3);
    CHECK(position("B1 B2^") == 3);
    CHECK(position("B1B2") == 0);
    CHECK(position("b1") == 0);
    CHECK(position("B2 B1^-2") == 3);
    CHECK(position("B1 B2 ;") == 6);
}

TEST_CASE("word text round trips") {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const auto w = random_word(rng, 6, 10);
        CHECK(parse_braid_word(w.to_string(), 6) == w);
    }
    CHECK(BraidWord(3, {{1, 1}, {2, -1}}).to_string() == "B1 B2^-1");
}

TEST_CASE("word construction validates") {
    CHECK_THROWS_AS(BraidWord(1), RangeError);
    CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), RangeError);
    CHECK_THROWS_AS(BraidWord(3, {{1, 2}}), RangeError);
}

TEST_CASE("generator action and its inverse") {
    const auto b = word_action(BraidWord(2, {{1, 1}}));
    CHECK(b.image(1) == std::pair{2, 1});
    CHECK(b.image(2) == std::pair{1, -1});
    const auto bi = word_action(BraidWord(2, {{1, -1}}));
    CHECK(bi.image(1) == std::pair{2, -1});
    CHECK(bi.image(2) == std::pair{1, 1});
    CHECK(word_action(parse_braid_word("B1 B1 B1 B1", 2)).is_identity());
    CHECK_FALSE(word_action(parse_braid_word("B1 B1", 2)).is_identity());
    CHECK(word_action(BraidWord(4)).is_identity());
}

TEST_CASE("word action composes in time order") {
    // B1 then B2, U = U_2 U_1. Heisenberg picture:
    //   U^dag g1 U = U_1^dag (U_2^dag g1 U_2) U_1 = U_1^dag g1 U_1 = g2,
    //   g2 -> U_1^dag g3 U_1 = g3,   g3 -> U_1^dag (-g2) U_1 = g1.
    const auto a = word_action(parse_braid_word("B1 B2", 3));
    CHECK(a.image(1) == std::pair{2, 1});
    CHECK(a.image(2) == std::pair{3, 1});
    CHECK(a.image(3) == std::pair{1, 1});
    CHECK(a == compose(SignedPermutation::generator(1, 1, 3), SignedPermutation::generator(2, 1, 3)));
}

TEST_CASE("signed permutations are proper rotations") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = word_action(random_word(rng, 6, 12));
        const Eigen::MatrixXd m = p.matrix();
        CHECK((m * m.transpose() - Eigen::MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
        CHECK(p.determinant() == 1);
        CHECK(m.determinant() == doctest::Approx(1.0));
    }
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = word_action(random_word(rng, 5, 6)), b = word_action(random_word(rng, 5, 6)),
                   c = word_action(random_word(rng, 5, 6));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("Fock unitaries match the reference construction") {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 5;
        const int modes = (n + 1) / 2;
        const auto w = random_word(rng, n, 8);
        CHECK((word_unitary(w, modes) - reference_word(w, modes)).cwiseAbs().maxCoeff() < 1e-13);
    }
    CHECK((word_unitary(BraidWord(4), 2) - oracle::CMat::Identity(4, 4)).norm() == 0.0);
    CHECK_THROWS_AS(word_unitary(BraidWord(5), 2), PreconditionError);
    CHECK_THROWS_AS(word_unitary(BraidWord(30), 13), ResourceError);
}

TEST_CASE("conjugation reproduces the signed permutation") {
    const int modes = 2;
    const auto u1 = word_unitary(BraidWord(4, {{1, 1}}), modes);
    CHECK((u1.adjoint() * oracle::majorana(1, modes) * u1 - oracle::majorana(2, modes)).cwiseAbs().maxCoeff() < 1e-13);
    // U_1^2 = gamma_1 gamma_2.
    const oracle::CMat g12 = oracle::majorana(1, modes) * oracle::majorana(2, modes);
    CHECK(oracle::phase_distance(u1 * u1, g12) < 1e-13);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = random_word(rng, 2 + trial % 5, 12);
        const int m = (w.n_strands() + 1) / 2;
        const auto u = word_unitary(w, m);
        const auto act = word_action(w);
        for (int j = 1; j <= w.n_strands(); ++j) {
            const auto [target, sign] = act.image(j);
            CHECK((u.adjoint() * oracle::majorana(j, m) * u - double(sign) * oracle::majorana(target, m))
                      .cwiseAbs()
                      .maxCoeff() < 1e-11);
        }
        const auto p = oracle::total_parity(m);
        CHECK((u * p - p * u).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("word times inverse is the identity") {
    std::mt19937 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_word(rng, 2 + trial % 5, 12);
        const auto ww = w.then(w.inverse());
        CHECK(word_action(ww).is_identity());
        const auto u = word_unitary(ww, (w.n_strands() + 1) / 2);
        CHECK(oracle::phase_distance(u, oracle::CMat::Identity(u.rows(), u.cols())) < 1e-12);
    }
}

TEST_CASE("braid relations") {
    for (int n = 2; n <= 6; ++n) {
        for (auto rep : {Representation::signed_perm, Representation::fock}) {
            const auto r = verify_braid_relations(n, rep);
            CHECK(r.all_passed());
            const int yb = n - 2, far = (n - 2) * (n - 3) / 2;
            CHECK(static_cast<int>(r.checks.size()) == std::max(0, yb) + std::max(0, far));
        }
    }
    CHECK(verify_braid_relations(2, Representation::fock).checks.empty());
    // Independent check of Yang-Baxter on the reference matrices (n = 5, three modes).
    for (int k = 1; k <= 3; ++k) {
        const auto a = reference_generator(k, 1, 3), b = reference_generator(k + 1, 1, 3);
        CHECK(oracle::phase_distance(a * b * a, b * a * b) < 1e-12);
    }
}

TEST_CASE("logical encoding") {
    const QubitEncoding enc;
    const Gate2 z = enc.restrict(enc.sigma_z_bar());
    const Gate2 x = enc.restrict(enc.sigma_x_bar());
    CHECK((z - pauli_z()).norm() < 1e-14);
    CHECK((x - pauli_x()).norm() < 1e-14);
    CHECK((z * x + x * z).norm() < 1e-14);
    CHECK((z * z - Gate2::Identity()).norm() < 1e-14);
    // -i gamma_1 gamma_2 = -i gamma_3 gamma_4 on the even sector.
    const oracle::CMat g34 = std::complex<double>(0, -1) * oracle::majorana(3, 2) * oracle::majorana(4, 2);
    CHECK((enc.restrict(g34) - z).norm() < 1e-14);
}

TEST_CASE("logical gates of single braids") {
    const double pi = std::numbers::pi;
    const auto b1 = logical_gate_from_word(parse_braid_word("B1", 4));
    const auto b2 = logical_gate_from_word(parse_braid_word("B2", 4));
    const auto b3 = logical_gate_from_word(parse_braid_word("B3", 4));
    // Reference exponentials built by series-free closed form cos + i sin.
    Gate2 ez, ex;
    ez << std::polar(1.0, pi / 4), 0, 0, std::polar(1.0, -pi / 4);
    ex << std::cos(pi / 4), std::complex<double>(0, std::sin(pi / 4)), std::complex<double>(0, std::sin(pi / 4)),
        std::cos(pi / 4);
    CHECK(gate_fidelity(b1.matrix, ez) > 1 - 1e-12);
    CHECK(gate_fidelity(b2.matrix, ex) > 1 - 1e-12);
    CHECK(gate_fidelity(b3.matrix, ez) > 1 - 1e-12);
    CHECK(b1.unitarity_residual() < 1e-12);
    const auto four = logical_gate_from_word(parse_braid_word("B1 B1 B1 B1", 4));
    CHECK(oracle::phase_distance(four.matrix, Gate2::Identity()) < 1e-12);
    CHECK_THROWS_AS(logical_gate_from_word(parse_braid_word("B1", 5)), PreconditionError);
}

TEST_CASE("exp_i_pauli") {
    const double th = 0.37;
    const Gate2 e = exp_i_pauli(th, pauli_y());
    Gate2 ref;
    ref << std::cos(th), std::sin(th), -std::sin(th), std::cos(th);
    CHECK((e - ref).norm() < 1e-15);
}

TEST_CASE("Clifford closure") {
    const double pi = std::numbers::pi;
    const auto group = clifford_closure({exp_i_pauli(pi / 4, pauli_z()), exp_i_pauli(pi / 4, pauli_x())});
    CHECK(group.closed);
    CHECK(group.elements.size() == 24);
    CHECK(contains_mod_phase(group, pauli_z()));
    CHECK(contains_mod_phase(group, pauli_x()));
    CHECK(contains_mod_phase(group, pauli_y()));
    CHECK_FALSE(contains_mod_phase(group, exp_i_pauli(pi / 8, pauli_z())));
    const auto trivial = clifford_closure({Gate2::Identity()});
    CHECK(trivial.closed);
    CHECK(trivial.elements.size() == 1);
    // A non-Clifford generator does not close within the cap.
    const auto open = clifford_closure({exp_i_pauli(pi / 8, pauli_z()), exp_i_pauli(pi / 4, pauli_x())}, 100);
    CHECK_FALSE(open.closed);
    CHECK_THROWS_AS(clifford_closure({Gate2::Identity()}, 10), PreconditionError);
}

TEST_CASE("phase canonicalization") {
    Eigen::MatrixXcd m(2, 2);
    m << 0, std::complex<double>(0, 2), 1, 0;
    const auto c = canonicalize_phase(m);
    // First entry (column-major) above tolerance is m(1, 0) = 1: already real positive.
    CHECK((c - m).norm() == 0.0);
    const auto rotated = canonicalize_phase(std::complex<double>(0, 1) * m);
    CHECK((rotated - m).norm() < 1e-15);
    CHECK(distance_mod_phase(std::polar(1.0, 0.3) * m, m) < 1e-15);
}
