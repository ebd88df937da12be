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

#include "majlab/braid.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <array>
#include <deque>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "majlab/errors.hpp"
#include "majlab/linalg.hpp"

namespace majlab::braid {

using CMatrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

BraidWord::BraidWord(int n_strands, std::vector<BraidLetter> letters)
    : n_strands_(n_strands), letters_(std::move(letters)) {
    if (n_strands < 2) throw RangeError("braid word needs at least 2 strands");
    for (const auto &l : letters_) {
        if (l.generator < 1 || l.generator >= n_strands) {
            throw RangeError("generator B" + std::to_string(l.generator) + " outside [1, " +
                             std::to_string(n_strands - 1) + "]");
        }
        if (l.exponent != 1 && l.exponent != -1) throw RangeError("braid exponent must be +1 or -1");
    }
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> inv(letters_.rbegin(), letters_.rend());
    for (auto &l : inv) l.exponent = -l.exponent;
    return BraidWord(n_strands_, std::move(inv));
}

BraidWord BraidWord::then(const BraidWord &later) const {
    if (later.n_strands_ != n_strands_) throw PreconditionError("braid words on different strand counts");
    std::vector<BraidLetter> all = letters_;
    all.insert(all.end(), later.letters_.begin(), later.letters_.end());
    return BraidWord(n_strands_, std::move(all));
}

std::string BraidWord::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) os << ' ';
        os << 'B' << letters_[i].generator;
        if (letters_[i].exponent < 0) os << "^-1";
    }
    return os.str();
}

BraidWord parse_braid_word(std::string_view text, int n_strands) {
    if (n_strands < 2) throw RangeError("braid word needs at least 2 strands");
    std::vector<BraidLetter> letters;
    std::size_t pos = 0;
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    const auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    while (pos < text.size()) {
        if (is_space(text[pos])) {
            ++pos;
            continue;
        }
        const std::size_t start = pos;
        if (text[pos] != 'B') throw ParseError("expected 'B'", start);
        ++pos;
        const std::size_t digits = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        if (pos == digits) throw ParseError("expected generator index after 'B'", start);
        long index = 0;
        const auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + pos, index);
        if (ec != std::errc{} || index >= n_strands) {
            throw RangeError("generator index at position " + std::to_string(start) + " outside [1, " +
                             std::to_string(n_strands - 1) + "]");
        }
        if (index < 1) {
            throw RangeError("generator index 0 at position " + std::to_string(start) + " outside [1, " +
                             std::to_string(n_strands - 1) + "]");
        }
        int exponent = 1;
        if (pos < text.size() && text[pos] == '\'') {
            exponent = -1;
            ++pos;
        } else if (pos < text.size() && text[pos] == '^') {
            if (text.substr(pos, 3) != "^-1") throw ParseError("expected '^-1'", start);
            exponent = -1;
            pos += 3;
        }
        if (pos < text.size() && !is_space(text[pos])) throw ParseError("unexpected character in token", start);
        letters.push_back({static_cast<int>(index), exponent});
    }
    return BraidWord(n_strands, std::move(letters));
}

SignedPermutation SignedPermutation::identity(int n) {
    if (n < 1) throw RangeError("signed permutation needs n >= 1");
    SignedPermutation p;
    p.targets_.resize(static_cast<std::size_t>(n));
    p.signs_.assign(static_cast<std::size_t>(n), 1);
    for (int j = 0; j < n; ++j) p.targets_[static_cast<std::size_t>(j)] = j + 1;
    return p;
}

SignedPermutation SignedPermutation::generator(int k, int exponent, int n) {
    if (k < 1 || k >= n) throw RangeError("generator index out of range");
    SignedPermutation p = identity(n);
    const auto a = static_cast<std::size_t>(k - 1);
    const auto b = static_cast<std::size_t>(k);
    p.targets_[a] = k + 1;
    p.targets_[b] = k;
    // B_k: gamma_k -> gamma_{k+1}, gamma_{k+1} -> -gamma_k; the inverse flips both signs.
    p.signs_[a] = exponent > 0 ? 1 : -1;
    p.signs_[b] = exponent > 0 ? -1 : 1;
    return p;
}

std::pair<int, int> SignedPermutation::image(int j) const {
    if (j < 1 || j > size()) throw RangeError("label out of range");
    return {targets_[static_cast<std::size_t>(j - 1)], signs_[static_cast<std::size_t>(j - 1)]};
}

Eigen::MatrixXd SignedPermutation::matrix() const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(size(), size());
    for (int j = 0; j < size(); ++j) {
        m(j, targets_[static_cast<std::size_t>(j)] - 1) = signs_[static_cast<std::size_t>(j)];
    }
    return m;
}

int SignedPermutation::determinant() const {
    int sign = 1;
    for (int s : signs_) sign *= s;
    // Parity of the permutation from its cycle decomposition.
    std::vector<bool> seen(targets_.size(), false);
    for (std::size_t start = 0; start < targets_.size(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(targets_[j] - 1)) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool SignedPermutation::is_identity() const { return *this == identity(size()); }

SignedPermutation compose(const SignedPermutation &f, const SignedPermutation &g) {
    if (f.size() != g.size()) throw PreconditionError("signed permutations of different sizes");
    SignedPermutation out = g;
    for (std::size_t j = 0; j < g.targets_.size(); ++j) {
        const auto mid = static_cast<std::size_t>(g.targets_[j] - 1);
        out.targets_[j] = f.targets_[mid];
        out.signs_[j] = g.signs_[j] * f.signs_[mid];
    }
    return out;
}

SignedPermutation word_action(const BraidWord &w) {
    SignedPermutation out = SignedPermutation::identity(w.n_strands());
    // U_w = U_last ... U_first, so U_w^dag g U_w = phi_first(...phi_last(g)).
    for (const auto &l : w.letters()) {
        out = compose(out, SignedPermutation::generator(l.generator, l.exponent, w.n_strands()));
    }
    return out;
}

CMatrix word_unitary(const BraidWord &w, const algebra::FockSpace &space) {
    if (2 * space.n_modes() < w.n_strands()) {
        throw PreconditionError("Fock space has fewer Majoranas than the word has strands");
    }
    const Eigen::Index d = space.dim();
    const CMatrix id = CMatrix::Identity(d, d);
    std::map<int, CMatrix> pair_products;
    CMatrix u = id;
    for (const auto &l : w.letters()) {
        auto it = pair_products.find(l.generator);
        if (it == pair_products.end()) {
            it = pair_products.emplace(l.generator, space.generator(l.generator) * space.generator(l.generator + 1))
                     .first;
        }
        const CMatrix u_letter = (id + static_cast<double>(l.exponent) * it->second) / std::numbers::sqrt2;
        u = u_letter * u;
    }
    return u;
}

CMatrix word_unitary(const BraidWord &w, int n_modes) { return word_unitary(w, algebra::FockSpace(n_modes)); }

bool BraidRelationReport::all_passed() const {
    for (const auto &c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

BraidRelationReport verify_braid_relations(int n_strands, Representation rep, double tol) {
    if (n_strands < 2) throw RangeError("braid relations need at least 2 strands");
    BraidRelationReport report{n_strands, rep, {}};
    const auto word = [&](std::vector<BraidLetter> letters) { return BraidWord(n_strands, std::move(letters)); };

    std::optional<algebra::FockSpace> space;
    if (rep == Representation::fock) space.emplace((n_strands + 1) / 2);

    const auto compare = [&](const std::string &name, const BraidWord &lhs, const BraidWord &rhs) {
        if (rep == Representation::signed_perm) {
            const bool equal = word_action(lhs) == word_action(rhs);
            report.checks.push_back({name, equal ? 0.0 : 1.0, equal});
        } else {
            const double r = distance_mod_phase(word_unitary(lhs, *space), word_unitary(rhs, *space));
            report.checks.push_back({name, r, r < tol});
        }
    };

    for (int k = 1; k < n_strands; ++k) {
        for (int l = k + 2; l < n_strands; ++l) {
            compare("B" + std::to_string(k) + " B" + std::to_string(l) + " = B" + std::to_string(l) + " B" +
                        std::to_string(k),
                    word({{k, 1}, {l, 1}}), word({{l, 1}, {k, 1}}));
        }
    }
    for (int k = 1; k + 1 < n_strands; ++k) {
        const std::string a = "B" + std::to_string(k);
        const std::string b = "B" + std::to_string(k + 1);
        compare(a + " " + b + " " + a + " = " + b + " " + a + " " + b, word({{k, 1}, {k + 1, 1}, {k, 1}}),
                word({{k + 1, 1}, {k, 1}, {k + 1, 1}}));
    }
    return report;
}

Gate2 QubitEncoding::restrict(const CMatrix &op) const {
    if (op.rows() != space.dim() || op.cols() != space.dim()) throw PreconditionError("operator is not 4 x 4");
    const std::array<Eigen::Index, 2> basis{zero_state, one_state};
    Gate2 g;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) g(r, c) = op(basis[static_cast<std::size_t>(r)], basis[static_cast<std::size_t>(c)]);
    }
    return g;
}

CMatrix QubitEncoding::sigma_z_bar() const {
    return cplx{0, -1} * space.generator(1) * space.generator(2);
}

CMatrix QubitEncoding::sigma_x_bar() const {
    return cplx{0, -1} * space.generator(2) * space.generator(3);
}

double LogicalGate::unitarity_residual() const { return majlab::unitarity_residual(matrix); }

Gate2 pauli_x() {
    Gate2 m;
    m << 0, 1, 1, 0;
    return m;
}

Gate2 pauli_y() {
    Gate2 m;
    m << 0, cplx{0, -1}, cplx{0, 1}, 0;
    return m;
}

Gate2 pauli_z() {
    Gate2 m;
    m << 1, 0, 0, -1;
    return m;
}

Gate2 exp_i_pauli(double theta, const Gate2 &pauli) {
    return std::cos(theta) * Gate2::Identity() + cplx{0, std::sin(theta)} * pauli;
}

LogicalGate logical_gate_from_word(const BraidWord &w, const QubitEncoding &enc) {
    if (w.n_strands() != 4) throw PreconditionError("logical gates are compiled from 4-strand words");
    const CMatrix u = word_unitary(w, enc.space);
    const Gate2 g = enc.restrict(u);
    // Columns of u on the logical states must stay inside the logical span.
    for (Eigen::Index c : {enc.zero_state, enc.one_state}) {
        CMatrix col = u.col(c);
        col(enc.zero_state) = 0.0;
        col(enc.one_state) = 0.0;
        if (col.norm() > 1e-12) throw ConsistencyError("braid unitary leaks out of the logical subspace");
    }
    LogicalGate gate{g};
    if (gate.unitarity_residual() > 1e-12) throw ConsistencyError("restricted braid gate is not unitary");
    return gate;
}

namespace {

std::vector<long long> phase_key(const Gate2 &g) {
    const CMatrix c = canonicalize_phase(g);
    std::vector<long long> key;
    key.reserve(8);
    for (Eigen::Index j = 0; j < 4; ++j) {
        key.push_back(std::llround(c(j).real() * 1e8));
        key.push_back(std::llround(c(j).imag() * 1e8));
    }
    return key;
}

}  // namespace

ClosureResult clifford_closure(const std::vector<Gate2> &generators, std::size_t max_elements) {
    if (max_elements < 24) throw PreconditionError("closure cap must be at least 24");
    for (const auto &g : generators) {
        if (unitarity_residual(g) > 1e-10) throw PreconditionError("closure generators must be unitary");
    }
    ClosureResult out{{}, true};
    std::map<std::vector<long long>, std::size_t> seen;
    std::deque<Gate2> frontier;
    const auto add = [&](const Gate2 &g) {
        const Gate2 c = canonicalize_phase(g);
        if (seen.emplace(phase_key(c), out.elements.size()).second) {
            out.elements.push_back(c);
            frontier.push_back(c);
        }
    };
    add(Gate2::Identity());
    while (!frontier.empty()) {
        const Gate2 cur = frontier.front();
        frontier.pop_front();
        for (const auto &g : generators) {
            add(g * cur);
            if (out.elements.size() > max_elements) {
                out.elements.resize(max_elements);
                out.closed = false;
                return out;
            }
        }
    }
    return out;
}

bool contains_mod_phase(const ClosureResult &set, const Gate2 &g, double tol) {
    for (const auto &e : set.elements) {
        if (distance_mod_phase(e, g) < tol) return true;
    }
    return false;
}

}  // namespace majlab::braid
