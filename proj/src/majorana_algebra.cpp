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

#include "majlab/majorana_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "majlab/errors.hpp"

namespace majlab::algebra {

namespace {

void check_modes(int n_modes) {
    if (n_modes < 1) {
        throw RangeError("mode count must be positive, got " + std::to_string(n_modes));
    }
}

void check_generator(int index, int n_modes) {
    if (index < 1 || index > 2 * n_modes) {
        throw RangeError("Majorana index " + std::to_string(index) + " outside [1, " +
                         std::to_string(2 * n_modes) + "]");
    }
}

void check_mode(int k, int n_modes) {
    if (k < 1 || k > n_modes) {
        throw RangeError("mode " + std::to_string(k) + " outside [1, " + std::to_string(n_modes) + "]");
    }
}

constexpr std::array<cplx, 4> kPowersOfI{cplx{1, 0}, cplx{0, 1}, cplx{-1, 0}, cplx{0, -1}};

int mod4(int k) { return ((k % 4) + 4) % 4; }

}  // namespace

MajoranaMonomial::MajoranaMonomial(int n_modes) : n_modes_(n_modes) { check_modes(n_modes); }

MajoranaMonomial MajoranaMonomial::generator(int index, int n_modes) {
    return from_product({index}, n_modes);
}

MajoranaMonomial MajoranaMonomial::from_product(const std::vector<int> &order, int n_modes, int phase_exp) {
    MajoranaMonomial out(n_modes);
    std::vector<int> seq = order;
    for (int idx : seq) check_generator(idx, n_modes);

    // Insertion sort; each adjacent swap of distinct generators contributes a factor -1.
    int swaps = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        for (std::size_t j = i; j > 0 && seq[j - 1] > seq[j]; --j) {
            std::swap(seq[j - 1], seq[j]);
            ++swaps;
        }
    }
    // Equal neighbours square to one.
    std::vector<int> support;
    support.reserve(seq.size());
    for (int idx : seq) {
        if (!support.empty() && support.back() == idx) {
            support.pop_back();
        } else {
            support.push_back(idx);
        }
    }
    out.support_ = std::move(support);
    out.phase_exp_ = mod4(phase_exp + 2 * (swaps % 2));
    return out;
}

cplx MajoranaMonomial::phase() const { return kPowersOfI[static_cast<std::size_t>(phase_exp_)]; }

MajoranaMonomial mono_multiply(const MajoranaMonomial &a, const MajoranaMonomial &b) {
    if (a.n_modes() != b.n_modes()) {
        throw PreconditionError("monomials defined over different generator sets");
    }
    std::vector<int> seq = a.support();
    seq.insert(seq.end(), b.support().begin(), b.support().end());
    return MajoranaMonomial::from_product(seq, a.n_modes(), a.phase_exp() + b.phase_exp());
}

MajoranaPolynomial::MajoranaPolynomial(const MajoranaMonomial &m, cplx coeff) : n_modes_(m.n_modes()) {
    add_term(m.support(), coeff * m.phase());
}

MajoranaPolynomial MajoranaPolynomial::scalar(cplx value, int n_modes) {
    return MajoranaPolynomial(MajoranaMonomial(n_modes), value);
}

cplx MajoranaPolynomial::coefficient(const Support &support) const {
    auto it = terms_.find(support);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

std::size_t MajoranaPolynomial::degree() const {
    std::size_t d = 0;
    for (const auto &[support, coeff] : terms_) d = std::max(d, support.size());
    return d;
}

void MajoranaPolynomial::add_term(const Support &support, cplx coeff) {
    if (coeff == cplx{0, 0}) return;
    auto [it, inserted] = terms_.try_emplace(support, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == cplx{0, 0}) terms_.erase(it);
    }
}

MajoranaPolynomial &MajoranaPolynomial::operator+=(const MajoranaPolynomial &other) {
    if (other.n_modes_ != n_modes_) throw PreconditionError("polynomials over different generator sets");
    for (const auto &[support, coeff] : other.terms_) add_term(support, coeff);
    return *this;
}

MajoranaPolynomial &MajoranaPolynomial::operator-=(const MajoranaPolynomial &other) {
    if (other.n_modes_ != n_modes_) throw PreconditionError("polynomials over different generator sets");
    for (const auto &[support, coeff] : other.terms_) add_term(support, -coeff);
    return *this;
}

MajoranaPolynomial &MajoranaPolynomial::operator*=(cplx scalar) {
    if (scalar == cplx{0, 0}) {
        terms_.clear();
        return *this;
    }
    for (auto &[support, coeff] : terms_) coeff *= scalar;
    return *this;
}

MajoranaPolynomial operator*(const MajoranaPolynomial &a, const MajoranaPolynomial &b) {
    if (a.n_modes_ != b.n_modes_) throw PreconditionError("polynomials over different generator sets");
    MajoranaPolynomial out(a.n_modes_);
    for (const auto &[sa, ca] : a.terms_) {
        for (const auto &[sb, cb] : b.terms_) {
            std::vector<int> seq = sa;
            seq.insert(seq.end(), sb.begin(), sb.end());
            auto m = MajoranaMonomial::from_product(seq, a.n_modes_);
            out.add_term(m.support(), ca * cb * m.phase());
        }
    }
    return out;
}

DiracLinear::DiracLinear(DiracOperator op, int n_modes, cplx coeff) : n_modes_(n_modes) { add(op, coeff); }

cplx DiracLinear::coefficient(DiracOperator op) const {
    auto it = terms_.find(op);
    return it == terms_.end() ? cplx{0, 0} : it->second;
}

DiracLinear &DiracLinear::add(DiracOperator op, cplx coeff) {
    check_mode(op.mode, n_modes_);
    if (coeff == cplx{0, 0}) return *this;
    auto [it, inserted] = terms_.try_emplace(op, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == cplx{0, 0}) terms_.erase(it);
    }
    return *this;
}

std::array<DiracLinear, 2> majoranas_of_mode(int k, int n_modes) {
    check_mode(k, n_modes);
    const cplx i{0, 1};
    DiracLinear odd(n_modes);
    odd.add({k, false}, 1.0).add({k, true}, 1.0);
    DiracLinear even(n_modes);
    even.add({k, true}, i).add({k, false}, -i);
    return {odd, even};
}

std::array<MajoranaPolynomial, 2> dirac_of_mode(int k, int n_modes) {
    check_mode(k, n_modes);
    const cplx i{0, 1};
    const MajoranaPolynomial g_odd(MajoranaMonomial::generator(2 * k - 1, n_modes));
    const MajoranaPolynomial g_even(MajoranaMonomial::generator(2 * k, n_modes));
    return {0.5 * (g_odd + i * g_even), 0.5 * (g_odd - i * g_even)};
}

MajoranaPolynomial to_majorana(const DiracLinear &op) {
    MajoranaPolynomial out(op.n_modes());
    for (const auto &[dop, coeff] : op.terms()) {
        const auto pair = dirac_of_mode(dop.mode, op.n_modes());
        out += coeff * pair[dop.creation ? 1 : 0];
    }
    return out;
}

DiracLinear to_dirac(const MajoranaPolynomial &poly) {
    DiracLinear out(poly.n_modes());
    for (const auto &[support, coeff] : poly.terms()) {
        if (support.size() != 1) {
            throw PreconditionError("only degree-one Majorana polynomials map to linear Dirac forms");
        }
        const int idx = support.front();
        const int mode = (idx + 1) / 2;
        const auto pair = majoranas_of_mode(mode, poly.n_modes());
        for (const auto &[dop, c] : pair[idx % 2 == 1 ? 0 : 1].terms()) out.add(dop, coeff * c);
    }
    return out;
}

MajoranaPolynomial number_operator(int k, int n_modes) {
    const auto pair = dirac_of_mode(k, n_modes);
    return pair[1] * pair[0];
}

MajoranaMonomial parity_monomial(int k, int n_modes) {
    check_mode(k, n_modes);
    return MajoranaMonomial::from_product({2 * k - 1, 2 * k}, n_modes, 3);
}

MajoranaMonomial total_parity_monomial(int n_modes) {
    MajoranaMonomial out(n_modes);
    for (int k = 1; k <= n_modes; ++k) out = out * parity_monomial(k, n_modes);
    return out;
}

ModeRotation u1_rotate_modes(double phi, int k, int n_modes) {
    check_mode(k, n_modes);
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Eigen::Matrix2d m;
    m << c, -s, s, c;
    return {k, m};
}

MajoranaPolynomial apply(const ModeRotation &rot, const MajoranaPolynomial &poly) {
    MajoranaPolynomial out(poly.n_modes());
    const int first = 2 * rot.mode - 1;
    for (const auto &[support, coeff] : poly.terms()) {
        if (support.size() != 1) throw PreconditionError("mode rotation acts on degree-one polynomials");
        const int idx = support.front();
        if (idx != first && idx != first + 1) {
            out += MajoranaPolynomial(MajoranaMonomial::generator(idx, poly.n_modes()), coeff);
            continue;
        }
        const int row = idx - first;
        for (int col = 0; col < 2; ++col) {
            out += MajoranaPolynomial(MajoranaMonomial::generator(first + col, poly.n_modes()),
                                      coeff * rot.map(row, col));
        }
    }
    return out;
}

}  // namespace majlab::algebra
