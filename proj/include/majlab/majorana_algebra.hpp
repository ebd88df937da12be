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

// Exact algebra of Majorana operators over 2N generators and its conversion
// to and from Dirac mode operators.
//
// Generators are labelled 1..2N. Mode k (1..N) carries the pair
//   gamma_{2k-1} = c_k + c_k^dag,    gamma_{2k} = i (c_k^dag - c_k).

#include <array>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace majlab::algebra {

using cplx = std::complex<double>;

/// i^phase_exp times an ordered product of distinct generators.
/// The support is always strictly ascending; gamma_k^2 = 1 is reduced away.
class MajoranaMonomial {
  public:
    /// Identity monomial over 2 * n_modes generators.
    explicit MajoranaMonomial(int n_modes = 1);

    /// Single generator gamma_index. Throws RangeError outside [1, 2N].
    static MajoranaMonomial generator(int index, int n_modes);

    /// Canonical form of i^phase_exp * gamma_{order[0]} gamma_{order[1]} ...
    /// Indices may repeat and appear in any order.
    static MajoranaMonomial from_product(const std::vector<int> &order, int n_modes, int phase_exp = 0);

    int n_modes() const { return n_modes_; }
    int n_generators() const { return 2 * n_modes_; }
    int phase_exp() const { return phase_exp_; }
    const std::vector<int> &support() const { return support_; }
    std::size_t degree() const { return support_.size(); }
    bool is_identity() const { return support_.empty() && phase_exp_ == 0; }
    bool is_even() const { return support_.size() % 2 == 0; }
    cplx phase() const;

    friend bool operator==(const MajoranaMonomial &, const MajoranaMonomial &) = default;

  private:
    int n_modes_;
    int phase_exp_ = 0;
    std::vector<int> support_;
};

/// Product a * b in canonical form. Throws PreconditionError if the monomials
/// live on different generator sets.
MajoranaMonomial mono_multiply(const MajoranaMonomial &a, const MajoranaMonomial &b);

inline MajoranaMonomial operator*(const MajoranaMonomial &a, const MajoranaMonomial &b) {
    return mono_multiply(a, b);
}

/// Finite linear combination of canonical monomials, keyed by support.
/// Phases are folded into the complex coefficients.
class MajoranaPolynomial {
  public:
    using Support = std::vector<int>;

    explicit MajoranaPolynomial(int n_modes = 1) : n_modes_(n_modes) {}
    MajoranaPolynomial(const MajoranaMonomial &m, cplx coeff = 1.0);

    static MajoranaPolynomial scalar(cplx value, int n_modes);

    int n_modes() const { return n_modes_; }
    const std::map<Support, cplx> &terms() const { return terms_; }
    cplx coefficient(const Support &support) const;
    bool is_zero() const { return terms_.empty(); }
    /// Largest monomial degree present (0 for scalars and for the zero polynomial).
    std::size_t degree() const;

    MajoranaPolynomial &operator+=(const MajoranaPolynomial &other);
    MajoranaPolynomial &operator-=(const MajoranaPolynomial &other);
    MajoranaPolynomial &operator*=(cplx scalar);

    friend MajoranaPolynomial operator+(MajoranaPolynomial a, const MajoranaPolynomial &b) { return a += b; }
    friend MajoranaPolynomial operator-(MajoranaPolynomial a, const MajoranaPolynomial &b) { return a -= b; }
    friend MajoranaPolynomial operator*(cplx s, MajoranaPolynomial a) { return a *= s; }
    friend MajoranaPolynomial operator*(const MajoranaPolynomial &a, const MajoranaPolynomial &b);
    friend bool operator==(const MajoranaPolynomial &, const MajoranaPolynomial &) = default;

  private:
    void add_term(const Support &support, cplx coeff);

    int n_modes_;
    std::map<Support, cplx> terms_;
};

/// c_k (creation = false) or c_k^dag (creation = true).
struct DiracOperator {
    int mode;
    bool creation;
    auto operator<=>(const DiracOperator &) const = default;
};

/// Linear combination of single Dirac operators.
class DiracLinear {
  public:
    explicit DiracLinear(int n_modes = 1) : n_modes_(n_modes) {}
    DiracLinear(DiracOperator op, int n_modes, cplx coeff = 1.0);

    int n_modes() const { return n_modes_; }
    const std::map<DiracOperator, cplx> &terms() const { return terms_; }
    cplx coefficient(DiracOperator op) const;

    DiracLinear &add(DiracOperator op, cplx coeff);
    friend bool operator==(const DiracLinear &, const DiracLinear &) = default;

  private:
    int n_modes_;
    std::map<DiracOperator, cplx> terms_;
};

/// gamma_{2k-1} and gamma_{2k} written in terms of c_k, c_k^dag.
std::array<DiracLinear, 2> majoranas_of_mode(int k, int n_modes);

/// c_k and c_k^dag written in terms of gamma_{2k-1}, gamma_{2k}.
std::array<MajoranaPolynomial, 2> dirac_of_mode(int k, int n_modes);

/// Rewrites a linear Dirac form in the Majorana basis.
MajoranaPolynomial to_majorana(const DiracLinear &op);

/// Rewrites a degree-one Majorana polynomial as a linear Dirac form.
/// Throws PreconditionError if any term has degree other than one.
DiracLinear to_dirac(const MajoranaPolynomial &poly);

/// n_k = c_k^dag c_k = (1 + i gamma_{2k-1} gamma_{2k}) / 2.
MajoranaPolynomial number_operator(int k, int n_modes);

/// Single-mode parity P_k = -i gamma_{2k-1} gamma_{2k}.
MajoranaMonomial parity_monomial(int k, int n_modes);

/// Ordered product P_1 P_2 ... P_N.
MajoranaMonomial total_parity_monomial(int n_modes);

/// Action of the global U(1) phase rotation c_k -> e^{i phi} c_k on the
/// Majorana pair of mode k. Row r of `map` is the image of the r-th pair member
/// expanded in (gamma_{2k-1}, gamma_{2k}).
struct ModeRotation {
    int mode;
    Eigen::Matrix2d map;
};

ModeRotation u1_rotate_modes(double phi, int k, int n_modes);

/// Image of a degree-one Majorana polynomial under the rotation.
MajoranaPolynomial apply(const ModeRotation &rot, const MajoranaPolynomial &poly);

}  // namespace majlab::algebra
