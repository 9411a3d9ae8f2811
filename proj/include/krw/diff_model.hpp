/*
   Copyright 2026 The krw authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "krw/matrix.hpp"
#include "krw/rational.hpp"

#include <functional>
#include <vector>

namespace krw {

/// A column the projector had to zero because the raw differential action
/// left the model space. op is the raw generator symbol: '0', '+' or '-'.
struct HandTruncation {
    char op = '?';
    int column = -1;
    friend bool operator==(const HandTruncation& a, const HandTruncation& b) {
        return a.op == b.op && a.column == b.column;
    }
};

/// Matrices of a differential model of the algebra on an (N+1)-dimensional
/// monomial (or normalized-monomial) space. j0/jp/jm are the matrices of the
/// raw generators named in the model; on adjoint models the transposed
/// raising and lowering operators swap roles, so use raising()/lowering()
/// when checking algebra relations.
struct ModelOperators {
    int N = 0;
    bool adjoint = false;
    Matrix j0, jp, jm;
    std::vector<HandTruncation> truncations;

    const Matrix& raising() const { return adjoint ? jm : jp; }
    const Matrix& lowering() const { return adjoint ? jp : jm; }
};

namespace detail {

/// One monomial term coeff * z^exponent.
struct MonomialTerm {
    Rational coeff;
    long exponent = 0;
};

/// Action of a first- or second-order differential operator on z^p.
using MonomialAction = std::function<std::vector<MonomialTerm>(long p)>;

/// Basis element n is basis_coeff(n) * z^(exponent_of(n)) for n = 0..N, with
/// exponents forming a contiguous window (ascending or descending in n).
struct MonomialBasis {
    int N = 0;
    std::function<long(int)> exponent_of;
    std::function<Rational(int)> basis_coeff;
    int index_of(long exponent) const; // -1 when outside the window
};

/// Builds the matrix of P ∘ op ∘ P where P keeps only exponents inside the
/// basis window. Zero-coefficient terms are discarded before leak detection,
/// so a column counts as truncated only when a genuinely nonzero term had to
/// be dropped; such columns are appended to `leaks`.
Matrix build_monomial_operator(const MonomialBasis& basis, const MonomialAction& action,
                               char op_symbol, std::vector<HandTruncation>& leaks);

} // namespace detail

} // namespace krw
