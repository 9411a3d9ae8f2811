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

#include "krw/diff_model.hpp"

#include <algorithm>

namespace krw::detail {

int MonomialBasis::index_of(long exponent) const {
    const long e0 = exponent_of(0);
    const long eN = exponent_of(N);
    const long lo = std::min(e0, eN);
    const long hi = std::max(e0, eN);
    if (exponent < lo || exponent > hi) {
        return -1;
    }
    // contiguous window, step +1 or -1 in n
    return (eN >= e0) ? static_cast<int>(exponent - e0) : static_cast<int>(e0 - exponent);
}

Matrix build_monomial_operator(const MonomialBasis& basis, const MonomialAction& action,
                               char op_symbol, std::vector<HandTruncation>& leaks) {
    const int N = basis.N;
    Matrix m(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        const Rational cn = basis.basis_coeff(n);
        bool leaked = false;
        for (const auto& term : action(basis.exponent_of(n))) {
            const Rational coeff = cn * term.coeff;
            if (coeff.is_zero()) {
                continue;
            }
            const int row = basis.index_of(term.exponent);
            if (row < 0) {
                leaked = true;
                continue;
            }
            m.at(row, n) += coeff / basis.basis_coeff(row);
        }
        if (leaked) {
            leaks.push_back({op_symbol, n});
        }
    }
    return m;
}

} // namespace krw::detail
