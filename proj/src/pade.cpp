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

#include "krw/pade.hpp"

#include <stdexcept>

namespace krw {

TruncatedSeries truncated_1f1(long a, int N, const Rational& scale) {
    if (N < 1) {
        throw std::out_of_range("truncated_1f1: N must be >= 1");
    }
    TruncatedSeries s(N);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
    Rational term(1);
    c[0] = term;
    for (long j = 0; j < N; ++j) {
        // term_{j+1} = term_j * (a+j) * scale / ((-N+j)(j+1))
        term *= Rational(a + j) * scale / Rational((j - N) * (j + 1));
        c[static_cast<std::size_t>(j + 1)] = term;
        if (term.is_zero()) {
            break; // terminating top parameter
        }
    }
    return TruncatedSeries(N, std::move(c));
}

TruncatedSeries kummer_residual(long a, int N) {
    const TruncatedSeries lhs = truncated_1f1(a, N, Rational(1));
    const TruncatedSeries rhs =
        TruncatedSeries::exp(N) * truncated_1f1(-static_cast<long>(N) - a, N, Rational(-1));
    return lhs - rhs;
}

PadePair pade_exp(int n, int m) {
    if (n < 0 || m < 0 || n + m < 1) {
        throw std::out_of_range("pade_exp: need n, m >= 0 with n + m >= 1");
    }
    const int order = n + m;
    PadePair p;
    p.n = n;
    p.m = m;
    p.numerator = truncated_1f1(-n, order, Rational(1)).to_poly();
    p.denominator = truncated_1f1(-m, order, Rational(-1)).to_poly();
    if (p.numerator.degree() > n || p.denominator.degree() > m) {
        throw std::logic_error("pade_exp: truncated series did not terminate as expected");
    }
    return p;
}

TruncatedSeries pade_defect_series(const PadePair& p, long order) {
    return TruncatedSeries::exp(order) * TruncatedSeries::from_poly(p.denominator, order) -
           TruncatedSeries::from_poly(p.numerator, order);
}

std::pair<long, Rational> pade_first_defect(int n, int m) {
    const PadePair p = pade_exp(n, m);
    const long contact = n + m;
    for (long order = contact + 1; order <= contact + 8; ++order) {
        const TruncatedSeries d = pade_defect_series(p, order);
        for (long j = contact + 1; j <= order; ++j) {
            if (!d.coeff(j).is_zero()) {
                return {j, d.coeff(j)};
            }
        }
    }
    throw std::logic_error("pade_first_defect: no defect found near the contact order");
}

} // namespace krw
