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

#include "krw/poly.hpp"
#include "krw/rational.hpp"

#include <utility>

namespace krw {

/// Coefficients of 1F1(a; -N; scale*z) truncated at order N, the cut placed
/// just before the (-N)_j factor in the denominator would vanish:
/// coefficient j = (a)_j scale^j / ((-N)_j j!) for 0 <= j <= N.
TruncatedSeries truncated_1f1(long a, int N, const Rational& scale);

/// [1F1(a;-N;z)]_N - e^z [1F1(-N-a;-N;-z)]_N through order N; the truncated
/// Kummer transformation says this is identically zero there.
TruncatedSeries kummer_residual(long a, int N);

/// Rational approximation of e^z with numerator 1F1(-n; -n-m; z) (degree n)
/// and denominator 1F1(-m; -n-m; -z) (degree m, constant term 1), matching
/// e^z through order n+m.
struct PadePair {
    int n = 0, m = 0;
    Poly numerator, denominator;
};

PadePair pade_exp(int n, int m);

/// e^z * denominator - numerator through the given order.
TruncatedSeries pade_defect_series(const PadePair& p, long order);

/// First exponent > n+m where e^z*denominator - numerator is nonzero, with
/// that coefficient. For e^z this is always n+m+1.
std::pair<long, Rational> pade_first_defect(int n, int m);

} // namespace krw
