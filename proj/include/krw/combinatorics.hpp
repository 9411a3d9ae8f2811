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

#include "krw/rational.hpp"

namespace krw {

/// C(n, k); zero when k < 0 or k > n. Computed as an iterative product,
/// never as a ratio of factorials.
Rational binomial(long n, long k);

/// Rising factorial a(a+1)...(a+n-1); 1 when n = 0.
Rational pochhammer(const Rational& a, long n);

Rational factorial(long n);

/// base^e for e >= 0.
Rational rational_pow(const Rational& base, long e);

/// (-1)^k as a Rational.
inline Rational sign_pow(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace krw
