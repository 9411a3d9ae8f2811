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

#include "krw/combinatorics.hpp"

#include <stdexcept>

namespace krw {

Rational binomial(long n, long k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    if (k > n - k) {
        k = n - k;
    }
    // C(n,k) = prod_{j=1..k} (n-k+j)/j, each prefix an exact integer
    mpz_class r(1);
    for (long j = 1; j <= k; ++j) {
        r *= (n - k + j);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(j));
    }
    return Rational(mpq_class(r));
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) {
        throw std::invalid_argument("pochhammer: n must be non-negative");
    }
    Rational r(1);
    Rational term = a;
    for (long i = 0; i < n; ++i) {
        r *= term;
        if (r.is_zero()) {
            return r;
        }
        term += Rational(1);
    }
    return r;
}

Rational factorial(long n) {
    if (n < 0) {
        throw std::invalid_argument("factorial: n must be non-negative");
    }
    mpz_class r(1);
    for (long i = 2; i <= n; ++i) {
        r *= i;
    }
    return Rational(mpq_class(r));
}

Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        throw std::invalid_argument("rational_pow: exponent must be non-negative");
    }
    Rational r(1);
    Rational b = base;
    long k = e;
    while (k > 0) {
        if (k & 1) {
            r *= b;
        }
        b *= b;
        k >>= 1;
    }
    return r;
}

} // namespace krw
