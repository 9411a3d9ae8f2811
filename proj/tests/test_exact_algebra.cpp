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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "krw/combinatorics.hpp"
#include "krw/poly.hpp"
#include "krw/rational.hpp"

using namespace krw;

TEST_CASE("rational canonical form and serialization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(-6, -3).str() == "2");
    CHECK(Rational(0, 7).str() == "0");

    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-12") == Rational(-12));
    CHECK(Rational::from_string("6/4") == Rational(3, 2));
    CHECK_THROWS_AS((void)Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS((void)(Rational(1) / Rational(0)), std::domain_error);

    // round trip through the exact string form
    const Rational samples[] = {Rational(0), Rational(-7, 3), Rational(22, 7), Rational(100)};
    for (const auto& r : samples) {
        CHECK(Rational::from_string(r.str()) == r);
    }
}

TEST_CASE("binomial values and out-of-range convention") {
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(5, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(3, -1) == Rational(0));
    CHECK(binomial(30, 15) == Rational::from_string("155117520"));
}

TEST_CASE("pochhammer values") {
    CHECK(pochhammer(Rational(-3), 2) == Rational(6));
    CHECK(pochhammer(Rational(-3), 4) == Rational(0));
    // (-N)_n = (-1)^n N!/(N-n)! at N=5, n=3
    CHECK(pochhammer(Rational(-5), 3) == Rational(-60));
    CHECK(pochhammer(Rational(-5), 3) == sign_pow(3) * factorial(5) / factorial(2));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(7), 0) == Rational(1));
}

TEST_CASE("pochhammer splitting property") {
    const Rational bases[] = {Rational(-3), Rational(-1, 2), Rational(0), Rational(2, 3),
                              Rational(5)};
    for (const auto& a : bases) {
        for (long m = 0; m <= 6; ++m) {
            for (long n = 0; n <= 6; ++n) {
                CHECK(pochhammer(a, m + n) ==
                      pochhammer(a, m) * pochhammer(a + Rational(m), n));
            }
        }
    }
}

TEST_CASE("polynomial arithmetic") {
    const Poly p{Rational(1), Rational(-1)};
    CHECK(p.pow(2) == Poly{Rational(1), Rational(-2), Rational(1)});
    CHECK(p.pow(0) == Poly{Rational(1)});

    const Poly q{Rational(1), Rational(1)};
    CHECK(p * q == Poly{Rational(1), Rational(0), Rational(-1)});
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == 0);
    CHECK((p - p).coeffs() == std::vector<Rational>{Rational(0)});

    CHECK(p.derivative() == Poly{Rational(-1)});
    CHECK(Poly{Rational(1), Rational(2), Rational(3)}.derivative() ==
          Poly{Rational(2), Rational(6)});
    CHECK(p.shifted(2) == Poly{Rational(0), Rational(0), Rational(1), Rational(-1)});
}

TEST_CASE("laurent polynomial arithmetic and canonical trimming") {
    const LaurentPoly a(-2, {Rational(1), Rational(1)}); // z^-2 + z^-1
    CHECK(a.low() == -2);
    CHECK(a.high() == -1);
    CHECK(a.coeff(-1) == Rational(1));
    CHECK(a.coeff(0) == Rational(0));

    const LaurentPoly trimmed(-3, {Rational(0), Rational(2), Rational(0)});
    CHECK(trimmed.low() == -2);
    CHECK(trimmed.high() == -2);

    const LaurentPoly b = LaurentPoly::monomial(3);
    CHECK((a * b).low() == 1);
    CHECK((a - a).is_zero());

    const LaurentPoly window(-5, {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)});
    const LaurentPoly cut = window.restricted(-4, -2);
    CHECK(cut.low() == -4);
    CHECK(cut.high() == -2);
    CHECK(cut.coeff(-4) == Rational(2));
}

TEST_CASE("residue pairing picks the z^-1 coefficient of the product") {
    for (long m = 0; m <= 6; ++m) {
        for (long n = 0; n <= 6; ++n) {
            const Rational r =
                residue_pair(LaurentPoly::monomial(m), LaurentPoly::monomial(-1 - n));
            CHECK(r == (m == n ? Rational(1) : Rational(0)));
        }
    }

    const LaurentPoly one_plus(0, {Rational(1), Rational(1)});   // 1 + z
    const LaurentPoly one_minus(0, {Rational(1), Rational(-1)}); // 1 - z
    const LaurentPoly g(-2, {Rational(1), Rational(1)});         // z^-2 + z^-1
    CHECK(residue_pair(one_plus, g) == Rational(2));
    CHECK(residue_pair(one_minus, g) == Rational(0));
}

TEST_CASE("residue pairing is bilinear") {
    const LaurentPoly f1(-1, {Rational(2), Rational(1), Rational(3)});
    const LaurentPoly f2(0, {Rational(1), Rational(-1)});
    const LaurentPoly g(-3, {Rational(1), Rational(4), Rational(-2)});
    const Rational alpha(3, 7), beta(-5, 2);
    CHECK(residue_pair(f1.scaled(alpha) + f2.scaled(beta), g) ==
          alpha * residue_pair(f1, g) + beta * residue_pair(f2, g));
}

TEST_CASE("truncated series arithmetic") {
    const TruncatedSeries e3 = TruncatedSeries::exp(3);
    CHECK(e3.coeff(0) == Rational(1));
    CHECK(e3.coeff(1) == Rational(1));
    CHECK(e3.coeff(2) == Rational(1, 2));
    CHECK(e3.coeff(3) == Rational(1, 6));

    // e^z * e^-z = 1 through the common order
    const TruncatedSeries prod = TruncatedSeries::exp(2) * TruncatedSeries::exp(2, Rational(-1));
    CHECK(prod.order() == 2);
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(0));
    CHECK(prod.coeff(2) == Rational(0));

    // multiplying different orders keeps only the shared claim
    const TruncatedSeries a(5);
    const TruncatedSeries b(3);
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);
    CHECK_THROWS_AS((void)(a * b).coeff(4), std::out_of_range);
}

TEST_CASE("exp series truncation is consistent across orders") {
    const TruncatedSeries big = TruncatedSeries::exp(8);
    for (long m = 0; m <= 8; ++m) {
        CHECK(big.truncated(m) == TruncatedSeries::exp(m));
    }
    const TruncatedSeries scaled = TruncatedSeries::exp(6, Rational(-2));
    for (long m = 0; m <= 6; ++m) {
        CHECK(scaled.truncated(m) == TruncatedSeries::exp(m, Rational(-2)));
    }
}
