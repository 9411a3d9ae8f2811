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
#include "krw/krawtchouk.hpp"

using namespace krw;

TEST_CASE("point evaluation") {
    for (int N = 1; N <= 6; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(krawtchouk(0, k, N) == Rational(1));
            CHECK(krawtchouk(k, 0, N) == Rational(1));
        }
    }
    CHECK(krawtchouk(1, 1, 2) == Rational(0));
    CHECK(krawtchouk(2, 1, 2) == Rational(-1));
    CHECK_THROWS_AS((void)krawtchouk(3, 0, 2), std::out_of_range);
    CHECK_THROWS_AS((void)krawtchouk(0, -1, 2), std::out_of_range);
}

TEST_CASE("small tables") {
    const Matrix t1 = krawtchouk_table(1);
    CHECK(t1.at(0, 0) == Rational(1));
    CHECK(t1.at(0, 1) == Rational(1));
    CHECK(t1.at(1, 0) == Rational(1));
    CHECK(t1.at(1, 1) == Rational(-1));

    const Matrix t2 = krawtchouk_table(2);
    const Rational expected[3][3] = {{1, 1, 1}, {1, 0, -1}, {1, -1, 1}};
    for (int n = 0; n < 3; ++n) {
        for (int k = 0; k < 3; ++k) {
            CHECK(t2.at(n, k) == expected[n][k]);
        }
    }
}

TEST_CASE("recurrence table equals direct hypergeometric sums") {
    for (int N = 1; N <= 30; ++N) {
        CHECK(krawtchouk_table(N) == krawtchouk_table_direct(N));
    }
}

TEST_CASE("duality: the table is symmetric") {
    for (int N = 1; N <= 30; ++N) {
        const Matrix t = krawtchouk_table(N);
        CHECK(t == t.transpose());
    }
}

TEST_CASE("row 0 and column 0 are all ones") {
    for (int N : {1, 2, 7, 19}) {
        const Matrix t = krawtchouk_table(N);
        for (int i = 0; i <= N; ++i) {
            CHECK(t.at(0, i) == Rational(1));
            CHECK(t.at(i, 0) == Rational(1));
        }
    }
}

TEST_CASE("normalized values") {
    for (int N = 1; N <= 5; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(normalized_pn(0, k, N) == Rational(1));
        }
    }
    CHECK(normalized_pn(1, 0, 2) == Rational(-1));
}

TEST_CASE("normalized three-term recurrence holds on the lattice") {
    CHECK(normalized_recurrence_residual(1, 1, 2) == Rational(0));
    for (int N = 1; N <= 14; ++N) {
        for (int n = 0; n <= N; ++n) {
            for (int k = 0; k <= N; ++k) {
                CHECK(normalized_recurrence_residual(n, k, N) == Rational(0));
            }
        }
    }
}

TEST_CASE("orthogonality gram is diagonal with the closed-form norms") {
    const Matrix g2 = orthogonality_gram(2);
    CHECK(g2.at(0, 0) == Rational(4));
    CHECK(g2.at(1, 1) == Rational(2));
    CHECK(g2.at(2, 2) == Rational(4));
    CHECK(g2.at(0, 1) == Rational(0));

    for (int N = 1; N <= 30; ++N) {
        const Matrix g = orthogonality_gram(N);
        for (int m = 0; m <= N; ++m) {
            for (int n = 0; n <= N; ++n) {
                CHECK(g.at(m, n) == (m == n ? orthogonality_norm(n, N) : Rational(0)));
            }
        }
        // the top norm collapses to 2^N
        CHECK(orthogonality_norm(N, N) == rational_pow(Rational(2), N));
        CHECK(g.at(0, 1) == Rational(0));
    }
}

TEST_CASE("mirror symmetry on the full lattice") {
    for (int n = 0; n <= 7; ++n) {
        for (int k = 0; k <= 7; ++k) {
            CHECK(mirror_check(n, k, 7));
        }
    }
    // row N against row 0: values (-1)^k
    const Matrix t = krawtchouk_table(2);
    CHECK(t.at(2, 0) == Rational(1));
    CHECK(t.at(2, 1) == Rational(-1));
    CHECK(t.at(2, 2) == Rational(1));
    for (int N = 1; N <= 30; ++N) {
        for (int n = 0; n <= N; ++n) {
            CHECK(mirror_check(n, 0, N)); // trivially true at k = 0
            for (int k = 1; k <= N; ++k) {
                CHECK(mirror_check(n, k, N));
            }
        }
    }
}
