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
#include "krw/model_bargmann.hpp"
#include "krw/model_bg.hpp"
#include "krw/model_fd.hpp"
#include "krw/su2.hpp"

using namespace krw;

TEST_CASE("multiplication operator needs exactly one truncation per side") {
    for (int N : {1, 3, 7}) {
        const ModelOperators pos = bg_operators(N);
        REQUIRE(pos.truncations.size() == 1);
        CHECK(pos.truncations[0] == HandTruncation{'+', N});

        const ModelOperators adj = bg_adjoint_operators(N);
        REQUIRE(adj.truncations.size() == 1);
        CHECK(adj.truncations[0] == HandTruncation{'+', 0});

        // the second-order lowering operator annihilates its end naturally
        for (int i = 0; i <= N; ++i) {
            CHECK(pos.jm.at(i, 0) == Rational(0));
            CHECK(adj.jm.at(i, N) == Rational(0));
        }
    }
}

TEST_CASE("normalized-basis matrices reproduce the weight-basis actions") {
    // z on the normalized basis at N=1: column 0 carries -1
    const ModelOperators ops1 = bg_operators(1);
    CHECK(ops1.jp.at(1, 0) == Rational(-1));

    for (int N : {1, 2, 3, 8}) {
        const ModelOperators pos = bg_operators(N);
        const RepMatrices rep = build_irrep(N);
        CHECK(pos.j0 == rep.j0);
        CHECK(pos.jp == rep.jp);
        CHECK(pos.jm == rep.jm);
        CHECK(satisfies_su2(pos.j0, pos.raising(), pos.lowering()));
        CHECK(casimir(pos.j0, pos.raising(), pos.lowering()) ==
              Matrix::identity(N + 1).scaled(casimir_value(N)));

        const ModelOperators adj = bg_adjoint_operators(N);
        CHECK(satisfies_su2(adj.j0, adj.raising(), adj.lowering()));
        CHECK(casimir(adj.j0, adj.raising(), adj.lowering()) ==
              Matrix::identity(N + 1).scaled(casimir_value(N)));
    }
}

TEST_CASE("eigenfunction series") {
    CHECK(bg_lambda(0, 1) == Poly{Rational(1), Rational(-1)});
    CHECK(bg_lambda(1, 2) == Poly{Rational(1), Rational(0), Rational(-1, 2)});

    for (int N = 1; N <= 8; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(bg_lambda_sum(k, N) == bg_lambda_series(k, N));
            const Poly res = bg_ode_residual(k, N, bg_lambda_sum(k, N));
            for (int j = 0; j <= N; ++j) {
                CHECK(res.coeff(j) == Rational(0));
            }
            // first defect sits right above the truncation order
            CHECK(res.coeff(N + 1) == bg_lambda_sum(k, N).coeff(N));
            CHECK(res.coeff(N + 1) != Rational(0));
        }
    }
}

TEST_CASE("exponential-form generating identity") {
    for (int k = 0; k <= 5; ++k) {
        CHECK(bg_generating_series(k, 5) == bg_generating_sum(k, 5));
    }
}

TEST_CASE("adjoint eigenfunction forms") {
    const LaurentPoly a = bg_lambda_star(0, 1); // z^-1 - z^-2
    CHECK(a.coeff(-1) == Rational(1));
    CHECK(a.coeff(-2) == Rational(-1));

    // closed form at N=1, k=0: -1! z^-2 [e^z(1-2z)]_1 = z^-1 - z^-2
    const LaurentPoly c = bg_lambda_star_closed(0, 1);
    CHECK(c.coeff(-1) == Rational(1));
    CHECK(c.coeff(-2) == Rational(-1));

    for (int N = 1; N <= 8; ++N) {
        for (int k = 0; k <= N; ++k) {
            CHECK(bg_lambda_star_sum(k, N) == bg_lambda_star_closed(k, N));
        }
    }
}

TEST_CASE("pairing matches the other models") {
    const Matrix g2 = bg_biorthogonality(2);
    CHECK(g2.at(0, 0) == Rational(4));
    CHECK(g2.at(1, 1) == Rational(2));
    CHECK(g2.at(2, 2) == Rational(4));

    const Matrix g8 = bg_biorthogonality(8);
    for (int k = 0; k <= 8; ++k) {
        for (int l = 0; l <= 8; ++l) {
            CHECK(g8.at(k, l) == (k == l ? orthogonality_norm(k, 8) : Rational(0)));
        }
    }

    CHECK(bg_biorthogonality(6) == bargmann_biorthogonality(6));
    CHECK(bg_biorthogonality(6) == fd_biorthogonality(6));
}

TEST_CASE("mirror-reflected generating identities") {
    // N=2, k=0 walked through: reflected series vs K_{2-n}(0) = (1,1,1)
    const Poly lhs = bg_generating_series_reflected(0, 2);
    const Poly rhs = bg_generating_sum_reflected(0, 2);
    CHECK(lhs == rhs); // sign (-1)^0 = 1
    CHECK(rhs == Poly{Rational(1), Rational(1), Rational(1, 2)});

    for (int k = 0; k <= 7; ++k) {
        CHECK(mirror_generating_check(k, 7));
    }
    // at k = 0 the reflected identity is the plain one with all signs +1
    for (int N = 1; N <= 6; ++N) {
        CHECK(mirror_generating_check(0, N));
        CHECK(bg_generating_series_reflected(0, N) == bg_generating_sum(0, N));
    }
}
