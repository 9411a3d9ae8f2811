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
#include "krw/model_fd.hpp"
#include "krw/su2.hpp"

using namespace krw;

TEST_CASE("shift-operator matrices") {
    const RepMatrices fd1 = fd_operators(1);
    CHECK(fd1.j0.at(0, 0) == Rational(-1, 2));
    CHECK(fd1.j0.at(1, 1) == Rational(1, 2));

    for (int N : {1, 2, 4, 8}) {
        const RepMatrices fd = fd_operators(N);
        CHECK(satisfies_su2(fd.j0, fd.jp, fd.jm));
        CHECK(casimir(fd) == Matrix::identity(N + 1).scaled(casimir_value(N)));
        // same matrices as the weight-basis construction
        const RepMatrices rep = build_irrep(N);
        CHECK(fd.j0 == rep.j0);
        CHECK(fd.jp == rep.jp);
        CHECK(fd.jm == rep.jm);
    }
}

TEST_CASE("delta functions are weight eigenvectors") {
    const int N = 4;
    const RepMatrices fd = fd_operators(N);
    for (int n = 0; n <= N; ++n) {
        std::vector<Rational> e(static_cast<std::size_t>(N) + 1, Rational(0));
        e[static_cast<std::size_t>(n)] = Rational(1);
        const std::vector<Rational> r = fd.j0.apply(e);
        for (int s = 0; s <= N; ++s) {
            CHECK(r[static_cast<std::size_t>(s)] ==
                  Rational(2 * n - N, 2) * e[static_cast<std::size_t>(s)]);
        }
    }
}

TEST_CASE("grid eigenfunctions") {
    CHECK(fd_lambda(0, 1) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(fd_lambda(1, 2) == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
    for (int k = 0; k <= 6; ++k) {
        CHECK_NOTHROW((void)fd_lambda(k, 6)); // residual verified inside
    }
    CHECK_THROWS_AS((void)fd_lambda(3, 2), std::out_of_range);
}

TEST_CASE("adjoint grid eigenfunctions") {
    CHECK(fd_lambda_star(2, 2) == std::vector<Rational>{Rational(1), Rational(-1), Rational(1)});
    CHECK(fd_lambda_star(1, 1) == std::vector<Rational>{Rational(1), Rational(-1)});
    for (int k = 0; k <= 6; ++k) {
        CHECK_NOTHROW((void)fd_lambda_star(k, 6));
    }
}

TEST_CASE("grid pairing sums") {
    const int N = 5;
    for (int k = 0; k <= N; ++k) {
        for (int l = 0; l <= N; ++l) {
            const std::vector<Rational> a = fd_lambda_star(k, N);
            const std::vector<Rational> b = fd_lambda(l, N);
            Rational s(0);
            for (int x = 0; x <= N; ++x) {
                s += a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(x)];
            }
            CHECK(s == (k == l ? orthogonality_norm(k, N) : Rational(0)));
        }
    }
}

TEST_CASE("pairing matrix") {
    const Matrix g2 = fd_biorthogonality(2);
    CHECK(g2.at(0, 0) == Rational(4));
    CHECK(g2.at(1, 1) == Rational(2));
    CHECK(g2.at(2, 2) == Rational(4));

    const Matrix g12 = fd_biorthogonality(12);
    for (int k = 0; k <= 12; ++k) {
        for (int l = 0; l <= 12; ++l) {
            CHECK(g12.at(k, l) == (k == l ? orthogonality_norm(k, 12) : Rational(0)));
        }
    }
    CHECK(g12.at(0, 0) == rational_pow(Rational(2), 12)); // sum of the binomial weights
}

TEST_CASE("dual difference equation, derived versus doubled-shift coefficient") {
    // the derived equation (N-s) f(s+1) + s f(s-1) = (N-2k) f(s) holds
    for (int N = 1; N <= 8; ++N) {
        for (int k = 0; k <= N; ++k) {
            const std::vector<Rational> f = fd_lambda_star(k, N);
            for (int s = 0; s <= N; ++s) {
                CHECK(fd_dual_difference_residual(f, s, k, N) == Rational(0));
            }
        }
    }

    // replacing (N-s) by (N-2s) breaks it; N=2, k=0, s=1 is a counterexample
    const int N = 2, k = 0, s = 1;
    const std::vector<Rational> f = fd_lambda_star(k, N);
    const Rational doubled_shift = Rational(N - 2 * s) * f[2] + Rational(s) * f[0] -
                                   Rational(N - 2 * k) * f[1];
    CHECK(doubled_shift == Rational(-1));
    CHECK(fd_dual_difference_residual(f, s, k, N) == Rational(0));
}
