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

#include "krw/krawtchouk.hpp"

#include "krw/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace krw {

static void check_lattice(int n, int k, int N) {
    if (N < 1) {
        throw std::out_of_range("krawtchouk: N must be >= 1");
    }
    if (n < 0 || n > N || k < 0 || k > N) {
        throw std::out_of_range("krawtchouk: n and k must lie in 0..N");
    }
}

Rational krawtchouk(int n, int k, int N) {
    check_lattice(n, k, N);
    const int jmax = std::min(n, k);
    Rational sum(1);
    Rational term(1);
    for (int j = 0; j < jmax; ++j) {
        // term_{j+1} = term_j * (-n+j)(-k+j) * 2 / ((-N+j)(j+1))
        term *= Rational(2L * (j - n) * (j - k), static_cast<long>(j - N) * (j + 1));
        sum += term;
    }
    return sum;
}

static void fill_column(Matrix& t, int k, int N) {
    t.at(0, k) = Rational(1);
    if (N >= 1) {
        t.at(1, k) = Rational(N - 2L * k, N);
    }
    for (int n = 1; n < N; ++n) {
        // (N-2k) K_n = (N-n) K_{n+1} + n K_{n-1}
        t.at(n + 1, k) =
            (Rational(N - 2L * k) * t.at(n, k) - Rational(n) * t.at(n - 1, k)) / Rational(N - n);
    }
}

Matrix detail::krawtchouk_table_impl(int N, Exec exec) {
    if (N < 1) {
        throw std::out_of_range("krawtchouk_table: N must be >= 1");
    }
    Matrix t(N + 1, N + 1);
    parallel_for(
        N + 1, [&](std::int64_t k) { fill_column(t, static_cast<int>(k), N); }, exec);
    return t;
}

Matrix krawtchouk_table(int N) {
    return detail::krawtchouk_table_impl(N, Exec::parallel);
}

Matrix krawtchouk_table_serial(int N) {
    return detail::krawtchouk_table_impl(N, Exec::serial);
}

Matrix krawtchouk_table_direct(int N) {
    if (N < 1) {
        throw std::out_of_range("krawtchouk_table_direct: N must be >= 1");
    }
    Matrix t(N + 1, N + 1);
    parallel_for((N + 1L) * (N + 1L), [&](std::int64_t idx) {
        const int n = static_cast<int>(idx / (N + 1));
        const int k = static_cast<int>(idx % (N + 1));
        t.at(n, k) = krawtchouk(n, k, N);
    });
    return t;
}

Rational normalized_pn(int n, int k, int N) {
    check_lattice(n, k, N);
    return rational_pow(Rational(1, 2), n) * pochhammer(Rational(-N), n) * krawtchouk(n, k, N);
}

Rational normalized_recurrence_residual(int n, int k, int N) {
    check_lattice(n, k, N);
    // p_{N+1} carries the factor (-N)_{N+1} = 0, p_{-1} the factor n = 0
    const Rational p_n = normalized_pn(n, k, N);
    const Rational p_next = (n + 1 <= N) ? normalized_pn(n + 1, k, N) : Rational(0);
    const Rational p_prev = (n - 1 >= 0) ? normalized_pn(n - 1, k, N) : Rational(0);
    return Rational(k) * p_n - p_next - Rational(N, 2) * p_n -
           Rational(static_cast<long>(n) * (N + 1 - n), 4) * p_prev;
}

Matrix detail::orthogonality_gram_impl(int N, Exec exec) {
    if (N < 1) {
        throw std::out_of_range("orthogonality_gram: N must be >= 1");
    }
    const Matrix t = krawtchouk_table_impl(N, exec);
    std::vector<Rational> weight(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        weight[static_cast<std::size_t>(k)] = binomial(N, k);
    }
    Matrix g(N + 1, N + 1);
    parallel_for(
        (N + 1L) * (N + 1L),
        [&](std::int64_t idx) {
            const int m = static_cast<int>(idx / (N + 1));
            const int n = static_cast<int>(idx % (N + 1));
            if (n < m) {
                return; // filled from the (m,n) pass below
            }
            Rational s(0);
            for (int k = 0; k <= N; ++k) {
                s += weight[static_cast<std::size_t>(k)] * t.at(m, k) * t.at(n, k);
            }
            g.at(m, n) = s;
        },
        exec);
    for (int m = 0; m <= N; ++m) {
        for (int n = 0; n < m; ++n) {
            g.at(m, n) = g.at(n, m);
        }
    }
    return g;
}

Matrix orthogonality_gram(int N) {
    return detail::orthogonality_gram_impl(N, Exec::parallel);
}

Matrix orthogonality_gram_serial(int N) {
    return detail::orthogonality_gram_impl(N, Exec::serial);
}

Rational orthogonality_norm(int n, int N) {
    if (N < 1 || n < 0 || n > N) {
        throw std::out_of_range("orthogonality_norm: n must lie in 0..N");
    }
    return rational_pow(Rational(2), N) * sign_pow(n) * factorial(n) /
           pochhammer(Rational(-N), n);
}

bool mirror_check(int n, int k, int N) {
    check_lattice(n, k, N);
    return krawtchouk(N - n, k, N) == sign_pow(k) * krawtchouk(n, k, N);
}

} // namespace krw
