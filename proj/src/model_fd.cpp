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

#include "krw/model_fd.hpp"

#include "krw/combinatorics.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/parallel.hpp"

#include <stdexcept>
#include <string>

namespace krw {

RepMatrices fd_operators(int N) {
    if (N < 1) {
        throw std::out_of_range("fd_operators: N must be >= 1");
    }
    RepMatrices rep;
    rep.N = N;
    rep.basis = Basis::plain;
    rep.j0 = Matrix(N + 1, N + 1);
    rep.jp = Matrix(N + 1, N + 1);
    rep.jm = Matrix(N + 1, N + 1);
    for (int s = 0; s <= N; ++s) {
        rep.j0.at(s, s) = Rational(2L * s - N, 2);
        if (s >= 1) {
            // (jp f)(s) = -(N-s+1) f(s-1)
            rep.jp.at(s, s - 1) = Rational(-(N - s + 1L));
        }
        if (s + 1 <= N) {
            // (jm f)(s) = -(s+1) f(s+1)
            rep.jm.at(s, s + 1) = Rational(-(s + 1L));
        }
    }
    return rep;
}

static void check_k(int k, int N, const char* who) {
    if (N < 1 || k < 0 || k > N) {
        throw std::out_of_range(std::string(who) + ": k must lie in 0..N");
    }
}

std::vector<Rational> fd_lambda(int k, int N) {
    check_k(k, N, "fd_lambda");
    std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
    for (int s = 0; s <= N; ++s) {
        v[static_cast<std::size_t>(s)] = binomial(N, s) * krawtchouk(k, s, N);
    }
    const RepMatrices rep = fd_operators(N);
    const Matrix x = (rep.jp + rep.jm).scaled(Rational(1, 2));
    const Rational value(2L * k - N, 2);
    const std::vector<Rational> lhs = x.apply(v);
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (lhs[s] != value * v[s]) {
            throw std::logic_error("fd_lambda: eigen residual nonzero");
        }
    }
    return v;
}

std::vector<Rational> fd_lambda_star(int k, int N) {
    check_k(k, N, "fd_lambda_star");
    std::vector<Rational> v(static_cast<std::size_t>(N) + 1);
    for (int s = 0; s <= N; ++s) {
        v[static_cast<std::size_t>(s)] = krawtchouk(k, s, N);
    }
    const RepMatrices rep = fd_operators(N);
    const Matrix xt = (rep.jp.transpose() + rep.jm.transpose()).scaled(Rational(1, 2));
    const Rational value(2L * k - N, 2);
    const std::vector<Rational> lhs = xt.apply(v);
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (lhs[s] != value * v[s]) {
            throw std::logic_error("fd_lambda_star: eigen residual nonzero");
        }
    }
    return v;
}

static Matrix fd_biorthogonality_impl(int N, Exec exec) {
    if (N < 1) {
        throw std::out_of_range("fd_biorthogonality: N must be >= 1");
    }
    const Matrix t = detail::krawtchouk_table_impl(N, exec);
    std::vector<Rational> weight(static_cast<std::size_t>(N) + 1);
    for (int s = 0; s <= N; ++s) {
        weight[static_cast<std::size_t>(s)] = binomial(N, s);
    }
    Matrix g(N + 1, N + 1);
    // lambda*_k(s) lambda_l(s) = K_k(s) C(N,s) K_l(s); use the table rows
    parallel_for(
        (N + 1L) * (N + 1L),
        [&](std::int64_t idx) {
            const int k = static_cast<int>(idx / (N + 1));
            const int l = static_cast<int>(idx % (N + 1));
            if (l < k) {
                return;
            }
            Rational s(0);
            for (int x = 0; x <= N; ++x) {
                s += weight[static_cast<std::size_t>(x)] * t.at(k, x) * t.at(l, x);
            }
            g.at(k, l) = s;
        },
        exec);
    for (int k = 0; k <= N; ++k) {
        for (int l = 0; l < k; ++l) {
            g.at(k, l) = g.at(l, k);
        }
    }
    return g;
}

Matrix fd_biorthogonality(int N) {
    return fd_biorthogonality_impl(N, Exec::parallel);
}

Matrix fd_biorthogonality_serial(int N) {
    return fd_biorthogonality_impl(N, Exec::serial);
}

Rational fd_dual_difference_residual(const std::vector<Rational>& f, int s, int k, int N) {
    if (static_cast<int>(f.size()) != N + 1) {
        throw std::invalid_argument("fd_dual_difference_residual: wrong grid length");
    }
    check_k(k, N, "fd_dual_difference_residual");
    if (s < 0 || s > N) {
        throw std::out_of_range("fd_dual_difference_residual: s must lie in 0..N");
    }
    const Rational up = (s + 1 <= N) ? f[static_cast<std::size_t>(s + 1)] : Rational(0);
    const Rational down = (s - 1 >= 0) ? f[static_cast<std::size_t>(s - 1)] : Rational(0);
    return Rational(N - s) * up + Rational(s) * down -
           Rational(N - 2L * k) * f[static_cast<std::size_t>(s)];
}

} // namespace krw
