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

#include "krw/su2.hpp"

#include "krw/combinatorics.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/parallel.hpp"

#include <stdexcept>
#include <string>

namespace krw {

static void check_N(int N, const char* who) {
    if (N < 1) {
        throw std::out_of_range(std::string(who) + ": N must be >= 1");
    }
}

static void check_k(int k, int N, const char* who) {
    check_N(N, who);
    if (k < 0 || k > N) {
        throw std::out_of_range(std::string(who) + ": k must lie in 0..N");
    }
}

RepMatrices build_irrep(int N) {
    check_N(N, "build_irrep");
    RepMatrices rep;
    rep.N = N;
    rep.basis = Basis::plain;
    rep.j0 = Matrix(N + 1, N + 1);
    rep.jp = Matrix(N + 1, N + 1);
    rep.jm = Matrix(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        rep.j0.at(n, n) = Rational(2L * n - N, 2);
        if (n < N) {
            rep.jp.at(n + 1, n) = Rational(n - N);
        }
        if (n > 0) {
            rep.jm.at(n - 1, n) = Rational(-n);
        }
    }
    return rep;
}

RepMatrices build_tilde_rep(int N) {
    const RepMatrices plain = build_irrep(N);
    RepMatrices rep;
    rep.N = N;
    rep.basis = Basis::tilde;
    rep.j0 = plain.j0.transpose();
    rep.jp = plain.jm.transpose(); // the transposed lowering operator raises
    rep.jm = plain.jp.transpose();
    return rep;
}

RepMatrices build_star_rep(int N) {
    check_N(N, "build_star_rep");
    RepMatrices rep;
    rep.N = N;
    rep.basis = Basis::star;
    rep.j0 = Matrix(N + 1, N + 1);
    rep.jp = Matrix(N + 1, N + 1);
    rep.jm = Matrix(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        rep.j0.at(n, n) = Rational(2L * n - N, 2);
        if (n < N) {
            rep.jp.at(n + 1, n) = Rational(n - N); // raising action (n-N)|n+1>*
        }
        if (n > 0) {
            rep.jm.at(n - 1, n) = Rational(-n); // lowering action -n|n-1>*
        }
    }
    return rep;
}

Matrix star_rescaling(int N) {
    check_N(N, "star_rescaling");
    std::vector<Rational> d(static_cast<std::size_t>(N) + 1);
    const Rational nfact = factorial(N);
    for (int n = 0; n <= N; ++n) {
        d[static_cast<std::size_t>(n)] = factorial(n) * factorial(N - n) / nfact;
    }
    return Matrix::diagonal(d);
}

Matrix casimir(const Matrix& j0, const Matrix& raising, const Matrix& lowering) {
    return j0 * j0 - j0 + raising * lowering;
}

Matrix casimir(const RepMatrices& rep) {
    return casimir(rep.j0, rep.jp, rep.jm);
}

Rational casimir_value(int N) {
    return Rational(N, 2) * (Rational(N, 2) + Rational(1));
}

Matrix cr_defect_raise(const Matrix& j0, const Matrix& raising) {
    return commutator(j0, raising) - raising;
}

Matrix cr_defect_lower(const Matrix& j0, const Matrix& lowering) {
    return commutator(j0, lowering) + lowering;
}

Matrix cr_defect_pair(const Matrix& j0, const Matrix& raising, const Matrix& lowering) {
    return commutator(raising, lowering) - j0.scaled(Rational(2));
}

bool satisfies_su2(const Matrix& j0, const Matrix& raising, const Matrix& lowering) {
    return cr_defect_raise(j0, raising).is_zero() && cr_defect_lower(j0, lowering).is_zero() &&
           cr_defect_pair(j0, raising, lowering).is_zero();
}

std::vector<Rational> x_coeffs_recurrence(int k, int N) {
    check_k(k, N, "x_coeffs_recurrence");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[0] = Rational(1);
    for (int n = 0; n < N; ++n) {
        const Rational prev = (n > 0) ? c[static_cast<std::size_t>(n - 1)] : Rational(0);
        c[static_cast<std::size_t>(n + 1)] =
            (Rational(N - 2L * k) * c[static_cast<std::size_t>(n)] -
             Rational(N + 1L - n) * prev) /
            Rational(n + 1);
    }
    return c;
}

std::vector<Rational> x_coeffs_closed(int k, int N) {
    check_k(k, N, "x_coeffs_closed");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = binomial(N, n) * krawtchouk(n, k, N);
    }
    return c;
}

static void verify_eigen(const Matrix& op, const std::vector<Rational>& v, const Rational& value,
                         const char* who) {
    const std::vector<Rational> lhs = op.apply(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (lhs[i] != value * v[i]) {
            throw std::logic_error(std::string(who) + ": eigen residual nonzero");
        }
    }
}

EigenPair x_eigenvector(int k, int N) {
    check_k(k, N, "x_eigenvector");
    EigenPair p;
    p.k = k;
    p.value = Rational(2L * k - N, 2);
    p.coeffs = x_coeffs_recurrence(k, N);
    const RepMatrices rep = build_irrep(N);
    const Matrix x = (rep.jp + rep.jm).scaled(Rational(1, 2));
    verify_eigen(x, p.coeffs, p.value, "x_eigenvector");
    if (p.coeffs != x_coeffs_closed(k, N)) {
        throw std::logic_error("x_eigenvector: closed form mismatch");
    }
    return p;
}

EigenPair x_adjoint_eigenvector(int k, int N) {
    check_k(k, N, "x_adjoint_eigenvector");
    EigenPair p;
    p.k = k;
    p.value = Rational(2L * k - N, 2);
    p.coeffs.resize(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        p.coeffs[static_cast<std::size_t>(n)] = krawtchouk(n, k, N);
    }
    const RepMatrices tilde = build_tilde_rep(N);
    const Matrix xt = (tilde.jp + tilde.jm).scaled(Rational(1, 2));
    verify_eigen(xt, p.coeffs, p.value, "x_adjoint_eigenvector");
    return p;
}

static Matrix biorthogonality_gram_impl(int N, Exec exec) {
    check_N(N, "biorthogonality_gram");
    const Matrix t = detail::krawtchouk_table_impl(N, exec);
    std::vector<Rational> weight(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        weight[static_cast<std::size_t>(n)] = binomial(N, n);
    }
    Matrix g(N + 1, N + 1);
    parallel_for(
        (N + 1L) * (N + 1L),
        [&](std::int64_t idx) {
            const int k = static_cast<int>(idx / (N + 1));
            const int l = static_cast<int>(idx % (N + 1));
            if (l < k) {
                return;
            }
            Rational s(0);
            for (int n = 0; n <= N; ++n) {
                s += weight[static_cast<std::size_t>(n)] * t.at(n, k) * t.at(n, l);
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

Matrix biorthogonality_gram(int N) {
    return biorthogonality_gram_impl(N, Exec::parallel);
}

Matrix biorthogonality_gram_serial(int N) {
    return biorthogonality_gram_impl(N, Exec::serial);
}

} // namespace krw
