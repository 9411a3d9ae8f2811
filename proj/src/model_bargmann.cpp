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

#include "krw/model_bargmann.hpp"

#include "krw/combinatorics.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/parallel.hpp"

#include <stdexcept>
#include <string>

namespace krw {

using detail::MonomialBasis;
using detail::MonomialTerm;

static void check_k(int k, int N, const char* who) {
    if (N < 1 || k < 0 || k > N) {
        throw std::out_of_range(std::string(who) + ": k must lie in 0..N");
    }
}

ModelOperators bargmann_operators(int N) {
    if (N < 1) {
        throw std::out_of_range("bargmann_operators: N must be >= 1");
    }
    MonomialBasis basis;
    basis.N = N;
    basis.exponent_of = [](int n) { return static_cast<long>(n); };
    basis.basis_coeff = [](int) { return Rational(1); };

    ModelOperators ops;
    ops.N = N;
    ops.adjoint = false;
    ops.j0 = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(2 * p - N, 2), p}}; }, '0',
        ops.truncations);
    ops.jp = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(p - N), p + 1}}; }, '+',
        ops.truncations);
    ops.jm = detail::build_monomial_operator(
        basis, [](long p) { return std::vector<MonomialTerm>{{Rational(-p), p - 1}}; }, '-',
        ops.truncations);
    return ops;
}

ModelOperators bargmann_adjoint_operators(int N) {
    if (N < 1) {
        throw std::out_of_range("bargmann_adjoint_operators: N must be >= 1");
    }
    MonomialBasis basis;
    basis.N = N;
    basis.exponent_of = [](int n) { return static_cast<long>(-1 - n); };
    basis.basis_coeff = [](int) { return Rational(1); };

    ModelOperators ops;
    ops.N = N;
    ops.adjoint = true;
    // -z d/dz - N/2 - 1 on z^p
    ops.j0 = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(-2 * p - N - 2, 2), p}}; },
        '0', ops.truncations);
    // -z^2 d/dz - (N+2) z on z^p
    ops.jp = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(-p - N - 2), p + 1}}; },
        '+', ops.truncations);
    // d/dz on z^p
    ops.jm = detail::build_monomial_operator(
        basis, [](long p) { return std::vector<MonomialTerm>{{Rational(p), p - 1}}; }, '-',
        ops.truncations);
    return ops;
}

Poly bargmann_lambda_product(int k, int N) {
    check_k(k, N, "bargmann_lambda_product");
    const Poly one_minus{Rational(1), Rational(-1)};
    const Poly one_plus{Rational(1), Rational(1)};
    return one_minus.pow(k) * one_plus.pow(N - k);
}

Poly bargmann_lambda_sum(int k, int N) {
    check_k(k, N, "bargmann_lambda_sum");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = binomial(N, n) * krawtchouk(n, k, N);
    }
    return Poly(std::move(c));
}

Poly bargmann_ode_residual(int k, int N, const Poly& p) {
    const Poly dp = p.derivative();
    return dp.shifted(2) - dp - p.shifted(1).scaled(Rational(N)) + p.scaled(Rational(N - 2L * k));
}

Poly bargmann_lambda(int k, int N) {
    const Poly prod = bargmann_lambda_product(k, N);
    if (prod != bargmann_lambda_sum(k, N)) {
        throw std::logic_error("bargmann_lambda: product and sum forms disagree");
    }
    if (!bargmann_ode_residual(k, N, prod).is_zero()) {
        throw std::logic_error("bargmann_lambda: ODE residual nonzero");
    }
    return prod;
}

std::vector<Rational> bargmann_star_coeffs_recurrence(int k, int N) {
    check_k(k, N, "bargmann_star_coeffs_recurrence");
    std::vector<Rational> a(static_cast<std::size_t>(N) + 1);
    a[0] = Rational(1);
    for (int n = 0; n < N; ++n) {
        const Rational prev = (n > 0) ? a[static_cast<std::size_t>(n - 1)] : Rational(0);
        // (n-N) a_{n+1} = n a_{n-1} - (N-2k) a_n
        a[static_cast<std::size_t>(n + 1)] =
            (Rational(n) * prev - Rational(N - 2L * k) * a[static_cast<std::size_t>(n)]) /
            Rational(n - N);
    }
    // the dropped z^{-2-N} term makes row N close automatically; check it
    const Rational closure =
        Rational(-N) * a[static_cast<std::size_t>(N - 1)] +
        Rational(N - 2L * k) * a[static_cast<std::size_t>(N)];
    if (!closure.is_zero()) {
        throw std::logic_error("bargmann_star_coeffs_recurrence: last row does not close");
    }
    return a;
}

static LaurentPoly laurent_from_descending(const std::vector<Rational>& a) {
    // a_n multiplies z^{-1-n}; store ascending exponents -1-N .. -1
    const std::size_t len = a.size();
    std::vector<Rational> c(len);
    for (std::size_t n = 0; n < len; ++n) {
        c[len - 1 - n] = a[n];
    }
    return LaurentPoly(-static_cast<long>(len), std::move(c));
}

LaurentPoly bargmann_lambda_star(int k, int N) {
    const std::vector<Rational> a = bargmann_star_coeffs_recurrence(k, N);
    for (int n = 0; n <= N; ++n) {
        if (a[static_cast<std::size_t>(n)] != krawtchouk(n, k, N)) {
            throw std::logic_error("bargmann_lambda_star: coefficients differ from K_n(k)");
        }
    }
    // verify against the projected matrix eigenproblem
    const ModelOperators ops = bargmann_adjoint_operators(N);
    const Matrix x = (ops.jp + ops.jm).scaled(Rational(1, 2));
    const Rational value(2L * k - N, 2);
    const std::vector<Rational> lhs = x.apply(a);
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (lhs[n] != value * a[n]) {
            throw std::logic_error("bargmann_lambda_star: eigen residual nonzero");
        }
    }
    return laurent_from_descending(a);
}

LaurentPoly truncated_2f1_laurent(int k, int N) {
    check_k(k, N, "truncated_2f1_laurent");
    // expand in u = 1/z up to u^{N+1}:
    //   1/(z-1)   = u/(1-u)
    //   2/(1-z)   = -2u/(1-u)
    const long order = N + 1;
    TruncatedSeries geom(order);
    {
        std::vector<Rational> g(static_cast<std::size_t>(order) + 1, Rational(1));
        geom = TruncatedSeries(order, std::move(g));
    }
    TruncatedSeries u_shift(order, {Rational(0), Rational(1)});
    const TruncatedSeries s = u_shift * geom;            // u/(1-u)
    const TruncatedSeries w = s.scaled(Rational(-2));    // -2u/(1-u)

    // 2F1(1, -k; -N; w) = sum_{j=0}^{k} ((-k)_j / (-N)_j) w^j
    TruncatedSeries hyp(order);
    TruncatedSeries wpow(order, {Rational(1)});
    Rational ratio(1);
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            ratio *= Rational(j - 1L - k) / Rational(j - 1L - N);
            wpow = wpow * w;
        }
        hyp = hyp + wpow.scaled(ratio);
    }
    const TruncatedSeries expansion = s * hyp;

    // coefficient of u^{1+n} becomes the z^{-1-n} term, n = 0..N
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(N - n)] = expansion.coeff(1 + n);
    }
    return LaurentPoly(-(N + 1L), std::move(c));
}

LaurentPoly truncated_2f1_form(int k, int N) {
    const LaurentPoly expansion = truncated_2f1_laurent(k, N);
    if (expansion != bargmann_lambda_star(k, N)) {
        throw std::logic_error("truncated_2f1_form: expansion differs from lambda_star");
    }
    return expansion;
}

static Matrix bargmann_biorthogonality_impl(int N, Exec exec) {
    if (N < 1) {
        throw std::out_of_range("bargmann_biorthogonality: N must be >= 1");
    }
    std::vector<LaurentPoly> lam(static_cast<std::size_t>(N) + 1);
    std::vector<LaurentPoly> lam_star(static_cast<std::size_t>(N) + 1);
    const Matrix t = detail::krawtchouk_table_impl(N, exec);
    parallel_for(
        N + 1L,
        [&](std::int64_t kk) {
            const int k = static_cast<int>(kk);
            lam[static_cast<std::size_t>(k)] =
                LaurentPoly::from_poly(bargmann_lambda_product(k, N));
            std::vector<Rational> a(static_cast<std::size_t>(N) + 1);
            for (int n = 0; n <= N; ++n) {
                a[static_cast<std::size_t>(n)] = t.at(n, k);
            }
            lam_star[static_cast<std::size_t>(k)] = laurent_from_descending(a);
        },
        exec);
    Matrix g(N + 1, N + 1);
    parallel_for(
        (N + 1L) * (N + 1L),
        [&](std::int64_t idx) {
            const int k = static_cast<int>(idx / (N + 1));
            const int l = static_cast<int>(idx % (N + 1));
            g.at(k, l) = residue_pair(lam[static_cast<std::size_t>(k)],
                                      lam_star[static_cast<std::size_t>(l)]);
        },
        exec);
    return g;
}

Matrix bargmann_biorthogonality(int N) {
    return bargmann_biorthogonality_impl(N, Exec::parallel);
}

Matrix bargmann_biorthogonality_serial(int N) {
    return bargmann_biorthogonality_impl(N, Exec::serial);
}

} // namespace krw
