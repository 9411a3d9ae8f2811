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

#include "krw/model_bg.hpp"

#include "krw/combinatorics.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/pade.hpp"
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

ModelOperators bg_operators(int N) {
    if (N < 1) {
        throw std::out_of_range("bg_operators: N must be >= 1");
    }
    MonomialBasis basis;
    basis.N = N;
    basis.exponent_of = [](int n) { return static_cast<long>(n); };
    basis.basis_coeff = [N](int n) {
        return Rational(1) / pochhammer(Rational(-N), n);
    };

    ModelOperators ops;
    ops.N = N;
    ops.adjoint = false;
    ops.j0 = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(2 * p - N, 2), p}}; }, '0',
        ops.truncations);
    // multiplication by z
    ops.jp = detail::build_monomial_operator(
        basis, [](long p) { return std::vector<MonomialTerm>{{Rational(1), p + 1}}; }, '+',
        ops.truncations);
    // -z d^2/dz^2 + N d/dz on z^p gives p(N-p+1) z^{p-1}
    ops.jm = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(p * (N - p + 1)), p - 1}}; },
        '-', ops.truncations);
    return ops;
}

ModelOperators bg_adjoint_operators(int N) {
    if (N < 1) {
        throw std::out_of_range("bg_adjoint_operators: N must be >= 1");
    }
    MonomialBasis basis;
    basis.N = N;
    basis.exponent_of = [](int n) { return static_cast<long>(-1 - n); };
    basis.basis_coeff = [](int n) { return sign_pow(n) * factorial(n); };

    ModelOperators ops;
    ops.N = N;
    ops.adjoint = true;
    ops.j0 = detail::build_monomial_operator(
        basis, [N](long p) { return std::vector<MonomialTerm>{{Rational(-2 * p - N - 2, 2), p}}; },
        '0', ops.truncations);
    ops.jp = detail::build_monomial_operator(
        basis, [](long p) { return std::vector<MonomialTerm>{{Rational(1), p + 1}}; }, '+',
        ops.truncations);
    // -z d^2/dz^2 - (N+2) d/dz on z^p gives -p(p+N+1) z^{p-1}
    ops.jm = detail::build_monomial_operator(
        basis,
        [N](long p) { return std::vector<MonomialTerm>{{Rational(-p * (p + N + 1)), p - 1}}; }, '-',
        ops.truncations);
    return ops;
}

Poly bg_lambda_sum(int k, int N) {
    check_k(k, N, "bg_lambda_sum");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = sign_pow(n) / factorial(n) * krawtchouk(n, k, N);
    }
    return Poly(std::move(c));
}

Poly bg_lambda_series(int k, int N) {
    check_k(k, N, "bg_lambda_series");
    const TruncatedSeries s = TruncatedSeries::exp(N, Rational(-1)) * truncated_1f1(-k, N, Rational(2));
    return s.to_poly();
}

Poly bg_ode_residual(int k, int N, const Poly& p) {
    const Poly d2 = p.derivative().derivative();
    return -d2.shifted(1) + p.derivative().scaled(Rational(N)) + p.shifted(1) +
           p.scaled(Rational(N - 2L * k));
}

Poly bg_lambda(int k, int N) {
    const Poly sum = bg_lambda_sum(k, N);
    if (sum != bg_lambda_series(k, N)) {
        throw std::logic_error("bg_lambda: series and sum forms disagree");
    }
    const Poly res = bg_ode_residual(k, N, sum);
    for (int j = 0; j <= N; ++j) {
        if (!res.coeff(j).is_zero()) {
            throw std::logic_error("bg_lambda: ODE residual nonzero below the truncation order");
        }
    }
    return sum;
}

Poly bg_generating_series(int k, int N) {
    check_k(k, N, "bg_generating_series");
    const TruncatedSeries s = TruncatedSeries::exp(N) * truncated_1f1(-k, N, Rational(-2));
    return s.to_poly();
}

Poly bg_generating_sum(int k, int N) {
    check_k(k, N, "bg_generating_sum");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = krawtchouk(n, k, N) / factorial(n);
    }
    return Poly(std::move(c));
}

Poly bg_generating_series_reflected(int k, int N) {
    check_k(k, N, "bg_generating_series_reflected");
    const TruncatedSeries s =
        TruncatedSeries::exp(N, Rational(-1)) * truncated_1f1(static_cast<long>(k) - N, N, Rational(2));
    return s.to_poly();
}

Poly bg_generating_sum_reflected(int k, int N) {
    check_k(k, N, "bg_generating_sum_reflected");
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(n)] = krawtchouk(N - n, k, N) / factorial(n);
    }
    return Poly(std::move(c));
}

LaurentPoly bg_lambda_star_sum(int k, int N) {
    check_k(k, N, "bg_lambda_star_sum");
    // coefficient of z^{-1-n} is (-1)^n (N!/(N-n)!) K_n(k); store ascending
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    const Rational nfact = factorial(N);
    for (int n = 0; n <= N; ++n) {
        c[static_cast<std::size_t>(N - n)] =
            sign_pow(n) * nfact / factorial(N - n) * krawtchouk(n, k, N);
    }
    return LaurentPoly(-(N + 1L), std::move(c));
}

LaurentPoly bg_lambda_star_closed(int k, int N) {
    check_k(k, N, "bg_lambda_star_closed");
    const TruncatedSeries s =
        TruncatedSeries::exp(N) * truncated_1f1(static_cast<long>(k) - N, N, Rational(-2));
    const Rational prefactor = sign_pow(N - k) * factorial(N);
    // z^{-1-N} * sum_j s_j z^j
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        c[static_cast<std::size_t>(j)] = prefactor * s.coeff(j);
    }
    return LaurentPoly(-(N + 1L), std::move(c));
}

LaurentPoly bg_lambda_star(int k, int N) {
    const LaurentPoly sum = bg_lambda_star_sum(k, N);
    if (sum != bg_lambda_star_closed(k, N)) {
        throw std::logic_error("bg_lambda_star: sum and closed forms disagree");
    }
    // verify against the adjoint matrix eigenproblem in the hatted basis,
    // where the coefficients are C(N,n) K_n(k)
    const ModelOperators ops = bg_adjoint_operators(N);
    const Matrix x = (ops.jp + ops.jm).scaled(Rational(1, 2));
    std::vector<Rational> coeffs(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        coeffs[static_cast<std::size_t>(n)] = binomial(N, n) * krawtchouk(n, k, N);
    }
    const Rational value(2L * k - N, 2);
    const std::vector<Rational> lhs = x.apply(coeffs);
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (lhs[n] != value * coeffs[n]) {
            throw std::logic_error("bg_lambda_star: eigen residual nonzero");
        }
    }
    return sum;
}

static Matrix bg_biorthogonality_impl(int N, Exec exec) {
    if (N < 1) {
        throw std::out_of_range("bg_biorthogonality: N must be >= 1");
    }
    std::vector<LaurentPoly> lam(static_cast<std::size_t>(N) + 1);
    std::vector<LaurentPoly> lam_star(static_cast<std::size_t>(N) + 1);
    parallel_for(
        N + 1L,
        [&](std::int64_t kk) {
            const int k = static_cast<int>(kk);
            lam[static_cast<std::size_t>(k)] = LaurentPoly::from_poly(bg_lambda_sum(k, N));
            lam_star[static_cast<std::size_t>(k)] = bg_lambda_star_sum(k, N);
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

Matrix bg_biorthogonality(int N) {
    return bg_biorthogonality_impl(N, Exec::parallel);
}

Matrix bg_biorthogonality_serial(int N) {
    return bg_biorthogonality_impl(N, Exec::serial);
}

bool mirror_generating_check(int k, int N) {
    check_k(k, N, "mirror_generating_check");
    const Poly reflected = bg_generating_series_reflected(k, N);
    const bool reflected_sum_ok =
        reflected.scaled(sign_pow(k)) == bg_generating_sum_reflected(k, N);
    const bool recast_ok = reflected == bg_generating_sum(k, N);
    const bool kummer_ok = reflected == bg_generating_series(k, N);
    return reflected_sum_ok && recast_ok && kummer_ok;
}

} // namespace krw
