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

#pragma once

#include "krw/matrix.hpp"
#include "krw/parallel.hpp"
#include "krw/rational.hpp"

namespace krw {

// Symmetric (p = 1/2) Krawtchouk polynomials K_n(k; 1/2, N) on the lattice
// n, k = 0..N. Two computation routes are kept deliberately: the terminating
// hypergeometric sum (per value) and the three-term recurrence in the degree
// (per column); they must agree entrywise.

/// K_n(k; 1/2, N) via the terminating hypergeometric sum
/// sum_{j=0}^{min(n,k)} (-n)_j (-k)_j 2^j / ((-N)_j j!).
/// The sum stops at min(n,k), before the (-N)_j factor could vanish; the
/// convention only makes sense on the lattice, so out-of-range n or k throw.
Rational krawtchouk(int n, int k, int N);

/// (N+1)x(N+1) table with entry (n,k) = K_n(k; 1/2, N), built column-by-column
/// from the recurrence (N-2k)K_n = (N-n)K_{n+1} + n K_{n-1}. Columns are
/// independent and are filled in parallel.
Matrix krawtchouk_table(int N);

/// Same recurrence, plain serial loop. Reference for the parallel kernel.
Matrix krawtchouk_table_serial(int N);

/// Entrywise hypergeometric sums (the independent oracle for the recurrence).
Matrix krawtchouk_table_direct(int N);

/// Monic-normalized value p_n(k) = (1/2)^n (-N)_n K_n(k; 1/2, N).
Rational normalized_pn(int n, int k, int N);

/// Residual of k p_n = p_{n+1} + (N/2) p_n + (n(N+1-n)/4) p_{n-1}, with the
/// convention p_{N+1} = 0 (its (-N)_{N+1} factor vanishes) and p_{-1} = 0.
Rational normalized_recurrence_residual(int n, int k, int N);

/// Gram matrix G_{mn} = sum_k C(N,k) K_m(k) K_n(k); diagonal with entries
/// 2^N (-1)^n n! / (-N)_n.
Matrix orthogonality_gram(int N);
Matrix orthogonality_gram_serial(int N);

/// 2^N (-1)^n n! / (-N)_n, the squared norm of K_n under the binomial weight.
Rational orthogonality_norm(int n, int N);

/// K_{N-n}(k) = (-1)^k K_n(k) at one lattice point.
bool mirror_check(int n, int k, int N);

namespace detail {
Matrix krawtchouk_table_impl(int N, Exec exec);
Matrix orthogonality_gram_impl(int N, Exec exec);
} // namespace detail

} // namespace krw
