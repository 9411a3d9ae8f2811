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

#include "krw/diff_model.hpp"
#include "krw/matrix.hpp"
#include "krw/poly.hpp"
#include "krw/rational.hpp"

namespace krw {

// Barut-Girardello model:
//   j0 = z d/dz - N/2,   jp = z,   jm = -z d^2/dz^2 + N d/dz
// on the normalized basis z^n/(-N)_n, n = 0..N, and its Lagrange adjoints
//   j0^T = -z d/dz - N/2 - 1,  jp^T = z,  jm^T = -z d^2/dz^2 - (N+2) d/dz
// on the basis (-1)^n n! z^{-1-n}. Multiplication by z does not leave either
// window invariant on its own: the direct model needs jp's column N zeroed,
// the adjoint one jp^T's column 0 - exactly one truncation per side,
// reported in `truncations`.

ModelOperators bg_operators(int N);
ModelOperators bg_adjoint_operators(int N);

/// sum_n ((-1)^n / n!) K_n(k; 1/2, N) z^n.
Poly bg_lambda_sum(int k, int N);

/// [e^{-z} 1F1(-k; -N; 2z)] truncated after z^N, as a polynomial.
Poly bg_lambda_series(int k, int N);

/// [-z d^2/dz^2 + N d/dz + (z + N - 2k)] p; for the eigenfunction this
/// vanishes through z^N, with first defect at z^{N+1}.
Poly bg_ode_residual(int k, int N, const Poly& p);

/// The eigenfunction; both routes compared, ODE residual checked through
/// z^N. Throws std::logic_error on mismatch.
Poly bg_lambda(int k, int N);

/// [e^{z} 1F1(-k; -N; -2z)] truncated after z^N.
Poly bg_generating_series(int k, int N);

/// sum_n (1/n!) K_n(k; 1/2, N) z^n.
Poly bg_generating_sum(int k, int N);

/// [e^{-z} 1F1(k-N; -N; 2z)] truncated after z^N (mirror-parameter form).
Poly bg_generating_series_reflected(int k, int N);

/// sum_n (1/n!) K_{N-n}(k; 1/2, N) z^n.
Poly bg_generating_sum_reflected(int k, int N);

/// sum_n (-1)^n (N!/(N-n)!) K_n(k; 1/2, N) z^{-1-n}.
LaurentPoly bg_lambda_star_sum(int k, int N);

/// (-1)^{N-k} N! z^{-1-N} [e^{z} 1F1(k-N; -N; -2z)]_N; the prefactor matches
/// the z^{-1-N} coefficient of the sum form.
LaurentPoly bg_lambda_star_closed(int k, int N);

/// Sum form, verified equal to the closed form and to the adjoint matrix
/// eigenproblem. Throws std::logic_error on mismatch.
LaurentPoly bg_lambda_star(int k, int N);

/// G_{kl} = residue pairing of the eigenfunctions with their adjoints;
/// diagonal, equal to the other models' Gram matrices.
Matrix bg_biorthogonality(int N);
Matrix bg_biorthogonality_serial(int N);

/// Checks, as exact coefficient identities:
///  (a) (-1)^k * reflected series == reflected sum,
///  (b) reflected series == plain sum (mirror symmetry removes the sign),
///  (c) reflected series == e^z-form series (truncated Kummer equivalence).
bool mirror_generating_check(int k, int N);

} // namespace krw
