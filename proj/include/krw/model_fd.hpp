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
#include "krw/rational.hpp"
#include "krw/su2.hpp"

#include <vector>

namespace krw {

// Finite-difference realization on grid functions f(s), s = 0..N, with shift
// operators T± f(s) = f(s±1):
//   j0 = s - N/2,   jp = -(N-s+1) T-,   jm = -(s+1) T+.
// Entries that would reference f(-1) or f(N+1) simply do not exist in the
// matrices; the factors -(N-s+1) at s = N+1 and -(s+1) at s = -1 vanish there
// anyway. The resulting matrices coincide with build_irrep(N)'s.

RepMatrices fd_operators(int N);

/// s -> C(N,s) K_k(s; 1/2, N); eigenfunction of (jp+jm)/2 with eigenvalue
/// k - N/2. Verified internally; throws std::logic_error if the residual is
/// not identically zero.
std::vector<Rational> fd_lambda(int k, int N);

/// s -> K_k(s; 1/2, N); eigenfunction of the literal matrix transposes,
/// (jp^T + jm^T)/2, with the same eigenvalue. Verified internally.
std::vector<Rational> fd_lambda_star(int k, int N);

/// Pairing matrix sum_s lambda*_k(s) lambda_l(s); diagonal with entries
/// 2^N (-1)^k k!/(-N)_k.
Matrix fd_biorthogonality(int N);
Matrix fd_biorthogonality_serial(int N);

/// Residual of the dual difference equation
/// (N-s) f(s+1) + s f(s-1) = (N-2k) f(s) at one grid point (values outside
/// 0..N enter with vanishing coefficients).
Rational fd_dual_difference_residual(const std::vector<Rational>& f, int s, int k, int N);

} // namespace krw
