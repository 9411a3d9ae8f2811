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

#include <vector>

namespace krw {

// Differential model on span{z^0..z^N}:
//   j0 = z d/dz - N/2,   jp = z^2 d/dz - N z,   jm = -d/dz,
// and its Lagrange adjoints on span{z^{-1}..z^{-1-N}}:
//   j0^T = -z d/dz - N/2 - 1,  jp^T = -z^2 d/dz - (N+2) z,  jm^T = d/dz,
// restricted by the projector onto the negative window. The direct model
// leaves its space invariant with no truncation; the adjoint one leaks at
// both ends (jp^T at column 0, jm^T at column N).

ModelOperators bargmann_operators(int N);
ModelOperators bargmann_adjoint_operators(int N);

/// (1-z)^k (1+z)^{N-k}, by exact polynomial arithmetic.
Poly bargmann_lambda_product(int k, int N);

/// sum_n C(N,n) K_n(k; 1/2, N) z^n.
Poly bargmann_lambda_sum(int k, int N);

/// [(z^2-1) d/dz - N z + (N-2k)] p, the eigenvalue ODE applied to p.
Poly bargmann_ode_residual(int k, int N, const Poly& p);

/// The generating polynomial; both routes are compared and the ODE residual
/// checked. Throws std::logic_error on mismatch.
Poly bargmann_lambda(int k, int N);

/// Coefficients a_n of the projected transpose eigenproblem solved by the
/// ansatz sum a_n z^{-1-n} with a_0 = 1:
/// -n a_{n-1} + (n-N) a_{n+1} + (N-2k) a_n = 0.
std::vector<Rational> bargmann_star_coeffs_recurrence(int k, int N);

/// sum_n K_n(k; 1/2, N) z^{-1-n}; the recurrence solution is verified to
/// match and to satisfy the projected matrix eigenproblem.
LaurentPoly bargmann_lambda_star(int k, int N);

/// Laurent expansion of (1/(z-1)) 2F1(1, -k; -N; 2/(1-z)) in powers of 1/z,
/// keeping the N+1 terms z^{-1}..z^{-1-N}.
LaurentPoly truncated_2f1_laurent(int k, int N);

/// truncated_2f1_laurent, verified equal to bargmann_lambda_star.
LaurentPoly truncated_2f1_form(int k, int N);

/// G_{kl} = residue pairing of lambda_k with lambda*_l; diagonal with entries
/// 2^N (-1)^k k!/(-N)_k.
Matrix bargmann_biorthogonality(int N);
Matrix bargmann_biorthogonality_serial(int N);

} // namespace krw
