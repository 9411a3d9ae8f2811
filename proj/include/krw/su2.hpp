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

#include <vector>

namespace krw {

enum class Basis { plain, tilde, star };

/// The (N+1)-dimensional module carried by three matrices. By convention
/// jp is always the matrix that raises the basis index and jm the one that
/// lowers it, regardless of which abstract generator realizes that role
/// (on transposed modules the raising/lowering roles swap).
struct RepMatrices {
    int N = 0;
    Basis basis = Basis::plain;
    Matrix j0, jp, jm;
};

/// Weight basis action: j0|n> = (n - N/2)|n>, jp|n> = (n-N)|n+1>,
/// jm|n> = -n |n-1>.
RepMatrices build_irrep(int N);

/// Literal transposes of the plain matrices, with jp/jm re-assigned to keep
/// jp the raising matrix.
RepMatrices build_tilde_rep(int N);

/// The transpose action after the diagonal rescaling |n>* = (n!(N-n)!/N!)|n~>:
/// j0|n>* = (n - N/2)|n>*, the lowering matrix acts as -n, the raising one as
/// (n-N). Built directly from these actions; tests confirm it equals
/// D^{-1} (plain)^T D with D = diag(n!(N-n)!/N!).
RepMatrices build_star_rep(int N);

/// diag(n!(N-n)!/N!), the rescaling between tilde and star bases.
Matrix star_rescaling(int N);

/// j0^2 - j0 + jp*jm; equals (N/2)(N/2+1) I on an irreducible module.
Matrix casimir(const Matrix& j0, const Matrix& raising, const Matrix& lowering);
Matrix casimir(const RepMatrices& rep);
Rational casimir_value(int N);

/// Zero matrices exactly when [j0, jp] = jp, [j0, jm] = -jm, [jp, jm] = 2 j0.
Matrix cr_defect_raise(const Matrix& j0, const Matrix& raising);
Matrix cr_defect_lower(const Matrix& j0, const Matrix& lowering);
Matrix cr_defect_pair(const Matrix& j0, const Matrix& raising, const Matrix& lowering);
bool satisfies_su2(const Matrix& j0, const Matrix& raising, const Matrix& lowering);

struct EigenPair {
    int k = 0;
    Rational value;                // k - N/2
    std::vector<Rational> coeffs;  // length N+1, first entry 1
};

/// Coefficients of the eigenvector of X = (jp+jm)/2 with eigenvalue k - N/2,
/// generated from the matrix rows: c_0 = 1 and
/// (N-2k) c_n = (n+1) c_{n+1} + (N+1-n) c_{n-1}.
std::vector<Rational> x_coeffs_recurrence(int k, int N);

/// Closed form c_n = C(N,n) K_n(k; 1/2, N).
std::vector<Rational> x_coeffs_closed(int k, int N);

/// Recurrence-generated eigenvector, verified against both the matrix
/// equation and the closed form. Throws std::logic_error on any mismatch.
EigenPair x_eigenvector(int k, int N);

/// Eigenvector of the transposed problem in the tilde basis, with
/// coefficients K_n(k; 1/2, N); verified against the transpose matrices.
EigenPair x_adjoint_eigenvector(int k, int N);

/// G_{kl} = sum_n C(N,n) K_n(k) K_n(l); diagonal, and equal to
/// orthogonality_gram entrywise by the duality K_n(k) = K_k(n).
Matrix biorthogonality_gram(int N);
Matrix biorthogonality_gram_serial(int N);

} // namespace krw
