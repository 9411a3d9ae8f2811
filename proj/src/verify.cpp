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

#include "krw/verify.hpp"

#include "krw/combinatorics.hpp"
#include "krw/krawtchouk.hpp"
#include "krw/matrix.hpp"
#include "krw/model_bargmann.hpp"
#include "krw/model_bg.hpp"
#include "krw/model_fd.hpp"
#include "krw/pade.hpp"
#include "krw/poly.hpp"
#include "krw/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace krw {

bool operator==(const VerifyReport& a, const VerifyReport& b) {
    if (a.identity != b.identity || a.params != b.params || a.pass != b.pass) {
        return false;
    }
    if (a.counterexample.has_value() != b.counterexample.has_value()) {
        return false;
    }
    if (a.counterexample) {
        return a.counterexample->inputs == b.counterexample->inputs &&
               a.counterexample->expected == b.counterexample->expected &&
               a.counterexample->actual == b.counterexample->actual;
    }
    return true;
}

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

class Checker {
   public:
    Checker(std::string identity, Inputs params) {
        rep_.identity = std::move(identity);
        rep_.params = std::move(params);
    }

    template <class F>
    void expect_eq(const Rational& expected, const Rational& actual, F&& inputs) {
        if (!rep_.pass || expected == actual) {
            return;
        }
        rep_.pass = false;
        rep_.counterexample =
            VerifyReport::Counterexample{inputs(), expected.str(), actual.str()};
    }

    bool failed() const { return !rep_.pass; }

    VerifyReport take() { return std::move(rep_); }

   private:
    VerifyReport rep_;
};

Inputs nparam(int N) {
    return {{"N", std::to_string(N)}};
}

std::string istr(long v) {
    return std::to_string(v);
}

void expect_matrix(Checker& c, const Matrix& expected, const Matrix& actual,
                   const std::string& tag) {
    for (int i = 0; i < expected.rows() && !c.failed(); ++i) {
        for (int j = 0; j < expected.cols() && !c.failed(); ++j) {
            c.expect_eq(expected.at(i, j), actual.at(i, j), [&] {
                return Inputs{{"matrix", tag}, {"row", istr(i)}, {"col", istr(j)}};
            });
        }
    }
}

void expect_diagonal_norms(Checker& c, const Matrix& g, int N, const std::string& tag) {
    for (int k = 0; k <= N && !c.failed(); ++k) {
        for (int l = 0; l <= N && !c.failed(); ++l) {
            const Rational expected = (k == l) ? orthogonality_norm(k, N) : Rational(0);
            c.expect_eq(expected, g.at(k, l), [&] {
                return Inputs{{"gram", tag}, {"row", istr(k)}, {"col", istr(l)}};
            });
        }
    }
}

VerifyReport v_orthogonality(int N) {
    Checker c("orthogonality", nparam(N));
    expect_diagonal_norms(c, orthogonality_gram(N), N, "orthogonality");
    return c.take();
}

VerifyReport v_duality(int N) {
    Checker c("duality", nparam(N));
    const Matrix t = krawtchouk_table(N);
    for (int n = 0; n <= N && !c.failed(); ++n) {
        for (int k = n + 1; k <= N && !c.failed(); ++k) {
            c.expect_eq(t.at(k, n), t.at(n, k),
                        [&] { return Inputs{{"n", istr(n)}, {"k", istr(k)}}; });
        }
    }
    return c.take();
}

VerifyReport v_mirror(int N) {
    Checker c("mirror", nparam(N));
    const Matrix t = krawtchouk_table(N);
    for (int n = 0; n <= N && !c.failed(); ++n) {
        for (int k = 0; k <= N && !c.failed(); ++k) {
            c.expect_eq(sign_pow(k) * t.at(n, k), t.at(N - n, k),
                        [&] { return Inputs{{"n", istr(n)}, {"k", istr(k)}}; });
        }
    }
    return c.take();
}

struct Family {
    std::string label;
    Matrix j0, raising, lowering;
};

std::vector<Family> operator_families(int N) {
    std::vector<Family> fams;
    const RepMatrices plain = build_irrep(N);
    fams.push_back({"plain", plain.j0, plain.jp, plain.jm});
    const RepMatrices tilde = build_tilde_rep(N);
    fams.push_back({"tilde", tilde.j0, tilde.jp, tilde.jm});
    const RepMatrices star = build_star_rep(N);
    fams.push_back({"star", star.j0, star.jp, star.jm});
    const RepMatrices fd = fd_operators(N);
    fams.push_back({"fd", fd.j0, fd.jp, fd.jm});
    const ModelOperators bargmann = bargmann_operators(N);
    fams.push_back({"bargmann", bargmann.j0, bargmann.raising(), bargmann.lowering()});
    const ModelOperators bargmann_adj = bargmann_adjoint_operators(N);
    fams.push_back(
        {"bargmann-adjoint", bargmann_adj.j0, bargmann_adj.raising(), bargmann_adj.lowering()});
    const ModelOperators bg = bg_operators(N);
    fams.push_back({"bg", bg.j0, bg.raising(), bg.lowering()});
    const ModelOperators bg_adj = bg_adjoint_operators(N);
    fams.push_back({"bg-adjoint", bg_adj.j0, bg_adj.raising(), bg_adj.lowering()});
    return fams;
}

VerifyReport v_casimir(int N) {
    Checker c("casimir", nparam(N));
    const Matrix expected = Matrix::identity(N + 1).scaled(casimir_value(N));
    for (const auto& fam : operator_families(N)) {
        if (c.failed()) {
            break;
        }
        expect_matrix(c, expected, casimir(fam.j0, fam.raising, fam.lowering), fam.label);
    }
    return c.take();
}

VerifyReport v_commutators(int N) {
    Checker c("commutators", nparam(N));
    const Matrix zero(N + 1, N + 1);
    for (const auto& fam : operator_families(N)) {
        if (c.failed()) {
            break;
        }
        expect_matrix(c, zero, cr_defect_raise(fam.j0, fam.raising), fam.label + "/[j0,j+]-j+");
        if (c.failed()) {
            break;
        }
        expect_matrix(c, zero, cr_defect_lower(fam.j0, fam.lowering), fam.label + "/[j0,j-]+j-");
        if (c.failed()) {
            break;
        }
        expect_matrix(c, zero, cr_defect_pair(fam.j0, fam.raising, fam.lowering),
                      fam.label + "/[j+,j-]-2j0");
    }
    return c.take();
}

void expect_eigen(Checker& c, const Matrix& op, const std::vector<Rational>& v,
                  const Rational& value, int k, const std::string& tag) {
    const std::vector<Rational> lhs = op.apply(v);
    for (std::size_t n = 0; n < v.size() && !c.failed(); ++n) {
        c.expect_eq(value * v[n], lhs[n], [&] {
            return Inputs{
                {"eigenproblem", tag}, {"k", istr(k)}, {"component", istr(static_cast<long>(n))}};
        });
    }
}

VerifyReport v_eig_rep(int N) {
    Checker c("eig-rep", nparam(N));
    const RepMatrices plain = build_irrep(N);
    const RepMatrices tilde = build_tilde_rep(N);
    const Matrix x = (plain.jp + plain.jm).scaled(Rational(1, 2));
    const Matrix xt = (tilde.jp + tilde.jm).scaled(Rational(1, 2));
    const Matrix t = krawtchouk_table(N);
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const Rational value(2L * k - N, 2);
        const std::vector<Rational> rec = x_coeffs_recurrence(k, N);
        expect_eigen(c, x, rec, value, k, "x");
        const std::vector<Rational> closed = x_coeffs_closed(k, N);
        for (int n = 0; n <= N && !c.failed(); ++n) {
            c.expect_eq(closed[static_cast<std::size_t>(n)], rec[static_cast<std::size_t>(n)],
                        [&] {
                            return Inputs{{"route", "recurrence-vs-closed"},
                                          {"k", istr(k)},
                                          {"n", istr(n)}};
                        });
        }
        std::vector<Rational> dual(static_cast<std::size_t>(N) + 1);
        for (int n = 0; n <= N; ++n) {
            dual[static_cast<std::size_t>(n)] = t.at(n, k);
        }
        expect_eigen(c, xt, dual, value, k, "x-transpose");
    }
    return c.take();
}

VerifyReport v_biortho_rep(int N) {
    Checker c("biortho-rep", nparam(N));
    const Matrix g = biorthogonality_gram(N);
    expect_diagonal_norms(c, g, N, "rep");
    if (!c.failed()) {
        expect_matrix(c, orthogonality_gram(N), g, "rep-vs-orthogonality");
    }
    return c.take();
}

VerifyReport v_biortho_fd(int N) {
    Checker c("biortho-fd", nparam(N));
    expect_diagonal_norms(c, fd_biorthogonality(N), N, "fd");
    return c.take();
}

void expect_poly(Checker& c, const Poly& expected, const Poly& actual, int k,
                 const std::string& tag, int through) {
    for (int j = 0; j <= through && !c.failed(); ++j) {
        c.expect_eq(expected.coeff(j), actual.coeff(j), [&] {
            return Inputs{{"identity", tag}, {"k", istr(k)}, {"coeff", istr(j)}};
        });
    }
}

VerifyReport v_gen_bargmann(int N) {
    Checker c("gen-bargmann", nparam(N));
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const Poly prod = bargmann_lambda_product(k, N);
        expect_poly(c, prod, bargmann_lambda_sum(k, N), k, "product-vs-sum", N);
        expect_poly(c, Poly(), bargmann_ode_residual(k, N, prod), k, "ode-residual", N + 1);
    }
    return c.take();
}

VerifyReport v_form_2f1(int N) {
    Checker c("form-2f1", nparam(N));
    const Matrix t = krawtchouk_table(N);
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const LaurentPoly expansion = truncated_2f1_laurent(k, N);
        for (int n = 0; n <= N && !c.failed(); ++n) {
            c.expect_eq(t.at(n, k), expansion.coeff(-1 - n), [&] {
                return Inputs{{"k", istr(k)}, {"exponent", istr(-1 - n)}};
            });
        }
    }
    return c.take();
}

VerifyReport v_biortho_bargmann(int N) {
    Checker c("biortho-bargmann", nparam(N));
    expect_diagonal_norms(c, bargmann_biorthogonality(N), N, "bargmann");
    return c.take();
}

VerifyReport v_gen_bg(int N) {
    Checker c("gen-bg", nparam(N));
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const Poly sum = bg_lambda_sum(k, N);
        expect_poly(c, sum, bg_lambda_series(k, N), k, "series-vs-sum", N);
        expect_poly(c, bg_generating_sum(k, N), bg_generating_series(k, N), k,
                    "exp-form-vs-sum", N);
        const Poly res = bg_ode_residual(k, N, sum);
        for (int j = 0; j <= N && !c.failed(); ++j) {
            c.expect_eq(Rational(0), res.coeff(j), [&] {
                return Inputs{{"identity", "ode-residual"}, {"k", istr(k)}, {"coeff", istr(j)}};
            });
        }
    }
    return c.take();
}

VerifyReport v_gen_bg_adjoint(int N) {
    Checker c("gen-bg-adjoint", nparam(N));
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const LaurentPoly sum = bg_lambda_star_sum(k, N);
        const LaurentPoly closed = bg_lambda_star_closed(k, N);
        for (int n = 0; n <= N && !c.failed(); ++n) {
            c.expect_eq(sum.coeff(-1 - n), closed.coeff(-1 - n), [&] {
                return Inputs{{"k", istr(k)}, {"exponent", istr(-1 - n)}};
            });
        }
    }
    return c.take();
}

VerifyReport v_mirror_gen(int N) {
    Checker c("mirror-gen", nparam(N));
    for (int k = 0; k <= N && !c.failed(); ++k) {
        const Poly reflected = bg_generating_series_reflected(k, N);
        expect_poly(c, bg_generating_sum_reflected(k, N), reflected.scaled(sign_pow(k)), k,
                    "reflected-series-vs-reflected-sum", N);
        expect_poly(c, bg_generating_sum(k, N), reflected, k, "reflected-series-vs-sum", N);
        expect_poly(c, bg_generating_series(k, N), reflected, k, "kummer-equivalence", N);
    }
    return c.take();
}

VerifyReport v_biortho_bg(int N) {
    Checker c("biortho-bg", nparam(N));
    const Matrix g = bg_biorthogonality(N);
    expect_diagonal_norms(c, g, N, "bg");
    if (!c.failed()) {
        expect_matrix(c, bargmann_biorthogonality(N), g, "bg-vs-bargmann");
    }
    if (!c.failed()) {
        expect_matrix(c, fd_biorthogonality(N), g, "bg-vs-fd");
    }
    return c.take();
}

void check_kummer(Checker& c, long a, int N) {
    const TruncatedSeries r = kummer_residual(a, N);
    for (long j = 0; j <= N && !c.failed(); ++j) {
        c.expect_eq(Rational(0), r.coeff(j), [&] {
            return Inputs{{"a", istr(a)}, {"coeff", istr(j)}};
        });
    }
}

VerifyReport v_kummer_sweep(int N) {
    Inputs params = nparam(N);
    params.emplace_back("a", "-N..0,1,2,3");
    Checker c("kummer", std::move(params));
    for (long a = -N; a <= 3 && !c.failed(); ++a) {
        check_kummer(c, a, N);
    }
    return c.take();
}

VerifyReport v_pade(int N) {
    Checker c("pade", nparam(N));
    for (int n = 0; n <= N && !c.failed(); ++n) {
        const int m = N - n;
        const PadePair p = pade_exp(n, m);
        c.expect_eq(Rational(1), p.denominator.coeff(0), [&] {
            return Inputs{{"n", istr(n)}, {"m", istr(m)}, {"check", "denominator-constant"}};
        });
        const TruncatedSeries defect = pade_defect_series(p, N + 1);
        for (long j = 0; j <= N && !c.failed(); ++j) {
            c.expect_eq(Rational(0), defect.coeff(j), [&] {
                return Inputs{{"n", istr(n)}, {"m", istr(m)}, {"defect-coeff", istr(j)}};
            });
        }
        if (c.failed()) {
            break;
        }
        const auto [index, value] = pade_first_defect(n, m);
        c.expect_eq(Rational(N + 1), Rational(index), [&] {
            return Inputs{{"n", istr(n)}, {"m", istr(m)}, {"check", "first-defect-index"}};
        });
        if (value.is_zero()) {
            c.expect_eq(Rational(1), Rational(0), [&] {
                return Inputs{{"n", istr(n)}, {"m", istr(m)}, {"check", "defect-nonzero"}};
            });
        }
        // denominator of (n,m) equals numerator of (m,n) under z -> -z
        const PadePair q = pade_exp(m, n);
        for (int j = 0; j <= m && !c.failed(); ++j) {
            c.expect_eq(q.numerator.coeff(j) * sign_pow(j), p.denominator.coeff(j), [&] {
                return Inputs{{"n", istr(n)}, {"m", istr(m)}, {"symmetry-coeff", istr(j)}};
            });
        }
    }
    return c.take();
}

} // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v = {
            "orthogonality", "duality",       "mirror",        "casimir",
            "commutators",   "eig-rep",       "biortho-rep",   "biortho-fd",
            "gen-bargmann",  "form-2f1",      "biortho-bargmann", "gen-bg",
            "gen-bg-adjoint", "mirror-gen",   "biortho-bg",    "kummer",
            "pade"};
        std::sort(v.begin(), v.end());
        return v;
    }();
    return names;
}

VerifyReport verify_identity(const std::string& name, int N) {
    if (N < 1) {
        throw std::out_of_range("verify_identity: N must be >= 1");
    }
    if (name == "orthogonality") return v_orthogonality(N);
    if (name == "duality") return v_duality(N);
    if (name == "mirror") return v_mirror(N);
    if (name == "casimir") return v_casimir(N);
    if (name == "commutators") return v_commutators(N);
    if (name == "eig-rep") return v_eig_rep(N);
    if (name == "biortho-rep") return v_biortho_rep(N);
    if (name == "biortho-fd") return v_biortho_fd(N);
    if (name == "gen-bargmann") return v_gen_bargmann(N);
    if (name == "form-2f1") return v_form_2f1(N);
    if (name == "biortho-bargmann") return v_biortho_bargmann(N);
    if (name == "gen-bg") return v_gen_bg(N);
    if (name == "gen-bg-adjoint") return v_gen_bg_adjoint(N);
    if (name == "mirror-gen") return v_mirror_gen(N);
    if (name == "biortho-bg") return v_biortho_bg(N);
    if (name == "kummer") return v_kummer_sweep(N);
    if (name == "pade") return v_pade(N);
    throw std::invalid_argument("verify_identity: unknown identity '" + name + "'");
}

VerifyReport verify_kummer(long a, int N) {
    if (N < 1) {
        throw std::out_of_range("verify_kummer: N must be >= 1");
    }
    Inputs params = nparam(N);
    params.emplace_back("a", istr(a));
    Checker c("kummer", std::move(params));
    check_kummer(c, a, N);
    return c.take();
}

std::vector<VerifyReport> verify_all(int nmax, Exec exec) {
    if (nmax < 1) {
        throw std::out_of_range("verify_all: nmax must be >= 1");
    }
    const auto& names = identity_names();
    const std::int64_t cells = static_cast<std::int64_t>(names.size()) * nmax;
    std::vector<VerifyReport> reports(static_cast<std::size_t>(cells));
    parallel_for(
        cells,
        [&](std::int64_t idx) {
            const std::size_t which = static_cast<std::size_t>(idx / nmax);
            const int N = static_cast<int>(idx % nmax) + 1;
            VerifyReport rep;
            try {
                rep = verify_identity(names[which], N);
            } catch (const std::exception& e) {
                rep.identity = names[which];
                rep.params = nparam(N);
                rep.pass = false;
                rep.counterexample =
                    VerifyReport::Counterexample{{{"exception", e.what()}}, "", ""};
            }
            reports[static_cast<std::size_t>(idx)] = std::move(rep);
        },
        exec);
    return reports;
}

} // namespace krw
