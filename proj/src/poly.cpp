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

#include "krw/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace krw {

// ---------------------------------------------------------------- Poly

void Poly::trim() {
    while (c_.size() > 1 && c_.back().is_zero()) {
        c_.pop_back();
    }
    if (c_.empty()) {
        c_.push_back(Rational(0));
    }
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    trim();
}

Poly Poly::monomial(int degree, const Rational& coeff) {
    if (degree < 0) {
        throw std::invalid_argument("Poly::monomial: negative degree");
    }
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(i)];
}

Poly Poly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = -c_[i];
    }
    return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    return a + (-b);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) {
        return Poly();
    }
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * s;
    }
    return Poly(std::move(c));
}

Poly Poly::pow(long e) const {
    if (e < 0) {
        throw std::invalid_argument("Poly::pow: negative exponent");
    }
    Poly r{Rational(1)};
    Poly b = *this;
    while (e > 0) {
        if (e & 1) {
            r = r * b;
        }
        e >>= 1;
        if (e > 0) {
            b = b * b;
        }
    }
    return r;
}

Poly Poly::derivative() const {
    if (c_.size() == 1) {
        return Poly();
    }
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    }
    return Poly(std::move(c));
}

Poly Poly::shifted(int up) const {
    if (up < 0) {
        throw std::invalid_argument("Poly::shifted: negative shift");
    }
    if (is_zero() || up == 0) {
        return *this;
    }
    std::vector<Rational> c(c_.size() + static_cast<std::size_t>(up), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i + static_cast<std::size_t>(up)] = c_[i];
    }
    return Poly(std::move(c));
}

// ---------------------------------------------------------- LaurentPoly

void LaurentPoly::trim() {
    std::size_t first = 0;
    while (first < c_.size() && c_[first].is_zero()) {
        ++first;
    }
    if (first == c_.size()) {
        low_ = 0;
        c_ = {Rational(0)};
        return;
    }
    std::size_t last = c_.size() - 1;
    while (c_[last].is_zero()) {
        --last;
    }
    if (first > 0 || last + 1 < c_.size()) {
        std::vector<Rational> c(c_.begin() + static_cast<long>(first),
                                c_.begin() + static_cast<long>(last) + 1);
        low_ += static_cast<long>(first);
        c_ = std::move(c);
    }
}

LaurentPoly::LaurentPoly(long low, std::vector<Rational> coeffs) : low_(low), c_(std::move(coeffs)) {
    if (c_.empty()) {
        c_.push_back(Rational(0));
    }
    trim();
}

LaurentPoly LaurentPoly::monomial(long exponent, const Rational& coeff) {
    return LaurentPoly(exponent, {coeff});
}

LaurentPoly LaurentPoly::from_poly(const Poly& p) {
    return LaurentPoly(0, p.coeffs());
}

Rational LaurentPoly::coeff(long e) const {
    if (e < low_ || e > high()) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(e - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = -c_[i];
    }
    return LaurentPoly(low_, std::move(c));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    long lo = std::min(a.low_, b.low_);
    long hi = std::max(a.high(), b.high());
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (long e = lo; e <= hi; ++e) {
        c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
    }
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return LaurentPoly();
    }
    long lo = a.low_ + b.low_;
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * s;
    }
    return LaurentPoly(low_, std::move(c));
}

LaurentPoly LaurentPoly::restricted(long lo, long hi) const {
    if (lo > hi || is_zero() || high() < lo || low_ > hi) {
        return LaurentPoly();
    }
    long from = std::max(low_, lo);
    long to = std::min(high(), hi);
    std::vector<Rational> c(c_.begin() + static_cast<long>(from - low_),
                            c_.begin() + static_cast<long>(to - low_) + 1);
    return LaurentPoly(from, std::move(c));
}

Rational residue_pair(const LaurentPoly& f, const LaurentPoly& g) {
    Rational r(0);
    // only exponents e of f with -1-e inside g's window contribute
    long lo = std::max(f.low(), -1 - g.high());
    long hi = std::min(f.high(), -1 - g.low());
    for (long e = lo; e <= hi; ++e) {
        r += f.coeff(e) * g.coeff(-1 - e);
    }
    return r;
}

// ------------------------------------------------------ TruncatedSeries

TruncatedSeries::TruncatedSeries(long order) : order_(order) {
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: negative order");
    }
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(long order, std::vector<Rational> coeffs) : order_(order) {
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: negative order");
    }
    coeffs.resize(static_cast<std::size_t>(order) + 1, Rational(0));
    c_ = std::move(coeffs);
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, long order) {
    TruncatedSeries s(order);
    for (long j = 0; j <= order; ++j) {
        s.c_[static_cast<std::size_t>(j)] = p.coeff(static_cast<int>(j));
    }
    return s;
}

TruncatedSeries TruncatedSeries::exp(long order, const Rational& scale) {
    TruncatedSeries s(order);
    Rational term(1);
    s.c_[0] = term;
    for (long j = 1; j <= order; ++j) {
        term *= scale;
        term /= Rational(j);
        s.c_[static_cast<std::size_t>(j)] = term;
    }
    return s;
}

Rational TruncatedSeries::coeff(long j) const {
    if (j < 0 || j > order_) {
        throw std::out_of_range("TruncatedSeries::coeff: index beyond stated order");
    }
    return c_[static_cast<std::size_t>(j)];
}

TruncatedSeries TruncatedSeries::truncated(long m) const {
    if (m < 0 || m > order_) {
        throw std::out_of_range("TruncatedSeries::truncated: bad order");
    }
    std::vector<Rational> c(c_.begin(), c_.begin() + m + 1);
    return TruncatedSeries(m, std::move(c));
}

bool TruncatedSeries::zero_through(long m) const {
    if (m > order_) {
        throw std::out_of_range("TruncatedSeries::zero_through: beyond stated order");
    }
    for (long j = 0; j <= m; ++j) {
        if (!c_[static_cast<std::size_t>(j)].is_zero()) {
            return false;
        }
    }
    return true;
}

long TruncatedSeries::first_nonzero() const {
    for (long j = 0; j <= order_; ++j) {
        if (!c_[static_cast<std::size_t>(j)].is_zero()) {
            return j;
        }
    }
    return -1;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    long m = std::min(a.order_, b.order_);
    TruncatedSeries s(m);
    for (long j = 0; j <= m; ++j) {
        s.c_[static_cast<std::size_t>(j)] =
            a.c_[static_cast<std::size_t>(j)] + b.c_[static_cast<std::size_t>(j)];
    }
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    long m = std::min(a.order_, b.order_);
    TruncatedSeries s(m);
    for (long j = 0; j <= m; ++j) {
        s.c_[static_cast<std::size_t>(j)] =
            a.c_[static_cast<std::size_t>(j)] - b.c_[static_cast<std::size_t>(j)];
    }
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    long m = std::min(a.order_, b.order_);
    TruncatedSeries s(m);
    for (long i = 0; i <= m; ++i) {
        const Rational& ai = a.c_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) {
            continue;
        }
        for (long j = 0; i + j <= m; ++j) {
            s.c_[static_cast<std::size_t>(i + j)] += ai * b.c_[static_cast<std::size_t>(j)];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
    TruncatedSeries r(order_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r.c_[i] = c_[i] * s;
    }
    return r;
}

Poly TruncatedSeries::to_poly() const {
    return Poly(c_);
}

} // namespace krw
