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

#include "krw/rational.hpp"

#include <initializer_list>
#include <vector>

namespace krw {

/// Dense polynomial in z with exact rational coefficients, indexed by
/// exponent 0..deg. Canonical form: no trailing zero coefficient; the zero
/// polynomial is stored as [0] with degree 0.
class Poly {
   public:
    Poly() : c_{Rational(0)} {}
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly monomial(int degree, const Rational& coeff = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& s) const;
    Poly pow(long e) const;
    Poly derivative() const;
    Poly shifted(int up) const; // multiply by z^up, up >= 0

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

   private:
    void trim();
    std::vector<Rational> c_;
};

/// Finite Laurent polynomial: lowest exponent (possibly negative) plus the
/// coefficients for exponents low..low+len-1. Canonical form: first and last
/// stored coefficients nonzero; the zero polynomial is low = 0, coeffs = [0].
class LaurentPoly {
   public:
    LaurentPoly() : low_(0), c_{Rational(0)} {}
    LaurentPoly(long low, std::vector<Rational> coeffs);

    static LaurentPoly monomial(long exponent, const Rational& coeff = Rational(1));
    static LaurentPoly from_poly(const Poly& p);

    bool is_zero() const { return c_.size() == 1 && c_[0].is_zero() && low_ == 0; }
    long low() const { return low_; }
    long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
    Rational coeff(long e) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& s) const;

    /// Drops every term with exponent outside [lo, hi].
    LaurentPoly restricted(long lo, long hi) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.low_ == b.low_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

   private:
    void trim();
    long low_;
    std::vector<Rational> c_;
};

/// Coefficient of z^{-1} in f*g, computed without forming the full product.
Rational residue_pair(const LaurentPoly& f, const LaurentPoly& g);

/// Power series in z known exactly up to a stated order M: coefficients
/// 0..M carry meaning, nothing beyond M is claimed. Multiplying (or adding)
/// series of orders M1, M2 yields order min(M1, M2).
class TruncatedSeries {
   public:
    explicit TruncatedSeries(long order);
    TruncatedSeries(long order, std::vector<Rational> coeffs);

    static TruncatedSeries from_poly(const Poly& p, long order);
    /// sum_{j<=order} (scale^j / j!) z^j, i.e. e^{scale*z} through order.
    static TruncatedSeries exp(long order, const Rational& scale = Rational(1));

    long order() const { return order_; }
    Rational coeff(long j) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    TruncatedSeries truncated(long m) const; // m <= order
    bool zero_through(long m) const;         // m <= order
    /// Smallest j with nonzero coefficient, or -1 if none up to order.
    long first_nonzero() const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries scaled(const Rational& s) const;

    /// Drops trailing zeros; only meaningful when the tail is known to vanish.
    Poly to_poly() const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

   private:
    long order_;
    std::vector<Rational> c_;
};

} // namespace krw
