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

#include <vector>

namespace krw {

/// Dense rational matrix, row-major.
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);

    static Matrix identity(int n);
    static Matrix diagonal(const std::vector<Rational>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    Matrix transpose() const;
    Matrix scaled(const Rational& s) const;
    bool is_zero() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

   private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace krw
