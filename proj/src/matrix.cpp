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

#include "krw/matrix.hpp"

#include <stdexcept>

namespace krw {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("Matrix: negative dimension");
    }
    e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = Rational(1);
    }
    return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    }
    return m;
}

Rational& Matrix::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw std::out_of_range("Matrix::at: index out of range");
    }
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

const Rational& Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw std::out_of_range("Matrix::at: index out of range");
    }
    return e_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
              static_cast<std::size_t>(j)];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t.at(j, i) = at(i, j);
        }
    }
    return t;
}

Matrix Matrix::scaled(const Rational& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        m.e_[i] = e_[i] * s;
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("Matrix +: shape mismatch");
    }
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) {
        m.e_[i] = a.e_[i] + b.e_[i];
    }
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("Matrix -: shape mismatch");
    }
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i) {
        m.e_[i] = a.e_[i] - b.e_[i];
    }
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix *: shape mismatch");
    }
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (int j = 0; j < b.cols_; ++j) {
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return m;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
        throw std::invalid_argument("Matrix::apply: length mismatch");
    }
    std::vector<Rational> r(static_cast<std::size_t>(rows_), Rational(0));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            const Rational& x = at(i, j);
            if (!x.is_zero()) {
                r[static_cast<std::size_t>(i)] += x * v[static_cast<std::size_t>(j)];
            }
        }
    }
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return a * b - b * a;
}

} // namespace krw
