/**************************************************************************
 * Copyright 2026 The rsrecover Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gf.hpp"

namespace rsr {

using Vector = std::vector<Element>;

/// Dense row-major matrix over GF(2^m).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), elems_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Element> elems)
        : rows_(rows), cols_(cols), elems_(std::move(elems))
    {
        if (elems_.size() != rows_ * cols_)
            fail(ErrorKind::DimensionError, "element count does not match " + shape());
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = kOne;
        return m;
    }

    static Matrix diagonal(std::span<const Element> d)
    {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows)
    {
        if (rows.empty())
            return {};
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                fail(ErrorKind::DimensionError, "ragged rows");
            std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Element& operator()(std::size_t r, std::size_t c) noexcept { return elems_[r * cols_ + c]; }
    Element operator()(std::size_t r, std::size_t c) const noexcept { return elems_[r * cols_ + c]; }

    std::span<const Element> row(std::size_t r) const noexcept { return {elems_.data() + r * cols_, cols_}; }
    std::span<Element> row(std::size_t r) noexcept { return {elems_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

    const std::vector<Element>& elems() const noexcept { return elems_; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    /// Upper-left rows x cols block.
    Matrix top_left(std::size_t rows, std::size_t cols) const
    {
        if (rows > rows_ || cols > cols_)
            fail(ErrorKind::DimensionError, "block larger than " + shape());
        Matrix b(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                b(r, c) = (*this)(r, c);
        return b;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Element> elems_;
};

inline Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b, MulCounter* counter = nullptr)
{
    if (a.cols() != b.rows())
        fail(ErrorKind::DimensionError, "cannot multiply " + a.shape() + " by " + b.shape());
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Element x = a(i, l);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += f.mul(x, b(l, j), counter);
        }
    return out;
}

/// Row vector times matrix: v * M.
inline Vector vec_mat(const Field& f, std::span<const Element> v, const Matrix& m, MulCounter* counter = nullptr)
{
    if (v.size() != m.rows())
        fail(ErrorKind::DimensionError,
             "vector of length " + std::to_string(v.size()) + " times " + m.shape());
    Vector out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += f.mul(v[i], m(i, j), counter);
    return out;
}

/// Matrix times column vector: M * v.
inline Vector mat_vec(const Field& f, const Matrix& m, std::span<const Element> v, MulCounter* counter = nullptr)
{
    if (v.size() != m.cols())
        fail(ErrorKind::DimensionError,
             m.shape() + " times vector of length " + std::to_string(v.size()));
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] += f.mul(m(i, j), v[j], counter);
    return out;
}

/// Gauss-Jordan elimination with first-nonzero pivoting.
inline Matrix mat_inv(const Field& f, const Matrix& a)
{
    if (!a.is_square())
        fail(ErrorKind::DimensionError, "cannot invert " + a.shape());
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix inv = Matrix::identity(n);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            fail(ErrorKind::SingularMatrix, "no pivot in column " + std::to_string(col));
        if (pivot != col) {
            std::swap_ranges(work.row(col).begin(), work.row(col).end(), work.row(pivot).begin());
            std::swap_ranges(inv.row(col).begin(), inv.row(col).end(), inv.row(pivot).begin());
        }

        const Element scale = f.inv(work(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) = f.mul(work(col, j), scale);
            inv(col, j) = f.mul(inv(col, j), scale);
        }

        for (std::size_t r = 0; r < n; ++r) {
            const Element factor = work(r, col);
            if (r == col || factor.is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(r, j) += f.mul(factor, work(col, j));
                inv(r, j) += f.mul(factor, inv(col, j));
            }
        }
    }
    return inv;
}

inline std::size_t rank(const Field& f, Matrix a)
{
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < a.rows() && a(pivot, col).is_zero())
            ++pivot;
        if (pivot == a.rows())
            continue;
        std::swap_ranges(a.row(rank).begin(), a.row(rank).end(), a.row(pivot).begin());
        const Element lead_inv = f.inv(a(rank, col));
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            const Element factor = f.mul(a(r, col), lead_inv);
            if (factor.is_zero())
                continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                a(r, j) += f.mul(factor, a(rank, j));
        }
        ++rank;
    }
    return rank;
}

/// Finds the k x k matrix A with g_a = A * g, where g is a k x n banded
/// generator matrix (row i starts with its nonzero leading entry at column i).
///
/// Each row of g_a is reduced against g from the left; this is long division
/// of the row polynomial by g(x), so a nonzero remainder means the row is not
/// a codeword.
inline Matrix solve_transform(const Field& f, const Matrix& g_a, const Matrix& g)
{
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    if (g_a.rows() != k || g_a.cols() != n)
        fail(ErrorKind::DimensionError, "g_a is " + g_a.shape() + ", g is " + g.shape());
    if (k > n)
        fail(ErrorKind::DimensionError, "generator has more rows than columns");
    for (std::size_t i = 0; i < k; ++i)
        if (g(i, i).is_zero())
            fail(ErrorKind::DimensionError, "g is not in banded echelon form at row " + std::to_string(i));

    Matrix a(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        Vector rem = g_a.row_vector(r);
        for (std::size_t i = 0; i < k; ++i) {
            const Element coef = f.div(rem[i], g(i, i));
            a(r, i) = coef;
            if (coef.is_zero())
                continue;
            for (std::size_t j = i; j < n; ++j)
                rem[j] += f.mul(coef, g(i, j));
        }
        if (std::any_of(rem.begin(), rem.end(), [](Element e) { return !e.is_zero(); }))
            fail(ErrorKind::NotACodewordBasis, "row " + std::to_string(r) + " of g_a is not in the row space of g");
    }
    if (rank(f, a) != k)
        fail(ErrorKind::SingularMatrix, "g_a does not have full rank");
    return a;
}

/// The n x n matrix [U]: the k rows of u followed by n - k rows, each the
/// right cyclic shift by one of the row above.
inline Matrix cyclic_complete(const Matrix& u)
{
    const std::size_t k = u.rows();
    const std::size_t n = u.cols();
    if (k == 0 || k >= n)
        fail(ErrorKind::DimensionError, "cyclic completion needs 0 < rows < cols, got " + u.shape());
    Matrix out(n, n);
    for (std::size_t r = 0; r < k; ++r)
        std::copy(u.row(r).begin(), u.row(r).end(), out.row(r).begin());
    for (std::size_t r = k; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = out(r - 1, (c + n - 1) % n);
    return out;
}

} // namespace rsr
