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
#include <cstdint>
#include <span>
#include <string>

#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"

namespace rsr {

/// An (n, k) Reed-Solomon code over GF(2^m) whose zeros are
/// alpha^b, alpha^(b+1), ..., alpha^(b+n-k-1).
///
/// Polynomials are stored with ascending coefficients (index = power of x).
class RsCode {
public:
    /// b is taken mod n, with 0 mapped to n, so any integer is accepted.
    static RsCode build(Field field, std::size_t n, std::size_t k, std::int64_t b)
    {
        if (n != field.n())
            fail(ErrorKind::InvalidCodeParameters,
                 "code length " + std::to_string(n) + " must equal the order of alpha (" + std::to_string(field.n()) + ")");
        if (k < 1 || k >= n)
            fail(ErrorKind::InvalidCodeParameters, "need 1 <= k < n, got k=" + std::to_string(k));
        const auto sn = static_cast<std::int64_t>(n);
        std::int64_t nb = ((b % sn) + sn) % sn;
        if (nb == 0)
            nb = sn;
        return RsCode(std::move(field), n, k, static_cast<std::size_t>(nb));
    }

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t b() const noexcept { return b_; }

    /// g_0 .. g_{n-k}; g is monic.
    const Vector& g_coeffs() const noexcept { return g_; }

    /// Diagonal of W: entry i is alpha^((b-1)i).
    const Vector& w_diag() const noexcept { return w_; }

    Matrix w_matrix() const { return Matrix::diagonal(w_); }

    /// True when the zero exponents b..b+n-k-1 reach or pass n, so the zero
    /// set wraps around through alpha^n = 1.
    bool zeros_wrap() const noexcept { return b_ + (n_ - k_) - 1 >= n_; }

    friend bool operator==(const RsCode& a, const RsCode& b) noexcept
    {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.k_ == b.k_ && a.b_ == b.b_;
    }

private:
    RsCode(Field field, std::size_t n, std::size_t k, std::size_t b) : field_(std::move(field)), n_(n), k_(k), b_(b)
    {
        // g(x) = prod (x - alpha^(b+i)), expanded one linear factor at a time.
        g_ = {kOne};
        for (std::size_t i = 0; i < n_ - k_; ++i) {
            const Element root = field_.pow_alpha(static_cast<std::int64_t>(b_ + i));
            Vector next(g_.size() + 1);
            for (std::size_t j = 0; j < g_.size(); ++j) {
                next[j + 1] += g_[j];
                next[j] += field_.mul(g_[j], root);
            }
            g_ = std::move(next);
        }

        w_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i)
            w_[i] = field_.pow_alpha(static_cast<std::int64_t>((b_ - 1) * i));
    }

    Field field_;
    std::size_t n_;
    std::size_t k_;
    std::size_t b_;
    Vector g_;
    Vector w_;
};

namespace detail {

inline Matrix banded(std::size_t k, std::size_t n, std::span<const Element> coeffs)
{
    Matrix m(k, n);
    for (std::size_t i = 0; i < k; ++i)
        std::copy(coeffs.begin(), coeffs.end(), m.row(i).begin() + static_cast<std::ptrdiff_t>(i));
    return m;
}

inline void require_length(std::span<const Element> v, std::size_t len, const char* what)
{
    if (v.size() != len)
        fail(ErrorKind::DimensionError,
             std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(len));
}

} // namespace detail

/// k x n banded matrix whose row i is g shifted right by i.
inline Matrix build_generator_matrix(const RsCode& code)
{
    return detail::banded(code.k(), code.n(), code.g_coeffs());
}

/// gbar_i = g_i * alpha^((b-1)i).
inline Vector gbar_coeffs(const RsCode& code)
{
    Vector out(code.g_coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = code.field().mul(code.g_coeffs()[i], code.w_diag()[i]);
    return out;
}

/// Banded generator of the narrow-sense code, built from gbar.
inline Matrix build_gbar_matrix(const RsCode& code)
{
    const Vector gbar = gbar_coeffs(code);
    return detail::banded(code.k(), code.n(), gbar);
}

/// Remainder of v(x) divided by g(x); length n - k.
inline Vector poly_remainder(const RsCode& code, std::span<const Element> v)
{
    const Field& f = code.field();
    const Vector& g = code.g_coeffs();
    const std::size_t deg = g.size() - 1;
    Vector rem(v.begin(), v.end());
    if (rem.size() <= deg) {
        rem.resize(deg);
        return rem;
    }
    // g is monic: cancel the top coefficient repeatedly.
    for (std::size_t top = rem.size() - 1; top >= deg; --top) {
        const Element c = rem[top];
        if (!c.is_zero())
            for (std::size_t j = 0; j <= deg; ++j)
                rem[top - deg + j] += f.mul(c, g[j]);
        if (top == deg)
            break;
    }
    rem.resize(deg);
    return rem;
}

inline bool is_codeword(const RsCode& code, std::span<const Element> v)
{
    if (v.size() != code.n())
        return false;
    const Vector rem = poly_remainder(code, v);
    return std::all_of(rem.begin(), rem.end(), [](Element e) { return e.is_zero(); });
}

/// Checks that g_a is k x n with every row in the code. Rank is checked where
/// the basis transformation is solved.
inline void check_generator(const RsCode& code, const Matrix& g_a)
{
    if (g_a.rows() != code.k() || g_a.cols() != code.n())
        fail(ErrorKind::DimensionError, "generator is " + g_a.shape() + ", code needs " + std::to_string(code.k()) +
                                            "x" + std::to_string(code.n()));
    for (std::size_t r = 0; r < g_a.rows(); ++r)
        if (!is_codeword(code, g_a.row(r)))
            fail(ErrorKind::NotACodewordBasis, "row " + std::to_string(r) + " is not divisible by g(x)");
}

/// msg * g_a.
inline Vector encode_generator(const RsCode& code, const Matrix& g_a, std::span<const Element> msg)
{
    detail::require_length(msg, code.k(), "message");
    if (g_a.rows() != code.k() || g_a.cols() != code.n())
        fail(ErrorKind::DimensionError, "generator is " + g_a.shape());
    return vec_mat(code.field(), msg, g_a);
}

/// Horner evaluation of an ascending-coefficient polynomial.
inline Element poly_eval(const Field& f, std::span<const Element> coeffs, Element x, MulCounter* counter = nullptr)
{
    Element acc = kZero;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = f.mul(acc, x, counter) + *it;
    return acc;
}

/// (m(1), m(alpha), ..., m(alpha^(n-1))) for m(x) = sum msg_j x^j.
inline Vector encode_evaluation(const RsCode& code, std::span<const Element> msg)
{
    detail::require_length(msg, code.k(), "message");
    Vector out(code.n());
    for (std::size_t i = 0; i < code.n(); ++i)
        out[i] = poly_eval(code.field(), msg, code.field().pow_alpha(static_cast<std::int64_t>(i)));
    return out;
}

/// v * W. Index 0 is scaled by 1 and is not multiplied, so a counter sees
/// exactly n - 1 multiplications.
inline Vector narrow_sense_transform(const RsCode& code, std::span<const Element> v, MulCounter* counter = nullptr)
{
    detail::require_length(v, code.n(), "word");
    Vector out(v.begin(), v.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        out[i] = code.field().mul(v[i], code.w_diag()[i], counter);
    return out;
}

/// The k x n generalized RS generator with entry (j, i) = v_i * alpha^(ij).
inline Matrix build_grs_generator(const Field& field, std::size_t n, std::size_t k, std::span<const Element> v)
{
    if (n != field.n() || k < 1 || k >= n)
        fail(ErrorKind::InvalidCodeParameters, "GRS generator needs 1 <= k < n = order of alpha");
    detail::require_length(v, n, "column multiplier vector");
    for (std::size_t i = 0; i < n; ++i)
        if (v[i].is_zero())
            fail(ErrorKind::ZeroMultiplier, "v_" + std::to_string(i) + " is zero");
    Matrix out(k, n);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            out(j, i) = field.mul(v[i], field.pow_alpha(static_cast<std::int64_t>(i * j)));
    return out;
}

/// Column multipliers v_i = scale * alpha^(-(b-1)i): the GRS generators whose
/// row space is exactly this code.
inline Vector grs_multipliers_for(const RsCode& code, Element scale)
{
    if (scale.is_zero())
        fail(ErrorKind::ZeroMultiplier, "scale is zero");
    Vector v(code.n());
    for (std::size_t i = 0; i < code.n(); ++i)
        v[i] = code.field().mul(scale, code.field().inv(code.w_diag()[i]));
    return v;
}

} // namespace rsr
