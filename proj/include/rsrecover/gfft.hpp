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

#include <cstdint>
#include <span>

#include "gf.hpp"
#include "linalg.hpp"

namespace rsr {

/// Right cyclic shift: out[i] = v[(i - s) mod n]. Negative s shifts left.
inline Vector cyclic_shift(std::span<const Element> v, std::int64_t s)
{
    const auto n = static_cast<std::int64_t>(v.size());
    Vector out(v.size());
    if (n == 0)
        return out;
    const std::int64_t shift = ((s % n) + n) % n;
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>((i + shift) % n)] = v[static_cast<std::size_t>(i)];
    return out;
}

/// The n-point Galois Field Fourier Transform over the field's subgroup of
/// order n. Both kernel matrices are built once; transforms are direct
/// O(n^2) products against them.
///
/// F[i][j] = alpha^(ij) and Finv[i][j] = alpha^(-ij). Since n divides 2^m - 1
/// it is odd, so n = 1 in characteristic 2 and Finv needs no 1/n scaling.
class GfftPlan {
public:
    explicit GfftPlan(Field field) : field_(std::move(field)), n_(field_.n()), forward_(n_, n_), inverse_(n_, n_)
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                const auto e = static_cast<std::int64_t>(i * j);
                forward_(i, j) = field_.pow_alpha(e);
                inverse_(i, j) = field_.pow_alpha(-e);
            }
    }

    const Field& field() const noexcept { return field_; }
    std::size_t n() const noexcept { return n_; }
    const Matrix& f_matrix() const noexcept { return forward_; }
    const Matrix& f_inv_matrix() const noexcept { return inverse_; }

    /// v * F, i.e. out[j] = sum_i v[i] alpha^(ij).
    Vector forward(std::span<const Element> v) const { return apply(v, forward_); }

    /// v * Finv; forward() followed by inverse() is the identity.
    Vector inverse(std::span<const Element> v) const { return apply(v, inverse_); }

private:
    Vector apply(std::span<const Element> v, const Matrix& kernel) const
    {
        if (v.size() != n_)
            fail(ErrorKind::DimensionError,
                 "transform length " + std::to_string(n_) + ", input length " + std::to_string(v.size()));
        return vec_mat(field_, v, kernel);
    }

    Field field_;
    std::size_t n_;
    Matrix forward_;
    Matrix inverse_;
};

} // namespace rsr
