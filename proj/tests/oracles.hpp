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

// Reference computations that share no code with the library: bitwise
// multiply-and-reduce arithmetic and direct sums.

#include <cstdint>
#include <vector>

#include "rsrecover/gf.hpp"

namespace oracle {

inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, int m, std::uint32_t poly)
{
    std::uint32_t acc = 0;
    for (int i = 0; i < m; ++i) {
        if (b & (1u << i))
            acc ^= a;
        a <<= 1;
        if (a & (1u << m))
            a ^= poly;
    }
    return acc;
}

inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, int m, std::uint32_t poly)
{
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        r = mul(r, a, m, poly);
    return r;
}

/// alpha^e in GF(8) with x^3 + x + 1, alpha = x; e may be negative.
inline rsr::Element a8(int e)
{
    return rsr::Element(pow(2, static_cast<std::uint64_t>(((e % 7) + 7) % 7), 3, 0b1011));
}

struct Arith {
    int m;
    std::uint32_t poly;

    rsr::Element mul(rsr::Element a, rsr::Element b) const { return rsr::Element(oracle::mul(a.value, b.value, m, poly)); }
    rsr::Element pow(rsr::Element a, std::uint64_t e) const { return rsr::Element(oracle::pow(a.value, e, m, poly)); }

    rsr::Element inv(rsr::Element a) const
    {
        for (std::uint32_t x = 1; x < (1u << m); ++x)
            if (oracle::mul(a.value, x, m, poly) == 1)
                return rsr::Element(x);
        return rsr::Element(0);
    }

    /// Sum of c_i x^i by direct powers.
    rsr::Element eval(const std::vector<rsr::Element>& c, rsr::Element x) const
    {
        rsr::Element acc{0};
        for (std::size_t i = 0; i < c.size(); ++i)
            acc += mul(c[i], pow(x, i));
        return acc;
    }

    std::vector<std::vector<rsr::Element>> matmul(const std::vector<std::vector<rsr::Element>>& a,
                                                  const std::vector<std::vector<rsr::Element>>& b) const
    {
        std::vector<std::vector<rsr::Element>> out(a.size(), std::vector<rsr::Element>(b[0].size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                for (std::size_t l = 0; l < b.size(); ++l)
                    out[i][j] += mul(a[i][l], b[l][j]);
        return out;
    }
};

inline constexpr Arith kGf8{3, 0b1011};
inline constexpr Arith kGf16{4, 0b10011};

} // namespace oracle
