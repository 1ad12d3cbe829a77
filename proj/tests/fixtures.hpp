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

#include <vector>

#include "oracles.hpp"
#include "rsrecover/linalg.hpp"

// The (7,4) code over GF(8) with zeros alpha^2, alpha^3, alpha^4 and a
// non-systematic generator matrix G_a. Entries are alpha exponents; -1 is 0.
namespace fixture {

inline rsr::Matrix from_exponents(const std::vector<std::vector<int>>& e)
{
    rsr::Matrix m(e.size(), e[0].size());
    for (std::size_t r = 0; r < e.size(); ++r)
        for (std::size_t c = 0; c < e[r].size(); ++c)
            m(r, c) = e[r][c] < 0 ? rsr::kZero : oracle::a8(e[r][c]);
    return m;
}

inline rsr::Vector vec(const std::vector<int>& e)
{
    rsr::Vector v;
    for (int x : e)
        v.push_back(x < 0 ? rsr::kZero : oracle::a8(x));
    return v;
}

inline rsr::Matrix g_a()
{
    return from_exponents({{5, 1, 3, 1, 3, 2, 1}, {6, -1, 4, 3, 6, 0, 2}, {6, 2, 2, 2, -1, 5, 6}, {4, 6, 3, 2, 0, -1, 1}});
}

inline rsr::Matrix a_inv_t()
{
    return from_exponents({{2, 0, 2, -1}, {2, 1, 2, 1}, {3, 6, 5, 5}, {6, 3, 2, 1}});
}

inline rsr::Matrix f_inv_kk_inv()
{
    return from_exponents({{4, 3, 5, 3}, {3, 0, -1, 1}, {5, -1, 3, 2}, {3, 1, 2, 6}});
}

/// B as it must be for B * f = m with the factors above; entry (0,3) is a^3.
inline rsr::Matrix b_matrix()
{
    return from_exponents({{5, 3, 1, 3}, {4, 5, 3, 0}, {5, 2, 0, 1}, {1, 1, 2, 1}});
}

inline rsr::Vector message() { return vec({3, 2, -1, 5}); }
inline rsr::Vector codeword() { return vec({2, -1, 1, -1, -1, 3, 6}); }
inline rsr::Vector list_element() { return vec({1, -1, 5, 0}); }

} // namespace fixture
