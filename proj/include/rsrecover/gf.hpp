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

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace rsr {

/// An element of GF(2^m) in polynomial basis: bit i is the coefficient of x^i.
struct Element {
    std::uint32_t value = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const noexcept { return value == 0; }
    constexpr bool is_one() const noexcept { return value == 1; }

    friend constexpr auto operator<=>(Element, Element) = default;

    // Characteristic 2: addition and subtraction are both XOR.
    friend constexpr Element operator+(Element a, Element b) noexcept { return Element(a.value ^ b.value); }
    friend constexpr Element operator-(Element a, Element b) noexcept { return Element(a.value ^ b.value); }
    constexpr Element& operator+=(Element b) noexcept
    {
        value ^= b.value;
        return *this;
    }
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

enum class CountMode {
    schematic,  ///< every mul call counts once
    nontrivial, ///< calls with a 0 or 1 operand are free
};

/// Per-task tally of field multiplications. Owned by the caller and passed
/// explicitly to the operations that should be accounted.
struct MulCounter {
    std::uint64_t count = 0;
    CountMode mode = CountMode::schematic;

    void tick(Element a, Element b) noexcept
    {
        if (mode == CountMode::nontrivial && (a.value <= 1 || b.value <= 1))
            return;
        ++count;
    }
};

/// GF(2^m) with log/antilog tables and a designated element alpha of order n.
///
/// Tables are shared between copies, so a Field is cheap to pass by value and
/// immutable after construction.
class Field {
public:
    static constexpr int kMaxDegree = 16;

    Field(int m, std::uint32_t primitive_poly, std::uint32_t n) : m_(m), poly_(primitive_poly), n_(n)
    {
        if (m < 1 || m > kMaxDegree)
            fail(ErrorKind::PolynomialNotPrimitive, "extension degree " + std::to_string(m) + " outside [1, 16]");
        if (std::bit_width(primitive_poly) != static_cast<unsigned>(m) + 1)
            fail(ErrorKind::PolynomialNotPrimitive, "polynomial degree differs from m=" + std::to_string(m));
        if ((primitive_poly & 1u) == 0)
            fail(ErrorKind::PolynomialNotPrimitive, "polynomial divisible by x");

        const std::uint32_t order = (1u << m) - 1;
        if (n == 0 || order % n != 0)
            fail(ErrorKind::InvalidSubgroupOrder, std::to_string(n) + " does not divide " + std::to_string(order));

        auto t = std::make_shared<Tables>();
        t->exp.resize(2 * static_cast<std::size_t>(order));
        t->log.assign(std::size_t{1} << m, -1);

        // Walk the powers of x modulo the polynomial. It is primitive iff the
        // walk first returns to 1 after exactly 2^m - 1 steps.
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            if (i > 0 && x == 1)
                fail(ErrorKind::PolynomialNotPrimitive, "root has order " + std::to_string(i));
            t->exp[i] = x;
            t->log[x] = static_cast<std::int32_t>(i);
            x <<= 1;
            if (x & (1u << m))
                x ^= primitive_poly;
        }
        if (x != 1)
            fail(ErrorKind::PolynomialNotPrimitive, "polynomial is reducible");
        for (std::uint32_t i = order; i < t->exp.size(); ++i)
            t->exp[i] = t->exp[i - order];

        step_ = order / n;
        tables_ = std::move(t);
        alpha_ = Element(tables_->exp[step_ % order]);
    }

    int m() const noexcept { return m_; }
    std::uint32_t primitive_poly() const noexcept { return poly_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t size() const noexcept { return 1u << m_; }
    Element alpha() const noexcept { return alpha_; }

    bool contains(Element a) const noexcept { return a.value < size(); }

    static constexpr Element add(Element a, Element b) noexcept { return a + b; }

    Element mul(Element a, Element b) const noexcept
    {
        if (a.is_zero() || b.is_zero())
            return kZero;
        return Element(tables_->exp[static_cast<std::size_t>(tables_->log[a.value] + tables_->log[b.value])]);
    }

    Element mul(Element a, Element b, MulCounter* counter) const noexcept
    {
        if (counter)
            counter->tick(a, b);
        return mul(a, b);
    }

    Element inv(Element a) const
    {
        if (a.is_zero())
            fail(ErrorKind::DivisionByZero, "inverse of 0");
        const std::uint32_t order = size() - 1;
        return Element(tables_->exp[(order - static_cast<std::uint32_t>(tables_->log[a.value])) % order]);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element pow(Element a, std::int64_t e) const
    {
        if (a.is_zero()) {
            if (e < 0)
                fail(ErrorKind::DivisionByZero, "negative power of 0");
            return e == 0 ? kOne : kZero;
        }
        const std::int64_t order = size() - 1;
        const std::int64_t r = ((tables_->log[a.value] * (e % order)) % order + order) % order;
        return Element(tables_->exp[static_cast<std::size_t>(r)]);
    }

    /// alpha^(e mod n); e may be negative.
    Element pow_alpha(std::int64_t e) const noexcept
    {
        const std::int64_t n = n_;
        const std::int64_t r = ((e % n) + n) % n;
        return Element(tables_->exp[static_cast<std::size_t>(r) * step_ % (size() - 1)]);
    }

    /// The exponent i in [0, n) with alpha^i == a, if a lies in the subgroup.
    std::optional<std::uint32_t> alpha_log(Element a) const noexcept
    {
        if (a.is_zero() || !contains(a))
            return std::nullopt;
        const auto l = static_cast<std::uint32_t>(tables_->log[a.value]);
        if (l % step_ != 0)
            return std::nullopt;
        return l / step_;
    }

    /// log_beta(a) where beta is the root of the primitive polynomial.
    std::uint32_t log(Element a) const
    {
        if (a.is_zero())
            fail(ErrorKind::DivisionByZero, "log of 0");
        return static_cast<std::uint32_t>(tables_->log[a.value]);
    }

    Element antilog(std::uint32_t i) const noexcept { return Element(tables_->exp[i % (size() - 1)]); }

    friend bool operator==(const Field& a, const Field& b) noexcept
    {
        return a.m_ == b.m_ && a.poly_ == b.poly_ && a.n_ == b.n_;
    }

private:
    struct Tables {
        std::vector<std::uint32_t> exp; // doubled so log sums need no reduction
        std::vector<std::int32_t> log;
    };

    int m_;
    std::uint32_t poly_;
    std::uint32_t n_;
    std::uint32_t step_ = 1;
    Element alpha_;
    std::shared_ptr<const Tables> tables_;
};

/// The GF(8) field used throughout the worked examples: x^3 + x + 1, n = 7.
inline Field gf8() { return Field(3, 0b1011, 7); }

} // namespace rsr
