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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "rs_code.hpp"

namespace rsr {

/// All message polynomials (coefficients f_0..f_{k-1}) whose evaluation
/// codewords lie within radius_used of the received word. Candidates are
/// unique and sorted lexicographically, so two outputs describe the same set
/// iff their candidate vectors compare equal.
struct ListDecodeOutput {
    std::vector<Vector> candidates;
    std::vector<std::size_t> distances;
    std::size_t radius_used = 0;
    std::size_t multiplicity = 0; ///< interpolation multiplicity; 0 for brute force
};

enum class DecoderKind { brute_force, guruswami_sudan };

/// Radius and multiplicity left empty mean "auto".
struct DecoderConfig {
    DecoderKind kind = DecoderKind::guruswami_sudan;
    std::optional<std::size_t> radius;
    std::optional<std::size_t> multiplicity;
};

/// Largest integer t with t < n - sqrt((k-1)n), computed exactly as the
/// largest t with (n - t)^2 > (k-1)n.
inline std::size_t decoding_radius(std::size_t n, std::size_t k)
{
    if (k < 1 || k >= n)
        fail(ErrorKind::InvalidCodeParameters, "need 1 <= k < n");
    const std::uint64_t bound = static_cast<std::uint64_t>(k - 1) * n;
    std::size_t t = n;
    while (t > 0) {
        --t;
        const std::uint64_t d = n - t;
        if (d * d > bound)
            return t;
    }
    return 0;
}

inline std::size_t hamming_distance(std::span<const Element> a, std::span<const Element> b)
{
    if (a.size() != b.size())
        fail(ErrorKind::DimensionError, "words of different lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

namespace detail {

inline ListDecodeOutput finish_list(const RsCode& code, std::span<const Element> received, std::set<Vector> found,
                                    std::size_t radius, std::size_t multiplicity)
{
    ListDecodeOutput out;
    out.radius_used = radius;
    out.multiplicity = multiplicity;
    for (const Vector& f : found) {
        const std::size_t d = hamming_distance(encode_evaluation(code, f), received);
        if (d <= radius) {
            out.candidates.push_back(f);
            out.distances.push_back(d);
        }
    }
    return out;
}

} // namespace detail

/// Exhaustive oracle: every one of the q^k messages is re-encoded and kept
/// when within radius. Refuses instances with q^k > 2^24.
inline ListDecodeOutput decode_brute_force(const RsCode& code, std::span<const Element> received, std::size_t radius)
{
    const Field& f = code.field();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    detail::require_length(received, n, "received word");
    if (static_cast<std::size_t>(f.m()) * k > 24)
        fail(ErrorKind::InstanceTooLarge, "q^k = 2^" + std::to_string(f.m() * k) + " exceeds 2^24");

    const std::uint32_t q = f.size();

    // contrib[j][v] = evaluation codeword of v * x^j. Messages are walked as an
    // odometer and the codeword is patched digit by digit.
    std::vector<std::vector<Vector>> contrib(k, std::vector<Vector>(q, Vector(n)));
    for (std::size_t j = 0; j < k; ++j)
        for (std::uint32_t v = 1; v < q; ++v)
            for (std::size_t i = 0; i < n; ++i)
                contrib[j][v][i] = f.mul(Element(v), f.pow_alpha(static_cast<std::int64_t>(i * j)));

    ListDecodeOutput out;
    out.radius_used = radius;
    Vector msg(k);
    Vector word(n);
    for (;;) {
        const std::size_t d = hamming_distance(word, received);
        if (d <= radius) {
            out.candidates.push_back(msg);
            out.distances.push_back(d);
        }
        std::size_t j = 0;
        for (; j < k; ++j) {
            const std::uint32_t old = msg[j].value;
            const std::uint32_t next = old + 1 == q ? 0 : old + 1;
            for (std::size_t i = 0; i < n; ++i)
                word[i] += contrib[j][old][i] + contrib[j][next][i];
            msg[j] = Element(next);
            if (next != 0)
                break;
        }
        if (j == k)
            break;
    }

    // Sort into the canonical order shared with the other decoder.
    std::vector<std::size_t> order(out.candidates.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.candidates[a] < out.candidates[b]; });
    ListDecodeOutput sorted;
    sorted.radius_used = radius;
    for (std::size_t i : order) {
        sorted.candidates.push_back(std::move(out.candidates[i]));
        sorted.distances.push_back(out.distances[i]);
    }
    return sorted;
}

/// Interpolation parameters for a Guruswami-Sudan decode.
struct GsParameters {
    std::size_t radius = 0;
    std::size_t multiplicity = 0;
    std::size_t max_weighted_degree = 0; ///< wdeg(Q) must not exceed this
    std::size_t max_y_degree = 0;
};

namespace gs {

inline constexpr std::size_t kMaxMultiplicity = 64;

/// Monomials x^i y^j with i + w*j <= d.
inline std::uint64_t monomial_count(std::uint64_t d, std::uint64_t w)
{
    std::uint64_t total = 0;
    for (std::uint64_t j = 0; j * w <= d; ++j)
        total += d - j * w + 1;
    return total;
}

inline std::uint64_t constraint_count(std::uint64_t n, std::uint64_t s) { return n * s * (s + 1) / 2; }

/// A nonzero Q with multiplicity s at n points and weighted degree below
/// s(n - t) exists when the monomials outnumber the linear constraints.
inline bool feasible(std::size_t n, std::size_t k, std::size_t radius, std::size_t s)
{
    if (s == 0 || radius >= n)
        return false;
    const std::uint64_t agreement = static_cast<std::uint64_t>(s) * (n - radius);
    return monomial_count(agreement - 1, k - 1) > constraint_count(n, s);
}

inline std::optional<std::size_t> min_multiplicity(std::size_t n, std::size_t k, std::size_t radius)
{
    for (std::size_t s = 1; s <= kMaxMultiplicity; ++s)
        if (feasible(n, k, radius, s))
            return s;
    return std::nullopt;
}

} // namespace gs

inline GsParameters gs_parameters(const RsCode& code, const DecoderConfig& cfg)
{
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    if (k < 2)
        fail(ErrorKind::InvalidCodeParameters, "interpolation decoding needs k >= 2");
    GsParameters p;
    p.radius = cfg.radius.value_or(decoding_radius(n, k));
    if (cfg.multiplicity) {
        p.multiplicity = *cfg.multiplicity;
        if (!gs::feasible(n, k, p.radius, p.multiplicity)) {
            const auto suggested = gs::min_multiplicity(n, k, p.radius);
            fail(ErrorKind::ParameterTooSmall,
                 "multiplicity " + std::to_string(p.multiplicity) + " cannot reach radius " + std::to_string(p.radius) +
                     (suggested ? "; try multiplicity " + std::to_string(*suggested)
                                : "; no multiplicity up to 64 reaches it"));
        }
    } else {
        const auto s = gs::min_multiplicity(n, k, p.radius);
        if (!s)
            fail(ErrorKind::ParameterTooSmall,
                 "radius " + std::to_string(p.radius) + " is beyond reach; the largest guaranteed radius is " +
                     std::to_string(decoding_radius(n, k)));
        p.multiplicity = *s;
    }
    p.max_weighted_degree = p.multiplicity * (n - p.radius) - 1;
    p.max_y_degree = p.max_weighted_degree / (k - 1);
    return p;
}

namespace gs {

/// Bivariate polynomial sum_j y^j * coeffs[j](x), each x-polynomial ascending.
struct BiPoly {
    std::vector<Vector> coeffs;

    bool y_coeff_is_zero(std::size_t j) const
    {
        return j >= coeffs.size() ||
               std::all_of(coeffs[j].begin(), coeffs[j].end(), [](Element e) { return e.is_zero(); });
    }

    bool is_zero() const
    {
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            if (!y_coeff_is_zero(j))
                return false;
        return true;
    }

    /// (weighted degree, y-degree) of the leading monomial under the
    /// (1, w)-weighted order with ties broken by y-degree.
    std::pair<std::int64_t, std::int64_t> leading(std::size_t w) const
    {
        std::pair<std::int64_t, std::int64_t> best{-1, -1};
        for (std::size_t j = 0; j < coeffs.size(); ++j)
            for (std::size_t i = coeffs[j].size(); i-- > 0;)
                if (!coeffs[j][i].is_zero()) {
                    best = std::max(best, std::pair<std::int64_t, std::int64_t>(
                                              static_cast<std::int64_t>(i + w * j), static_cast<std::int64_t>(j)));
                    break;
                }
        return best;
    }
};

inline void trim(Vector& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

inline bool binomial_odd(std::size_t n, std::size_t r) { return r <= n && (n & r) == r; }

class Arith {
public:
    Arith(const Field& f, MulCounter* counter) : f_(f), counter_(counter) {}

    Element mul(Element a, Element b) const { return f_.mul(a, b, counter_); }
    const Field& field() const { return f_; }

    /// Hasse derivative D_{a,b} Q evaluated at (x0, y0): the coefficient of
    /// (x - x0)^a (y - y0)^b in Q expanded about the point.
    Element hasse(const BiPoly& q, std::size_t a, std::size_t b, Element x0, Element y0) const
    {
        Element total = kZero;
        Element ypow = kOne; // y0^(j-b)
        for (std::size_t j = b; j < q.coeffs.size(); ++j) {
            if (binomial_odd(j, b)) {
                Element inner = kZero;
                const Vector& p = q.coeffs[j];
                // Horner over the coefficients C(i,a) q_ij for i >= a.
                for (std::size_t i = p.size(); i-- > a;)
                    inner = mul(inner, x0) + (binomial_odd(i, a) ? p[i] : kZero);
                total += mul(inner, ypow);
            }
            ypow = mul(ypow, y0);
        }
        return total;
    }

    /// c1*p1 + c2*p2, coefficientwise.
    BiPoly combine(Element c1, const BiPoly& p1, Element c2, const BiPoly& p2) const
    {
        BiPoly out;
        out.coeffs.resize(std::max(p1.coeffs.size(), p2.coeffs.size()));
        for (std::size_t j = 0; j < out.coeffs.size(); ++j) {
            const std::size_t len = std::max(j < p1.coeffs.size() ? p1.coeffs[j].size() : 0,
                                             j < p2.coeffs.size() ? p2.coeffs[j].size() : 0);
            Vector& o = out.coeffs[j];
            o.assign(len, kZero);
            if (j < p1.coeffs.size())
                for (std::size_t i = 0; i < p1.coeffs[j].size(); ++i)
                    o[i] += mul(c1, p1.coeffs[j][i]);
            if (j < p2.coeffs.size())
                for (std::size_t i = 0; i < p2.coeffs[j].size(); ++i)
                    o[i] += mul(c2, p2.coeffs[j][i]);
            trim(o);
        }
        return out;
    }

    /// (x - x0) * p
    BiPoly times_linear(const BiPoly& p, Element x0) const
    {
        BiPoly out;
        out.coeffs.resize(p.coeffs.size());
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
            const Vector& src = p.coeffs[j];
            if (src.empty())
                continue;
            Vector& o = out.coeffs[j];
            o.assign(src.size() + 1, kZero);
            for (std::size_t i = 0; i < src.size(); ++i) {
                o[i + 1] += src[i];
                o[i] += mul(x0, src[i]);
            }
            trim(o);
        }
        return out;
    }

    /// Q(x, x*y + gamma), then divided by the largest power of x that divides it.
    BiPoly shift_and_reduce(const BiPoly& q, Element gamma) const
    {
        const std::size_t ydeg = q.coeffs.size();
        BiPoly out;
        out.coeffs.resize(ydeg);
        for (std::size_t l = 0; l < ydeg; ++l) {
            Vector acc;
            Element gpow = kOne; // gamma^(j-l)
            for (std::size_t j = l; j < ydeg; ++j) {
                if (binomial_odd(j, l) && !gpow.is_zero()) {
                    const Vector& p = q.coeffs[j];
                    if (acc.size() < p.size())
                        acc.resize(p.size());
                    for (std::size_t i = 0; i < p.size(); ++i)
                        acc[i] += mul(gpow, p[i]);
                }
                gpow = mul(gpow, gamma);
            }
            trim(acc);
            if (!acc.empty())
                acc.insert(acc.begin(), l, kZero);
            out.coeffs[l] = std::move(acc);
        }
        strip_x(out);
        return out;
    }

    static void strip_x(BiPoly& q)
    {
        std::size_t low = SIZE_MAX;
        for (const Vector& p : q.coeffs)
            for (std::size_t i = 0; i < p.size(); ++i)
                if (!p[i].is_zero()) {
                    low = std::min(low, i);
                    break;
                }
        if (low == SIZE_MAX || low == 0)
            return;
        for (Vector& p : q.coeffs)
            if (!p.empty())
                p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::min(low, p.size())));
    }

private:
    const Field& f_;
    MulCounter* counter_;
};

/// Koetter's iterative interpolation: the minimal (1, k-1)-weighted-degree
/// Q(x, y) with y-degree <= L having a zero of multiplicity s at every point.
inline BiPoly interpolate(const Arith& ar, std::span<const Element> xs, std::span<const Element> ys, std::size_t k,
                          const GsParameters& p)
{
    const std::size_t w = k - 1;
    std::vector<BiPoly> basis(p.max_y_degree + 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        basis[j].coeffs.resize(j + 1);
        basis[j].coeffs[j] = {kOne};
    }

    std::vector<Element> delta(basis.size());
    for (std::size_t pt = 0; pt < xs.size(); ++pt) {
        // Constraint order (y-derivative outer, x-derivative inner) keeps each
        // partial solution set closed under multiplication by (x - x0).
        for (std::size_t b = 0; b < p.multiplicity; ++b)
            for (std::size_t a = 0; a + b < p.multiplicity; ++a) {
                std::optional<std::size_t> pivot;
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    delta[j] = ar.hasse(basis[j], a, b, xs[pt], ys[pt]);
                    if (!delta[j].is_zero() && (!pivot || basis[j].leading(w) < basis[*pivot].leading(w)))
                        pivot = j;
                }
                if (!pivot)
                    continue;
                const std::size_t s = *pivot;
                const BiPoly pivot_poly = basis[s];
                for (std::size_t j = 0; j < basis.size(); ++j)
                    if (j != s && !delta[j].is_zero())
                        basis[j] = ar.combine(delta[s], basis[j], delta[j], pivot_poly);
                basis[s] = ar.times_linear(pivot_poly, xs[pt]);
            }
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j < basis.size(); ++j)
        if (basis[j].leading(w) < basis[best].leading(w))
            best = j;
    return basis[best];
}

/// Roth-Ruckenstein search for every f(x) of degree < k with (y - f(x)) | Q.
inline void find_roots(const Arith& ar, const BiPoly& q, std::size_t depth, std::size_t k, Vector& prefix,
                       std::set<Vector>& found)
{
    if (depth == k) {
        if (q.y_coeff_is_zero(0))
            found.insert(prefix);
        return;
    }
    // Q(0, y) as a univariate polynomial in y; roots by exhaustive search.
    Vector at_zero(q.coeffs.size());
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
        at_zero[j] = q.coeffs[j].empty() ? kZero : q.coeffs[j][0];
    trim(at_zero);
    if (at_zero.empty())
        return;
    const Field& f = ar.field();
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        const Element gamma(v);
        if (!poly_eval(f, at_zero, gamma).is_zero())
            continue;
        prefix.push_back(gamma);
        find_roots(ar, ar.shift_and_reduce(q, gamma), depth + 1, k, prefix, found);
        prefix.pop_back();
    }
}

} // namespace gs

/// Guruswami-Sudan list decoding of an evaluation-map codeword: interpolate
/// through (alpha^i, received_i) with multiplicity s, factor out the
/// y-roots, and keep those within the radius.
inline ListDecodeOutput decode_guruswami_sudan(const RsCode& code, std::span<const Element> received,
                                               const DecoderConfig& cfg, MulCounter* counter = nullptr)
{
    detail::require_length(received, code.n(), "received word");
    const GsParameters params = gs_parameters(code, cfg);
    const gs::Arith ar(code.field(), counter);

    Vector xs(code.n());
    for (std::size_t i = 0; i < code.n(); ++i)
        xs[i] = code.field().pow_alpha(static_cast<std::int64_t>(i));

    gs::BiPoly q = gs::interpolate(ar, xs, received, code.k(), params);
    if (q.is_zero() || q.leading(code.k() - 1).first > static_cast<std::int64_t>(params.max_weighted_degree))
        fail(ErrorKind::ParameterTooSmall, "interpolation found no polynomial within the weighted-degree budget");

    gs::Arith::strip_x(q);
    std::set<Vector> found;
    Vector prefix;
    gs::find_roots(ar, q, 0, code.k(), prefix, found);

    return detail::finish_list(code, received, std::move(found), params.radius, params.multiplicity);
}

inline ListDecodeOutput list_decode(const RsCode& code, std::span<const Element> received, const DecoderConfig& cfg,
                                    MulCounter* counter = nullptr)
{
    if (cfg.kind == DecoderKind::brute_force)
        return decode_brute_force(code, received, cfg.radius.value_or(decoding_radius(code.n(), code.k())));
    return decode_guruswami_sudan(code, received, cfg, counter);
}

} // namespace rsr
