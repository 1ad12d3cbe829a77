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
#include <span>
#include <string>

#include "error.hpp"
#include "gf.hpp"
#include "gfft.hpp"
#include "linalg.hpp"
#include "rs_code.hpp"

namespace rsr {

/// Inverse GFFT of (g_0, ..., g_{n-k}, 0, ..., 0) right-shifted by b - 1.
///
/// The result is (G_0, ..., G_{k-1}, 0, ..., 0): entry j equals
/// gbar(alpha^(-j)), which vanishes exactly on the last n - k positions.
inline Vector compute_spectrum_diagonal(const RsCode& code, const GfftPlan& plan)
{
    if (plan.n() != code.n() || !(plan.field() == code.field()))
        fail(ErrorKind::DimensionError, "GFFT plan does not match the code");
    Vector padded(code.n());
    std::copy(code.g_coeffs().begin(), code.g_coeffs().end(), padded.begin());
    Vector spectrum = cyclic_shift(plan.inverse(padded), static_cast<std::int64_t>(code.b()) - 1);

    for (std::size_t j = 0; j < code.n(); ++j) {
        const bool head = j < code.k();
        if (head == spectrum[j].is_zero())
            fail(ErrorKind::SpectrumStructureViolation,
                 "spectrum entry " + std::to_string(j) + (head ? " is zero" : " is nonzero"));
    }
    return spectrum;
}

/// The precomputed recovery matrix B together with the factors it was
/// composed from:
///
///   B = (A^T)^-1 * (W_kk)^-1 * (Finv_kk)^-1 * (D_kk)^-1
///
/// where G_a = A * G, and W_kk, Finv_kk, D_kk are upper-left k x k blocks.
/// Immutable once built; recover_message may be called concurrently.
struct RecoveryTransform {
    RsCode code;
    Matrix a_inv_t;      ///< (A^T)^-1
    Vector d_inv;        ///< diagonal of (D_kk)^-1
    Vector w_inv;        ///< diagonal of (W_kk)^-1
    Matrix f_inv_kk_inv; ///< (Finv_kk)^-1
    Matrix b_matrix;
};

/// Multiplies the four factors. With skip_identity_w the W factor is left out,
/// which is only valid when b = 1.
inline Matrix compose_recovery_matrix(const Field& f, const Matrix& a_inv_t, std::span<const Element> w_inv,
                                      const Matrix& f_inv_kk_inv, std::span<const Element> d_inv,
                                      bool skip_identity_w = false)
{
    Matrix b = skip_identity_w ? a_inv_t : mat_mul(f, a_inv_t, Matrix::diagonal(w_inv));
    b = mat_mul(f, b, f_inv_kk_inv);
    return mat_mul(f, b, Matrix::diagonal(d_inv));
}

/// One-time precomputation for a code and a registered generator matrix g_a.
inline RecoveryTransform precompute(const RsCode& code, const Matrix& g_a, const GfftPlan& plan)
{
    const Field& f = code.field();
    const std::size_t k = code.k();

    // i. banded G from g(x)
    const Matrix g = build_generator_matrix(code);

    // ii. G_a = A * G, then (A^T)^-1
    check_generator(code, g_a);
    const Matrix a = solve_transform(f, g_a, g);
    Matrix a_inv_t = mat_inv(f, a.transpose());

    // iii. spectrum of g, shifted by b - 1
    const Vector spectrum = compute_spectrum_diagonal(code, plan);

    // iv. (D_kk)^-1 and (W_kk)^-1
    Vector d_inv(k);
    Vector w_inv(k);
    for (std::size_t j = 0; j < k; ++j) {
        d_inv[j] = f.inv(spectrum[j]);
        w_inv[j] = f.pow_alpha(-static_cast<std::int64_t>((code.b() - 1) * j));
    }

    // v. (Finv_kk)^-1 and B
    Matrix f_inv_kk_inv = mat_inv(f, plan.f_inv_matrix().top_left(k, k));
    Matrix b = compose_recovery_matrix(f, a_inv_t, w_inv, f_inv_kk_inv, d_inv, code.b() == 1);

    return RecoveryTransform{code, std::move(a_inv_t), std::move(d_inv), std::move(w_inv), std::move(f_inv_kk_inv),
                             std::move(b)};
}

/// True when b_matrix equals the product of the stored factors.
inline bool recomposes(const RecoveryTransform& t)
{
    return t.b_matrix ==
           compose_recovery_matrix(t.code.field(), t.a_inv_t, t.w_inv, t.f_inv_kk_inv, t.d_inv, false);
}

/// B * f^T for one list element f. f may be the full n-tuple as long as its
/// coordinates k..n-1 are zero. Costs k^2 counted multiplications.
inline Vector recover_message(const RecoveryTransform& t, std::span<const Element> f, MulCounter* counter = nullptr)
{
    const std::size_t k = t.code.k();
    if (f.size() < k || f.size() > t.code.n())
        fail(ErrorKind::DimensionError, "list element has length " + std::to_string(f.size()) + ", expected " +
                                            std::to_string(k));
    for (std::size_t i = k; i < f.size(); ++i)
        if (!f[i].is_zero())
            fail(ErrorKind::TrailingNonzero, "list element coordinate " + std::to_string(i) + " is nonzero");
    return mat_vec(t.code.field(), t.b_matrix, f.first(k), counter);
}

/// Componentwise division word_i / v_i: the preprocessing that turns a GRS
/// codeword into an evaluation codeword. The inverses are precomputed, so a
/// counter sees n multiplications.
inline Vector recover_by_scaling(const Field& field, std::span<const Element> v, std::span<const Element> word,
                                 MulCounter* counter = nullptr)
{
    if (v.size() != word.size())
        fail(ErrorKind::DimensionError, "multiplier and word lengths differ");
    Vector out(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (v[i].is_zero())
            fail(ErrorKind::ZeroMultiplier, "v_" + std::to_string(i) + " is zero");
        out[i] = field.mul(word[i], field.inv(v[i]), counter);
    }
    return out;
}

} // namespace rsr
