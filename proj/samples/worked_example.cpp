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

// Walks through recovery for the (7,4) code over GF(8) with zeros
// alpha^2, alpha^3, alpha^4 and a non-systematic generator matrix.

#include <iostream>

#include "rsrecover/rsrecover.hpp"

namespace {

using namespace rsr;

void show(const char* name, const Field& f, const Matrix& m)
{
    std::cout << name << " =\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::cout << "  ";
        for (std::size_t c = 0; c < m.cols(); ++c)
            std::cout << (c ? " " : "") << io::format_power(f, m(r, c));
        std::cout << '\n';
    }
}

void show(const char* name, const Field& f, const Vector& v)
{
    std::cout << name << " = (";
    for (std::size_t i = 0; i < v.size(); ++i)
        std::cout << (i ? ", " : "") << io::format_power(f, v[i]);
    std::cout << ")\n";
}

Element a(int e) { return gf8().pow_alpha(e); }

} // namespace

int main()
{
    const Field f = gf8();
    const RsCode code = RsCode::build(f, 7, 4, 2);
    const GfftPlan plan(f);

    const Matrix g_a = Matrix::from_rows({{a(5), a(1), a(3), a(1), a(3), a(2), a(1)},
                                          {a(6), kZero, a(4), a(3), a(6), a(0), a(2)},
                                          {a(6), a(2), a(2), a(2), kZero, a(5), a(6)},
                                          {a(4), a(6), a(3), a(2), a(0), kZero, a(1)}});

    show("g(x) coefficients", f, code.g_coeffs());
    show("G", f, build_generator_matrix(code));
    show("G_a", f, g_a);
    show("spectrum", f, compute_spectrum_diagonal(code, plan));

    const RecoveryTransform t = precompute(code, g_a, plan);
    show("(A^T)^-1", f, t.a_inv_t);
    show("(W_kk)^-1", f, t.w_inv);
    show("(Finv_kk)^-1", f, t.f_inv_kk_inv);
    show("(D_kk)^-1", f, t.d_inv);
    show("B", f, t.b_matrix);

    const Vector m{a(3), a(2), kZero, a(5)};
    const Vector c = encode_generator(code, g_a, m);
    show("m", f, m);
    show("c = m G_a", f, c);

    Vector r = c;
    r[3] = r[3] + a(4);
    r[6] = r[6] + a(0);
    show("r (two errors)", f, r);

    const ListDecodeOutput list = list_decode(code, narrow_sense_transform(code, r), {});
    std::cout << "list decoding radius " << list.radius_used << ", multiplicity " << list.multiplicity << '\n';
    for (std::size_t i = 0; i < list.candidates.size(); ++i) {
        const Vector msg = recover_message(t, list.candidates[i]);
        show("  f", f, list.candidates[i]);
        show("    B f", f, msg);
        if (msg == m)
            std::cout << "    matches the transmitted message\n";
    }
    return 0;
}
