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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "rsrecover/gfft.hpp"
#include "rsrecover/harness.hpp"
#include "rsrecover/rs_code.hpp"

using namespace rsr;

TEST(GfftTest, KernelEntries)
{
    const GfftPlan plan(gf8());
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            EXPECT_EQ(plan.f_matrix()(i, j), oracle::a8(i * j));
            EXPECT_EQ(plan.f_inv_matrix()(i, j), oracle::a8(-i * j));
        }
}

TEST(GfftTest, KernelsAreInverse)
{
    for (const Field& f : {gf8(), Field(4, 0b10011, 15), Field(4, 0b10011, 5), Field(8, 0x11d, 255), Field(1, 3, 1)}) {
        const GfftPlan plan(f);
        EXPECT_EQ(mat_mul(f, plan.f_matrix(), plan.f_inv_matrix()), Matrix::identity(f.n()));
    }
}

TEST(GfftTest, ForwardExamples)
{
    const GfftPlan plan(gf8());
    EXPECT_EQ(plan.forward(Vector(7)), Vector(7));
    Vector unit(7);
    unit[0] = kOne;
    EXPECT_EQ(plan.forward(unit), Vector(7, kOne));
    EXPECT_THROW(plan.forward(Vector(6)), Error);
}

TEST(GfftTest, ForwardOfListElementIsScaledCodeword)
{
    // f * F must equal c * W for the example codeword, b = 2.
    const Field f = gf8();
    const GfftPlan plan(f);
    const RsCode code = RsCode::build(f, 7, 4, 2);
    Vector padded = fixture::list_element();
    padded.resize(7);
    const Vector c = fixture::codeword();
    Vector cw(7);
    for (int i = 0; i < 7; ++i)
        cw[i] = oracle::kGf8.mul(c[i], oracle::a8(i));
    EXPECT_EQ(plan.forward(padded), cw);
    EXPECT_EQ(encode_generator(code, fixture::g_a(), fixture::message()), c);
}

TEST(GfftTest, InverseExamples)
{
    const GfftPlan plan(gf8());
    EXPECT_EQ(cyclic_shift(plan.inverse(fixture::vec({2, 3, 0, 0, -1, -1, -1})), 1),
              fixture::vec({6, 5, 0, 5, -1, -1, -1}));
    Vector unit(7);
    unit[0] = kOne;
    EXPECT_EQ(plan.inverse(Vector(7, kOne)), unit);
    EXPECT_THROW(plan.inverse(Vector(8)), Error);
}

TEST(GfftTest, RoundTripRandom)
{
    const Field f(4, 0b10011, 15);
    const GfftPlan plan(f);
    SplitMix64 rng(1);
    for (int t = 0; t < 500; ++t) {
        const Vector v = rng.vector(f, 15);
        ASSERT_EQ(plan.inverse(plan.forward(v)), v);
        ASSERT_EQ(plan.forward(plan.inverse(v)), v);
    }
}

TEST(CyclicShiftTest, Examples)
{
    const Vector v{Element(1), Element(2), Element(3)};
    EXPECT_EQ(cyclic_shift(v, 0), v);
    EXPECT_EQ(cyclic_shift(v, 1), (Vector{Element(3), Element(1), Element(2)}));
    EXPECT_EQ(cyclic_shift(v, 3), v);
    EXPECT_EQ(cyclic_shift(v, -1), (Vector{Element(2), Element(3), Element(1)}));
}

TEST(GfftTest, ModulationProperty)
{
    // Shifting right by i divides component j of the inverse transform by alpha^(ij).
    const Field f(4, 0b10011, 15);
    const GfftPlan plan(f);
    SplitMix64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const Vector v = rng.vector(f, 15);
        const auto i = static_cast<std::int64_t>(rng.uniform(15));
        const Vector base = plan.inverse(v);
        const Vector shifted = plan.inverse(cyclic_shift(v, i));
        for (std::int64_t j = 0; j < 15; ++j)
            ASSERT_EQ(shifted[j], f.mul(base[j], f.pow_alpha(-i * j)));
    }
}

TEST(GfftTest, TranslationProperty)
{
    // Scaling component i by alpha^(si) shifts the inverse transform right by s.
    const Field f(4, 0b10011, 15);
    const GfftPlan plan(f);
    SplitMix64 rng(4);
    for (int t = 0; t < 100; ++t) {
        const Vector v = rng.vector(f, 15);
        const auto s = static_cast<std::int64_t>(rng.uniform(15));
        Vector scaled(15);
        for (std::int64_t i = 0; i < 15; ++i)
            scaled[i] = f.mul(v[i], f.pow_alpha(s * i));
        ASSERT_EQ(plan.inverse(scaled), cyclic_shift(plan.inverse(v), s));
    }
}

TEST(GfftTest, EvaluationMapEquivalence)
{
    for (const auto& [field, k] : {std::pair{gf8(), 4u}, std::pair{Field(4, 0b10011, 15), 7u}}) {
        const RsCode code = RsCode::build(field, field.n(), k, 1);
        const GfftPlan plan(field);
        SplitMix64 rng(k);
        for (int t = 0; t < 1000; ++t) {
            const Vector msg = rng.vector(field, k);
            Vector padded = msg;
            padded.resize(field.n());
            ASSERT_EQ(encode_evaluation(code, msg), plan.forward(padded));
        }
    }
}
