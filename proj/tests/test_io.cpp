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

#include <sstream>

#include "fixtures.hpp"
#include "rsrecover/io.hpp"

using namespace rsr;

TEST(IoTest, FieldDescriptor)
{
    EXPECT_EQ(io::field_descriptor(gf8()), "field m=3 poly=0xb n=7");
    EXPECT_EQ(io::parse_field("field m=3 poly=0xb n=7"), gf8());
    EXPECT_EQ(io::parse_field("field n=15 m=4 poly=0x13"), Field(4, 0x13, 15));
    EXPECT_THROW(io::parse_field("field m=3 poly=0xb"), Error);
    EXPECT_THROW(io::parse_field("rscode n=7 k=4 b=2"), Error);
    EXPECT_THROW(io::parse_field("field m=3 poly=0xq n=7"), Error);
}

TEST(IoTest, CodeDescriptor)
{
    const RsCode code = io::parse_code("rscode n=7 k=4 b=2", gf8());
    EXPECT_EQ(code.k(), 4u);
    EXPECT_EQ(code.b(), 2u);
    EXPECT_EQ(io::code_descriptor(code), "rscode n=7 k=4 b=2");
}

TEST(IoTest, Elements)
{
    const Field f(8, 0x11d, 255);
    EXPECT_EQ(io::format_element(Element(0xab)), "ab");
    EXPECT_EQ(io::parse_element("AB", f), Element(0xab));
    EXPECT_THROW(io::parse_element("100", f), Error);
    EXPECT_EQ(io::parse_vector(" 1 ff\t0 ", f), (Vector{Element(1), Element(0xff), Element(0)}));
}

TEST(IoTest, MatrixRoundTrip)
{
    const Matrix g_a = fixture::g_a();
    std::stringstream s;
    io::write_matrix(s, g_a);
    EXPECT_EQ(s.str().substr(0, 11), "matrix 4 7\n");
    EXPECT_EQ(io::read_matrix(s, gf8()), g_a);

    std::istringstream short_row("matrix 2 2\n1 2\n3\n");
    EXPECT_THROW(io::read_matrix(short_row, gf8()), Error);
    std::istringstream truncated("matrix 2 2\n1 2\n");
    EXPECT_THROW(io::read_matrix(truncated, gf8()), Error);
}

TEST(IoTest, CommentsAndBlankLinesSkipped)
{
    std::istringstream in("# generator\n\nfield m=3 poly=0xb n=7\n  \nmatrix 1 2\n# row\n3 5\n");
    const auto [f, m] = io::read_field_matrix(in);
    EXPECT_EQ(f, gf8());
    EXPECT_EQ(m, Matrix(1, 2, {Element(3), Element(5)}));
}

TEST(IoTest, TransformRoundTrip)
{
    const Field f = gf8();
    const GfftPlan plan(f);
    for (std::int64_t b : {1, 2}) {
        const RsCode code = RsCode::build(f, 7, 4, b);
        const Matrix g_a = b == 2 ? fixture::g_a() : build_generator_matrix(code);
        const RecoveryTransform t = precompute(code, g_a, plan);
        std::stringstream s;
        io::write_transform(s, t);
        EXPECT_EQ(s.str().find("section w_inv") != std::string::npos, b != 1);
        const RecoveryTransform back = io::read_transform(s);
        EXPECT_EQ(back.code, t.code);
        EXPECT_EQ(back.b_matrix, t.b_matrix);
        EXPECT_EQ(back.a_inv_t, t.a_inv_t);
        EXPECT_EQ(back.w_inv, t.w_inv);
        EXPECT_EQ(back.d_inv, t.d_inv);
        EXPECT_EQ(back.f_inv_kk_inv, t.f_inv_kk_inv);
        EXPECT_TRUE(recomposes(back));
    }
}

TEST(IoTest, TransformMissingSection)
{
    std::istringstream in("field m=3 poly=0xb n=7\nrscode n=7 k=4 b=2\nsection b_matrix\nmatrix 1 1\n1\n");
    EXPECT_THROW(io::read_transform(in), Error);
}

TEST(IoTest, PowerNotation)
{
    const Field f = gf8();
    EXPECT_EQ(io::format_power(f, kZero), "0");
    EXPECT_EQ(io::format_power(f, kOne), "1");
    EXPECT_EQ(io::format_power(f, Element(2)), "a");
    EXPECT_EQ(io::format_power(f, Element(5)), "a^6");
}
