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

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "recovery.hpp"
#include "rs_code.hpp"

// Text formats. Elements are lowercase hex without a prefix, whitespace
// separated. Descriptor lines:
//
//   field m=<int> poly=0x<hex> n=<int>
//   rscode n=<int> k=<int> b=<int>
//   matrix <rows> <cols>        followed by one line per row

namespace rsr::io {

namespace detail {

inline std::uint64_t parse_uint(std::string_view s, int base, std::string_view what)
{
    if (base == 16 && (s.starts_with("0x") || s.starts_with("0X")))
        s.remove_prefix(2);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        fail(ErrorKind::ParseError, "bad " + std::string(what) + " '" + std::string(s) + "'");
    return v;
}

/// Splits "key=value" tokens after the leading keyword.
inline std::map<std::string, std::string> parse_descriptor(const std::string& line, std::string_view keyword)
{
    std::istringstream in(line);
    std::string head;
    in >> head;
    if (head != keyword)
        fail(ErrorKind::ParseError, "expected '" + std::string(keyword) + "' line, got '" + line + "'");
    std::map<std::string, std::string> kv;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            fail(ErrorKind::ParseError, "expected key=value, got '" + tok + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

inline const std::string& require_key(const std::map<std::string, std::string>& kv, const std::string& key)
{
    const auto it = kv.find(key);
    if (it == kv.end())
        fail(ErrorKind::ParseError, "missing '" + key + "'");
    return it->second;
}

/// Next line that is neither blank nor a '#' comment.
inline std::optional<std::string> next_line(std::istream& in)
{
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto last = line.find_last_not_of(" \t\r");
        return line.substr(first, last - first + 1);
    }
    return std::nullopt;
}

inline std::string require_line(std::istream& in, std::string_view what)
{
    auto line = next_line(in);
    if (!line)
        fail(ErrorKind::ParseError, "unexpected end of input, expected " + std::string(what));
    return *line;
}

} // namespace detail

inline std::string format_element(Element e)
{
    std::ostringstream out;
    out << std::hex << e.value;
    return out.str();
}

inline Element parse_element(std::string_view token, const Field& field)
{
    const auto v = detail::parse_uint(token, 16, "element");
    if (v >= field.size())
        fail(ErrorKind::ParseError, "element " + std::string(token) + " outside GF(2^" + std::to_string(field.m()) + ")");
    return Element(static_cast<std::uint32_t>(v));
}

inline std::string format_vector(std::span<const Element> v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ' ';
        out += format_element(v[i]);
    }
    return out;
}

inline Vector parse_vector(std::string_view text, const Field& field)
{
    Vector out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok)
        out.push_back(parse_element(tok, field));
    return out;
}

/// Every non-comment line of the stream as one vector.
inline std::vector<Vector> read_vectors(std::istream& in, const Field& field)
{
    std::vector<Vector> out;
    while (auto line = detail::next_line(in))
        out.push_back(parse_vector(*line, field));
    return out;
}

inline std::string field_descriptor(const Field& f)
{
    std::ostringstream out;
    out << "field m=" << f.m() << " poly=0x" << std::hex << f.primitive_poly() << std::dec << " n=" << f.n();
    return out.str();
}

inline Field parse_field(const std::string& line)
{
    const auto kv = detail::parse_descriptor(line, "field");
    const auto m = detail::parse_uint(detail::require_key(kv, "m"), 10, "m");
    const auto poly = detail::parse_uint(detail::require_key(kv, "poly"), 16, "poly");
    const auto n = detail::parse_uint(detail::require_key(kv, "n"), 10, "n");
    if (m > 64 || poly > UINT32_MAX || n > UINT32_MAX)
        fail(ErrorKind::ParseError, "field parameters out of range");
    return Field(static_cast<int>(m), static_cast<std::uint32_t>(poly), static_cast<std::uint32_t>(n));
}

inline std::string code_descriptor(const RsCode& c)
{
    return "rscode n=" + std::to_string(c.n()) + " k=" + std::to_string(c.k()) + " b=" + std::to_string(c.b());
}

inline RsCode parse_code(const std::string& line, const Field& field)
{
    const auto kv = detail::parse_descriptor(line, "rscode");
    const auto n = detail::parse_uint(detail::require_key(kv, "n"), 10, "n");
    const auto k = detail::parse_uint(detail::require_key(kv, "k"), 10, "k");
    const auto b = detail::parse_uint(detail::require_key(kv, "b"), 10, "b");
    return RsCode::build(field, n, k, static_cast<std::int64_t>(b));
}

inline void write_matrix(std::ostream& out, const Matrix& m)
{
    out << "matrix " << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r)
        out << format_vector(m.row(r)) << '\n';
}

inline Matrix read_matrix(std::istream& in, const Field& field)
{
    std::istringstream head(detail::require_line(in, "matrix header"));
    std::string word;
    std::size_t rows = 0, cols = 0;
    if (!(head >> word >> rows >> cols) || word != "matrix")
        fail(ErrorKind::ParseError, "expected 'matrix <rows> <cols>'");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vector row = parse_vector(detail::require_line(in, "matrix row"), field);
        if (row.size() != cols)
            fail(ErrorKind::ParseError, "matrix row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                                            " entries, expected " + std::to_string(cols));
        std::copy(row.begin(), row.end(), m.row(r).begin());
    }
    return m;
}

/// A field line followed by a matrix block.
inline std::pair<Field, Matrix> read_field_matrix(std::istream& in)
{
    Field f = parse_field(detail::require_line(in, "field descriptor"));
    Matrix m = read_matrix(in, f);
    return {std::move(f), std::move(m)};
}

/// Transform export: descriptors, B, then the factors under "section" labels.
/// The W factor is omitted for b = 1, where it is the identity.
inline void write_transform(std::ostream& out, const RecoveryTransform& t)
{
    out << field_descriptor(t.code.field()) << '\n' << code_descriptor(t.code) << '\n';
    out << "section b_matrix\n";
    write_matrix(out, t.b_matrix);
    out << "section a_inv_t\n";
    write_matrix(out, t.a_inv_t);
    if (t.code.b() != 1) {
        out << "section w_inv\n";
        write_matrix(out, Matrix(1, t.w_inv.size(), t.w_inv));
    }
    out << "section f_inv_kk_inv\n";
    write_matrix(out, t.f_inv_kk_inv);
    out << "section d_inv\n";
    write_matrix(out, Matrix(1, t.d_inv.size(), t.d_inv));
}

inline RecoveryTransform read_transform(std::istream& in)
{
    Field f = parse_field(detail::require_line(in, "field descriptor"));
    RsCode code = parse_code(detail::require_line(in, "code descriptor"), f);
    std::map<std::string, Matrix> sections;
    while (auto line = detail::next_line(in)) {
        std::istringstream s(*line);
        std::string word, name;
        if (!(s >> word >> name) || word != "section")
            fail(ErrorKind::ParseError, "expected 'section <name>', got '" + *line + "'");
        sections[name] = read_matrix(in, f);
    }
    auto take = [&](const std::string& name) -> Matrix {
        const auto it = sections.find(name);
        if (it == sections.end())
            fail(ErrorKind::ParseError, "transform file lacks section " + name);
        return it->second;
    };
    const std::size_t k = code.k();
    RecoveryTransform t{code, take("a_inv_t"), take("d_inv").row_vector(0), Vector(k, kOne), take("f_inv_kk_inv"),
                        take("b_matrix")};
    if (sections.contains("w_inv"))
        t.w_inv = sections.at("w_inv").row_vector(0);
    if (t.b_matrix.rows() != k || t.b_matrix.cols() != k || t.d_inv.size() != k || t.w_inv.size() != k)
        fail(ErrorKind::ParseError, "transform sections do not match k=" + std::to_string(k));
    return t;
}

/// alpha-power rendering for human-readable output: "0", "1", "a^3".
inline std::string format_power(const Field& f, Element e)
{
    if (e.is_zero())
        return "0";
    const auto l = f.alpha_log(e);
    if (!l)
        return format_element(e);
    if (*l == 0)
        return "1";
    if (*l == 1)
        return "a";
    return "a^" + std::to_string(*l);
}

} // namespace rsr::io
