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
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"
#include "gf.hpp"
#include "gfft.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "list_decoding.hpp"
#include "recovery.hpp"
#include "rs_code.hpp"

namespace rsr {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
/// increment 0x9e3779b97f4a7c15 and each output is the state passed through
/// the finalizer z ^= z >> 30; z *= 0xbf58476d1ce4e5b9; z ^= z >> 27;
/// z *= 0x94d049bb133111eb; z ^= z >> 31.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection of the biased tail.
    std::uint64_t uniform(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % bound;
    }

    /// Uniform field element: the top m bits of one output.
    Element element(const Field& f) noexcept { return Element(static_cast<std::uint32_t>(next() >> (64 - f.m()))); }

    Element nonzero_element(const Field& f) noexcept
    {
        return Element(static_cast<std::uint32_t>(1 + uniform(f.size() - 1)));
    }

    /// Uniform replacement different from `old`.
    Element other_element(const Field& f, Element old) noexcept
    {
        const auto v = static_cast<std::uint32_t>(uniform(f.size() - 1));
        return Element(v >= old.value ? v + 1 : v);
    }

    Vector vector(const Field& f, std::size_t len)
    {
        Vector v(len);
        for (auto& e : v)
            e = element(f);
        return v;
    }

private:
    std::uint64_t state_;
};

inline Matrix random_invertible_matrix(const Field& f, std::size_t k, SplitMix64& rng)
{
    for (;;) {
        Matrix m(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                m(r, c) = rng.element(f);
        if (rank(f, m) == k)
            return m;
    }
}

/// Where the registered generator matrix comes from.
struct GeneratorSource {
    enum class Kind { banded, file, grs, random };
    Kind kind = Kind::banded;
    std::string path;        ///< matrix file (file) or multiplier vector file (grs)
    std::uint64_t seed = 0;  ///< random basis seed

    static GeneratorSource parse(const std::string& text)
    {
        GeneratorSource g;
        if (text == "banded")
            return g;
        if (text.starts_with("grs:")) {
            g.kind = Kind::grs;
            g.path = text.substr(4);
        } else if (text.starts_with("random:")) {
            g.kind = Kind::random;
            g.seed = io::detail::parse_uint(text.substr(7), 10, "random seed");
        } else {
            g.kind = Kind::file;
            g.path = text;
        }
        return g;
    }
};

/// Errors are either an exact Hamming weight or independent per-symbol
/// substitutions. Substituted symbols always differ from the original.
struct ErrorModel {
    std::size_t weight = 0;
    std::optional<double> probability;

    static ErrorModel parse(const std::string& text)
    {
        ErrorModel m;
        if (text.starts_with("p=")) {
            try {
                m.probability = std::stod(text.substr(2));
            } catch (const std::exception&) {
                fail(ErrorKind::ParseError, "bad error probability '" + text + "'");
            }
            if (*m.probability < 0.0 || *m.probability > 1.0)
                fail(ErrorKind::ParseError, "error probability outside [0, 1]");
        } else {
            m.weight = io::detail::parse_uint(text, 10, "error weight");
        }
        return m;
    }

    std::string to_string() const
    {
        if (probability) {
            std::ostringstream s;
            s << "p=" << *probability;
            return s.str();
        }
        return std::to_string(weight);
    }
};

inline Vector corrupt(const Field& f, std::span<const Element> word, const ErrorModel& model, SplitMix64& rng)
{
    Vector out(word.begin(), word.end());
    if (model.probability) {
        // 53-bit uniform in [0, 1)
        for (auto& e : out)
            if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < *model.probability)
                e = rng.other_element(f, e);
        return out;
    }
    if (model.weight > out.size())
        fail(ErrorKind::InvalidCodeParameters, "error weight exceeds word length");
    // Partial Fisher-Yates picks `weight` distinct positions.
    std::vector<std::size_t> pos(out.size());
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    for (std::size_t i = 0; i < model.weight; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.uniform(pos.size() - i));
        std::swap(pos[i], pos[j]);
        out[pos[i]] = rng.other_element(f, out[pos[i]]);
    }
    return out;
}

struct ExperimentConfig {
    Field field = gf8();
    std::size_t n = 7;
    std::size_t k = 4;
    std::int64_t b = 1;
    GeneratorSource generator;
    DecoderConfig decoder;
    ErrorModel errors;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

/// Aggregated results. Merging is associative and commutative: counts add
/// and the failure list is kept sorted.
struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t recovery_successes = 0;
    std::uint64_t list_size_total = 0;
    std::uint64_t recovered_elements = 0;
    std::uint64_t trial_errors = 0; ///< trials aborted by a decoder error
    std::uint64_t w_mults = 0;
    std::uint64_t decode_mults = 0;
    std::uint64_t recovery_mults = 0;
    std::uint64_t scaling_mults = 0; ///< compare-scaling only
    std::vector<std::uint64_t> failures;

    void merge(const TrialReport& o)
    {
        trials += o.trials;
        recovery_successes += o.recovery_successes;
        list_size_total += o.list_size_total;
        recovered_elements += o.recovered_elements;
        trial_errors += o.trial_errors;
        w_mults += o.w_mults;
        decode_mults += o.decode_mults;
        recovery_mults += o.recovery_mults;
        scaling_mults += o.scaling_mults;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
        std::sort(failures.begin(), failures.end());
    }

    double average_list_size() const
    {
        return trials ? static_cast<double>(list_size_total) / static_cast<double>(trials) : 0.0;
    }

    friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Line-oriented key=value rendering; identical reports give identical text.
inline std::string format_report(const TrialReport& r)
{
    const std::uint64_t g = std::gcd(r.list_size_total, std::max<std::uint64_t>(r.trials, 1));
    std::ostringstream out;
    out << "trials=" << r.trials << '\n'
        << "recovery_successes=" << r.recovery_successes << '\n'
        << "list_size_total=" << r.list_size_total << '\n'
        << "average_list_size=" << r.list_size_total / g << '/' << std::max<std::uint64_t>(r.trials, 1) / g << '\n'
        << "average_list_size_decimal=" << std::fixed << std::setprecision(6) << r.average_list_size() << '\n'
        << "recovered_elements=" << r.recovered_elements << '\n'
        << "trial_errors=" << r.trial_errors << '\n'
        << "mults_w_transform=" << r.w_mults << '\n'
        << "mults_decode=" << r.decode_mults << '\n'
        << "mults_recovery=" << r.recovery_mults << '\n'
        << "mults_scaling=" << r.scaling_mults << '\n'
        << "failures=";
    for (std::size_t i = 0; i < r.failures.size(); ++i)
        out << (i ? "," : "") << r.failures[i];
    out << '\n';
    return out.str();
}

inline Matrix read_matrix_file(const std::string& path, const Field& field)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + path);
    const auto first = io::detail::next_line(in);
    if (!first)
        fail(ErrorKind::ParseError, path + " is empty");
    // An optional field line may precede the matrix; it must match.
    if (first->starts_with("field")) {
        if (!(io::parse_field(*first) == field))
            fail(ErrorKind::ParseError, path + " declares a different field");
        return io::read_matrix(in, field);
    }
    std::istringstream rest(*first + "\n" + std::string(std::istreambuf_iterator<char>(in), {}));
    return io::read_matrix(rest, field);
}

inline Vector read_vector_file(const std::string& path, const Field& field)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + path);
    Vector out;
    for (const Vector& line : io::read_vectors(in, field))
        out.insert(out.end(), line.begin(), line.end());
    return out;
}

/// Resolves the configured generator source to a k x n matrix.
inline Matrix make_generator(const RsCode& code, const GeneratorSource& src)
{
    switch (src.kind) {
    case GeneratorSource::Kind::banded:
        return build_generator_matrix(code);
    case GeneratorSource::Kind::file:
        return read_matrix_file(src.path, code.field());
    case GeneratorSource::Kind::grs:
        return build_grs_generator(code.field(), code.n(), code.k(), read_vector_file(src.path, code.field()));
    case GeneratorSource::Kind::random: {
        SplitMix64 rng(src.seed);
        const Matrix a = random_invertible_matrix(code.field(), code.k(), rng);
        return mat_mul(code.field(), a, build_generator_matrix(code));
    }
    }
    fail(ErrorKind::ParseError, "unknown generator source");
}

/// Everything a trial needs, built once per experiment.
struct Pipeline {
    RsCode code;
    Matrix g_a;
    GfftPlan plan;
    RecoveryTransform transform;
    DecoderConfig decoder;
    ErrorModel errors;

    Pipeline(RsCode c, Matrix generator, DecoderConfig dec, ErrorModel err)
        : code(std::move(c)), g_a(std::move(generator)), plan(code.field()),
          transform(precompute(code, g_a, plan)), decoder(dec), errors(err)
    {
    }

    static Pipeline from_config(const ExperimentConfig& cfg)
    {
        RsCode code = RsCode::build(cfg.field, cfg.n, cfg.k, cfg.b);
        Matrix g_a = make_generator(code, cfg.generator);
        return Pipeline(std::move(code), std::move(g_a), cfg.decoder, cfg.errors);
    }
};

/// One roundtrip trial, fully determined by its seed: draw a message, encode
/// with G_a, corrupt, scale by W, list decode, recover every list element.
/// Success means the original message is among the recovered ones.
inline TrialReport run_roundtrip_trial(const Pipeline& p, std::uint64_t trial_seed)
{
    const Field& f = p.code.field();
    TrialReport r;
    r.trials = 1;
    SplitMix64 rng(trial_seed);
    const Vector msg = rng.vector(f, p.code.k());
    const Vector received = corrupt(f, encode_generator(p.code, p.g_a, msg), p.errors, rng);

    MulCounter w_count, decode_count, recovery_count;
    try {
        const Vector scaled = narrow_sense_transform(p.code, received, &w_count);
        const ListDecodeOutput list = list_decode(p.code, scaled, p.decoder, &decode_count);
        bool found = false;
        for (const Vector& cand : list.candidates)
            found |= recover_message(p.transform, cand, &recovery_count) == msg;
        r.list_size_total = list.candidates.size();
        r.recovered_elements = list.candidates.size();
        r.recovery_successes = found ? 1 : 0;
    } catch (const Error&) {
        r.trial_errors = 1;
    }
    r.w_mults = w_count.count;
    r.decode_mults = decode_count.count;
    r.recovery_mults = recovery_count.count;
    if (r.recovery_successes == 0)
        r.failures.push_back(trial_seed);
    return r;
}

inline std::vector<std::uint64_t> trial_seeds(std::uint64_t seed, std::size_t trials)
{
    SplitMix64 master(seed);
    std::vector<std::uint64_t> seeds(trials);
    for (auto& s : seeds)
        s = master.next();
    return seeds;
}

/// Runs `body(seed)` for every trial seed, split across `threads` workers.
template <typename Body>
TrialReport run_trials(const std::vector<std::uint64_t>& seeds, unsigned threads, Body body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(seeds.size(), 1))));
    std::vector<TrialReport> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < seeds.size(); i += threads)
                        partial[w].merge(body(seeds[i]));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    TrialReport total;
    for (const auto& r : partial)
        total.merge(r);
    return total;
}

inline TrialReport run_roundtrip(const ExperimentConfig& cfg)
{
    const Pipeline p = Pipeline::from_config(cfg);
    return run_trials(trial_seeds(cfg.seed, cfg.trials), cfg.threads,
                      [&](std::uint64_t s) { return run_roundtrip_trial(p, s); });
}

/// Decodes one GRS-encoded word along both recovery paths and checks they
/// agree:
///  - scaling: divide by v, list decode, take candidates as messages;
///  - transform: scale by W, list decode, recover each candidate with B.
/// Throws RecoveryMismatch when the recovered message sets differ.
inline TrialReport run_compare_trial(const Pipeline& p, std::span<const Element> v, std::uint64_t trial_seed)
{
    const Field& f = p.code.field();
    TrialReport r;
    r.trials = 1;
    SplitMix64 rng(trial_seed);
    const Vector msg = rng.vector(f, p.code.k());
    const Vector received = corrupt(f, encode_generator(p.code, p.g_a, msg), p.errors, rng);

    MulCounter scaling_count, w_count, recovery_count, decode_count;
    std::vector<Vector> by_scaling, by_transform;
    try {
        const Vector unscaled = recover_by_scaling(f, v, received, &scaling_count);
        by_scaling = list_decode(p.code, unscaled, p.decoder, &decode_count).candidates;

        const Vector scaled = narrow_sense_transform(p.code, received, &w_count);
        for (const Vector& cand : list_decode(p.code, scaled, p.decoder).candidates)
            by_transform.push_back(recover_message(p.transform, cand, &recovery_count));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RecoveryMismatch)
            throw;
        r.trial_errors = 1;
        r.failures.push_back(trial_seed);
        return r;
    }
    std::sort(by_transform.begin(), by_transform.end());
    if (by_scaling != by_transform)
        fail(ErrorKind::RecoveryMismatch, "recovery paths disagree on trial seed " + std::to_string(trial_seed));

    r.list_size_total = by_scaling.size();
    r.recovered_elements = by_transform.size();
    r.recovery_successes = std::find(by_scaling.begin(), by_scaling.end(), msg) != by_scaling.end();
    if (!r.recovery_successes)
        r.failures.push_back(trial_seed);
    r.scaling_mults = scaling_count.count;
    r.w_mults = w_count.count;
    r.decode_mults = decode_count.count;
    r.recovery_mults = recovery_count.count;
    return r;
}

/// cfg.generator must be a GRS source whose multipliers v make the GRS
/// generator span this code (v_i = scale * alpha^(-(b-1)i)); otherwise
/// precomputation rejects it with NotACodewordBasis.
inline TrialReport run_compare_scaling(const ExperimentConfig& cfg, std::span<const Element> v)
{
    RsCode code = RsCode::build(cfg.field, cfg.n, cfg.k, cfg.b);
    Matrix grs = build_grs_generator(code.field(), code.n(), code.k(), v);
    const Pipeline p(std::move(code), std::move(grs), cfg.decoder, cfg.errors);
    return run_trials(trial_seeds(cfg.seed, cfg.trials), cfg.threads,
                      [&](std::uint64_t s) { return run_compare_trial(p, v, s); });
}

} // namespace rsr
