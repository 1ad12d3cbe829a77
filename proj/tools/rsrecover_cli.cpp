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

// rsrecover command-line front end.
//
//   rsrecover precompute      --code 7,4,2 --gen ga.txt --out transform.txt
//   rsrecover encode          --code 7,4,2 --gen ga.txt --msg "6 4 0 7"
//   rsrecover corrupt         --code 7,4,2 --errors 2 --seed 3 --in words.txt
//   rsrecover decode          --code 7,4,2 --decoder gs --in received.txt
//   rsrecover recover         --transform transform.txt --in list.txt
//   rsrecover roundtrip       --code 7,4,2 --gen random:1 --errors 2 --trials 1000
//   rsrecover compare-scaling --code 7,4,1 --gen grs:v.txt --errors 2 --trials 100
//
// Any flag may also come from --config <file> as "key = value" lines (key is
// the flag name without dashes); flags on the command line win.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rsrecover/rsrecover.hpp"

namespace {

using namespace rsr;

struct Options {
    std::string field = "m=3 poly=0xb n=7";
    std::string code = "7,4,1";
    std::string gen = "banded";
    std::string decoder = "gs";
    std::string radius = "auto";
    std::string multiplicity = "auto";
    std::string errors = "0";
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string out;
    std::string in;
    std::string msg;
    std::string transform;
    std::string json;
};

Field parse_field_option(const std::string& text)
{
    std::ifstream file(text);
    if (file) {
        std::string line;
        std::getline(file, line);
        return io::parse_field(line);
    }
    return io::parse_field(text.starts_with("field") ? text : "field " + text);
}

RsCode parse_code_option(const std::string& text, const Field& field)
{
    std::vector<std::int64_t> parts;
    std::stringstream s(text);
    std::string tok;
    while (std::getline(s, tok, ','))
        parts.push_back(static_cast<std::int64_t>(io::detail::parse_uint(tok, 10, "code parameter")));
    if (parts.size() != 3)
        fail(ErrorKind::ParseError, "--code expects n,k,b");
    return RsCode::build(field, static_cast<std::size_t>(parts[0]), static_cast<std::size_t>(parts[1]), parts[2]);
}

std::optional<std::size_t> parse_auto(const std::string& text, const char* what)
{
    if (text == "auto")
        return std::nullopt;
    return io::detail::parse_uint(text, 10, what);
}

DecoderConfig parse_decoder(const Options& o)
{
    DecoderConfig cfg;
    if (o.decoder == "brute")
        cfg.kind = DecoderKind::brute_force;
    else if (o.decoder == "gs")
        cfg.kind = DecoderKind::guruswami_sudan;
    else
        fail(ErrorKind::ParseError, "--decoder must be brute or gs");
    cfg.radius = parse_auto(o.radius, "radius");
    cfg.multiplicity = parse_auto(o.multiplicity, "multiplicity");
    return cfg;
}

ExperimentConfig experiment(const Options& o)
{
    ExperimentConfig cfg;
    cfg.field = parse_field_option(o.field);
    const RsCode code = parse_code_option(o.code, cfg.field);
    cfg.n = code.n();
    cfg.k = code.k();
    cfg.b = static_cast<std::int64_t>(code.b());
    cfg.generator = GeneratorSource::parse(o.gen);
    cfg.decoder = parse_decoder(o);
    cfg.errors = ErrorModel::parse(o.errors);
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.threads = o.threads;
    return cfg;
}

/// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                fail(ErrorKind::ParseError, "cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::vector<Vector> input_vectors(const Options& o, const Field& field)
{
    if (!o.msg.empty())
        return {io::parse_vector(o.msg, field)};
    if (o.in.empty() || o.in == "-")
        return io::read_vectors(std::cin, field);
    std::ifstream in(o.in);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open " + o.in);
    return io::read_vectors(in, field);
}

void print_matrix_powers(std::ostream& out, const Field& f, const Matrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "  ";
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? " " : "") << io::format_power(f, m(r, c));
        out << '\n';
    }
}

int cmd_precompute(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    const Pipeline p = Pipeline::from_config(cfg);
    if (p.code.zeros_wrap())
        std::cerr << "note: zeros alpha^" << p.code.b() << "..alpha^" << p.code.b() + p.code.n() - p.code.k() - 1
                  << " wrap past alpha^n\n";
    if (!o.out.empty()) {
        Output out(o.out);
        io::write_transform(out.stream(), p.transform);
    } else {
        io::write_transform(std::cout, p.transform);
    }
    std::cout << "B =\n";
    print_matrix_powers(std::cout, p.code.field(), p.transform.b_matrix);
    return 0;
}

int cmd_encode(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    const RsCode code = RsCode::build(cfg.field, cfg.n, cfg.k, cfg.b);
    const Matrix g_a = make_generator(code, cfg.generator);
    check_generator(code, g_a);
    Output out(o.out);
    for (const Vector& m : input_vectors(o, code.field()))
        out.stream() << io::format_vector(encode_generator(code, g_a, m)) << '\n';
    return 0;
}

int cmd_corrupt(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    SplitMix64 rng(cfg.seed);
    Output out(o.out);
    for (const Vector& w : input_vectors(o, cfg.field)) {
        if (w.size() != cfg.n)
            fail(ErrorKind::DimensionError, "word length " + std::to_string(w.size()) + ", code length " +
                                                std::to_string(cfg.n));
        out.stream() << io::format_vector(corrupt(cfg.field, w, cfg.errors, rng)) << '\n';
    }
    return 0;
}

/// Scales each received word by W and list decodes it. Candidates are
/// printed one per line, each preceded by a comment with its distance.
int cmd_decode(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    const RsCode code = RsCode::build(cfg.field, cfg.n, cfg.k, cfg.b);
    Output out(o.out);
    std::size_t index = 0;
    for (const Vector& r : input_vectors(o, code.field())) {
        const ListDecodeOutput list = list_decode(code, narrow_sense_transform(code, r), cfg.decoder);
        out.stream() << "# word " << index++ << " radius=" << list.radius_used << " multiplicity=" << list.multiplicity
                     << " list=" << list.candidates.size() << '\n';
        for (std::size_t i = 0; i < list.candidates.size(); ++i)
            out.stream() << "# distance=" << list.distances[i] << '\n'
                         << io::format_vector(list.candidates[i]) << '\n';
    }
    return 0;
}

int cmd_recover(const Options& o)
{
    if (o.transform.empty())
        fail(ErrorKind::ParseError, "recover needs --transform");
    std::ifstream tf(o.transform);
    if (!tf)
        fail(ErrorKind::ParseError, "cannot open " + o.transform);
    const RecoveryTransform t = io::read_transform(tf);
    if (!recomposes(t))
        std::cerr << "warning: B does not equal the product of its factors\n";
    Output out(o.out);
    for (const Vector& f : input_vectors(o, t.code.field()))
        out.stream() << io::format_vector(recover_message(t, f)) << '\n';
    return 0;
}

nlohmann::json report_json(const ExperimentConfig& cfg, const TrialReport& r, const std::string& command)
{
    nlohmann::json j;
    j["command"] = command;
    j["field"] = io::field_descriptor(cfg.field);
    j["code"] = {{"n", cfg.n}, {"k", cfg.k}, {"b", cfg.b}};
    j["errors"] = cfg.errors.to_string();
    j["seed"] = cfg.seed;
    j["trials"] = r.trials;
    j["recovery_successes"] = r.recovery_successes;
    j["list_size_total"] = r.list_size_total;
    j["average_list_size"] = r.average_list_size();
    j["recovered_elements"] = r.recovered_elements;
    j["trial_errors"] = r.trial_errors;
    j["mults"] = {{"w_transform", r.w_mults},
                  {"decode", r.decode_mults},
                  {"recovery", r.recovery_mults},
                  {"scaling", r.scaling_mults}};
    j["failures"] = r.failures;
    return j;
}

void emit_report(const Options& o, const ExperimentConfig& cfg, const TrialReport& r, const std::string& command)
{
    Output out(o.out);
    out.stream() << format_report(r);
    if (!o.json.empty()) {
        std::ofstream js(o.json);
        if (!js)
            fail(ErrorKind::ParseError, "cannot write " + o.json);
        js << report_json(cfg, r, command).dump(2) << '\n';
    }
}

int cmd_roundtrip(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    const TrialReport r = run_roundtrip(cfg);
    emit_report(o, cfg, r, "roundtrip");
    return 0;
}

int cmd_compare_scaling(const Options& o)
{
    const ExperimentConfig cfg = experiment(o);
    if (cfg.generator.kind != GeneratorSource::Kind::grs)
        fail(ErrorKind::ParseError, "compare-scaling needs --gen grs:<vfile>");
    const TrialReport r = run_compare_scaling(cfg, read_vector_file(cfg.generator.path, cfg.field));
    emit_report(o, cfg, r, "compare-scaling");
    return 0;
}

std::map<std::string, std::string> read_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot open config " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                fail(ErrorKind::ParseError, "config line without '=': " + line);
            continue;
        }
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

/// Splices config-file values in front of the user's flags for every key the
/// command line does not already set.
std::vector<std::string> merge_config(const std::vector<std::string>& args)
{
    std::string config;
    std::set<std::string> given;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--config" && i + 1 < args.size()) {
            config = args[++i];
            continue;
        }
        if (a.starts_with("--config=")) {
            config = a.substr(9);
            continue;
        }
        if (a.starts_with("--"))
            given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
        rest.push_back(a);
    }
    if (config.empty())
        return rest;

    std::vector<std::string> merged;
    auto it = rest.begin();
    if (it != rest.end() && !it->starts_with("-"))
        merged.push_back(*it++); // subcommand
    for (const auto& [key, value] : read_config(config))
        if (!given.contains(key)) {
            merged.push_back("--" + key);
            merged.push_back(value);
        }
    merged.insert(merged.end(), it, rest.end());
    return merged;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Reed-Solomon generator-matrix recovery toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--field", o.field, "field descriptor \"m=<int> poly=0x<hex> n=<int>\" or a file");
        sub->add_option("--code", o.code, "code parameters n,k,b");
        sub->add_option("--gen", o.gen, "generator: banded | <matrix file> | grs:<vfile> | random:<seed>");
        sub->add_option("--decoder", o.decoder, "brute | gs");
        sub->add_option("--radius", o.radius, "decoding radius or auto");
        sub->add_option("--multiplicity", o.multiplicity, "interpolation multiplicity or auto");
        sub->add_option("--errors", o.errors, "fixed error weight t or p=<prob>");
        sub->add_option("--trials", o.trials, "number of trials");
        sub->add_option("--seed", o.seed, "64-bit seed");
        sub->add_option("--threads", o.threads, "worker threads for trial loops");
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--in", o.in, "input vectors, one per line (default stdin)");
        sub->add_option("--msg", o.msg, "single input vector as hex elements");
        sub->add_option("--transform", o.transform, "transform file written by precompute");
        sub->add_option("--json", o.json, "also write the report as JSON");
    };

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"precompute", "build the recovery transform for a generator matrix", cmd_precompute},
        {"encode", "encode messages with the generator matrix", cmd_encode},
        {"corrupt", "inject symbol errors into words", cmd_corrupt},
        {"decode", "scale received words by W and list decode them", cmd_decode},
        {"recover", "map list elements back to messages", cmd_recover},
        {"roundtrip", "simulate encode, corrupt, decode and recover", cmd_roundtrip},
        {"compare-scaling", "compare recovery against column scaling for a GRS generator", cmd_compare_scaling},
    };
    std::map<const CLI::App*, int (*)(const Options&)> dispatch;
    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub);
        dispatch[sub] = c.run;
    }
    app.footer("Flags may also be given in a --config file as \"key = value\" lines.");

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config(args);
        std::reverse(args.begin(), args.end()); // CLI11 consumes from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        for (const auto& [sub, run] : dispatch)
            if (sub->parsed())
                return run(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}
