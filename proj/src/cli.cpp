#include "slcp/cli.hpp"

#include <chrono>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "slcp/analysis.hpp"
#include "slcp/bench.hpp"
#include "slcp/csa.hpp"
#include "slcp/lcpbuild.hpp"
#include "slcp/oracle.hpp"
#include "slcp/plcprepr.hpp"
#include "slcp/sampledlcp.hpp"
#include "slcp/store.hpp"
#include "slcp/textstore.hpp"
#include "slcp/verify.hpp"

namespace slcp {

namespace {

using Clock = std::chrono::steady_clock;
using Record = nlohmann::ordered_json;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

/// Bad parameter values found after parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string output;
    std::string index;
    std::string structure;
    size_type sample_rate = 32;
    std::string repr;
    std::string param;
    size_type queries = 100'000;
    std::uint64_t seed = 1;
    size_type order = 5;
    std::string format = "csv";
    std::string vector = "gap";
    std::uint32_t block = kDefaultBlock;
    std::string sweep;
    std::string kind;
    size_type sigma = 2;
    size_type length = 1000;
    size_type copies = 2;
    double mutation = 0.001;
    size_type max_n = 100'000;
    size_type verify_sample_rate = 4;
    size_type patterns = 1000;
    size_type de_bruijn_order = 8;
};

std::string csv_cell(const Record& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + '"';
    }
    if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
    return v.dump();
}

void emit(std::ostream& out, const std::vector<Record>& rows, const std::string& format) {
    if (format == "json") {
        Record arr = Record::array();
        for (const auto& r : rows) arr.push_back(r);
        out << arr.dump(2) << '\n';
        return;
    }
    if (rows.empty()) return;
    bool first = true;
    for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : ",") << key;
        first = false;
    }
    out << '\n';
    for (const auto& r : rows) {
        first = true;
        for (const auto& [_, value] : r.items()) {
            out << (first ? "" : ",") << csv_cell(value);
            first = false;
        }
        out << '\n';
    }
}

Text read_text(const std::string& path) {
    const auto bytes = read_file(path);
    return load_text(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

BitVectorKind parse_vector(const std::string& name) {
    if (name == "plain") return BitVectorKind::plain;
    if (name == "gap") return BitVectorKind::gap;
    if (name == "rle") return BitVectorKind::rle;
    throw UsageError("unknown vector kind '" + name + "'");
}

std::string_view vector_name(BitVectorKind k) {
    switch (k) {
        case BitVectorKind::plain: return "plain";
        case BitVectorKind::gap: return "gap";
        case BitVectorKind::rle: return "rle";
    }
    return "gap";
}

/// Positive integer, or "inf" when allowed.
size_type parse_param(const std::string& text, bool allow_inf) {
    if (allow_inf && (text == "inf" || text == "infinity")) return kUnbounded;
    size_type v = 0;
    std::size_t used = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v == 0 || text.front() == '-')
        throw UsageError("invalid parameter '" + text + "'");
    return v;
}

std::vector<size_type> parse_param_list(const std::string& text, bool allow_inf) {
    std::vector<size_type> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_param(item, allow_inf));
    if (out.empty()) throw UsageError("empty parameter list");
    return out;
}

std::string param_text(size_type v) { return v == kUnbounded ? "inf" : std::to_string(v); }

// --- build ------------------------------------------------------------------

int cmd_build(const Options& o, std::ostream& out) {
    if (o.sample_rate == 0) throw UsageError("--sa-sample-rate must be >= 1");
    const Text text = read_text(o.input);
    const auto t = Clock::now();
    const Csa csa = Csa::build(text, o.sample_rate, o.block);
    const double built = seconds_since(t);
    const auto file = save_index(csa);
    write_file(o.output, file);
    const CsaSizes sz = csa.sizes();
    Record r;
    r["n"] = csa.size();
    r["sigma"] = text.sigma();
    r["runs"] = csa.runs();
    r["d"] = csa.sample_rate();
    r["bits_per_symbol"] = static_cast<double>(sz.total()) / static_cast<double>(csa.size());
    r["file_bytes"] = file.size();
    r["build_seconds"] = built;
    emit(out, {r}, o.format);
    return kExitOk;
}

// --- lcp-build --------------------------------------------------------------

int cmd_lcp_build(const Options& o, std::ostream& out) {
    StructureKind kind;
    try {
        kind = parse_structure_kind(o.repr);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto index_file = read_file(o.input);
    const Csa csa = load_index(index_file);
    const size_type n = csa.size();

    StructureFile sf;
    sf.index_crc = index_identity(index_file);
    sf.n = n;
    Record r;
    r["repr"] = std::string(to_string(kind));
    r["n"] = n;

    const auto t = Clock::now();
    size_type psi_evals = 0, minimal = 0, extra = 0, vector_length = 0, bits = 0;
    std::string param, vector = "-";
    if (kind == StructureKind::sampled_lcp) {
        const size_type dp = o.param.empty() ? kUnbounded : parse_param(o.param, true);
        const BitVectorKind marks = parse_vector(o.vector);
        SampledLcpBuildReport rep;
        SampledLcp slcp = build_sampled_lcp_from_csa(csa, dp, {marks, o.block}, &rep);
        psi_evals = rep.psi_evals;
        minimal = rep.minimal_samples;
        extra = rep.extra_samples;
        vector_length = slcp.marks().size();
        bits = slcp.size_report().total_bits;
        param = param_text(dp);
        vector = vector_name(marks);
        sf.structure = std::move(slcp);
    } else {
        const PlcpKind pk = kind == StructureKind::plcp_plain ? PlcpKind::plain
                            : kind == StructureKind::plcp_rle ? PlcpKind::rle
                                                              : PlcpKind::sampled;
        size_type q = 0;
        if (pk == PlcpKind::sampled) {
            q = o.param.empty() ? 4 : parse_param(o.param, false);
            param = std::to_string(q);
        } else {
            if (!o.param.empty()) throw UsageError("--param is not used by " + o.repr);
            param = "0";
            vector = pk == PlcpKind::plain ? "plain" : "rle";
        }
        PlcpBuildStats stats;
        PlcpRepr repr = build_plcp_repr(csa, pk, q, o.block, &stats);
        psi_evals = stats.psi_evals;
        bits = repr.size_in_bits();
        if (pk != PlcpKind::sampled) vector_length = 2 * n;
        sf.structure = std::move(repr);
    }
    const double built = seconds_since(t);
    write_file(o.output, save_structure(sf));

    r["param"] = param;
    r["vector"] = vector;
    r["vector_length"] = vector_length;
    r["size_bits"] = bits;
    r["bits_per_symbol"] = static_cast<double>(bits) / static_cast<double>(n);
    r["minimal_samples"] = minimal;
    r["extra_samples"] = extra;
    r["psi_evals"] = psi_evals;
    r["build_seconds"] = built;
    emit(out, {r}, o.format);
    return kExitOk;
}

// --- bench ------------------------------------------------------------------

void emit_bench(std::ostream& out, const std::vector<BenchResult>& rows, const std::string& format) {
    if (format == "json") {
        out << bench_json(rows) << '\n';
        return;
    }
    out << bench_csv_header() << '\n';
    for (const auto& r : rows) out << bench_csv_row(r) << '\n';
}

int cmd_bench(const Options& o, std::ostream& out) {
    if (o.sweep == "sample-rate") {
        const Text text = read_text(o.input);
        const auto rates = parse_param_list(o.param.empty() ? "4,8,16,32,64,128" : o.param, false);
        emit_bench(out, sweep_sample_rate(text, rates, o.queries, o.seed), o.format);
        return kExitOk;
    }
    const auto index_file = read_file(o.input);
    const Csa csa = load_index(index_file);
    if (o.sweep == "d-prime") {
        const auto dps = parse_param_list(o.param.empty() ? "1,4,16,64,256,inf" : o.param, true);
        const BitVectorKind marks = parse_vector(o.vector);
        const auto t = Clock::now();
        const StrictSamples pass1 = collect_strictly_minimal(csa);
        const double shared = seconds_since(t);
        std::vector<BenchResult> rows{bench_locate(csa, o.queries, o.seed)};
        for (auto& r : sweep_d_prime(csa, pass1, dps, o.queries, o.seed, marks)) {
            r.build_seconds += shared;
            rows.push_back(std::move(r));
        }
        emit_bench(out, rows, o.format);
        return kExitOk;
    }
    if (!o.sweep.empty()) throw UsageError("unknown sweep '" + o.sweep + "'");

    std::vector<BenchResult> rows{bench_locate(csa, o.queries, o.seed)};
    if (!o.structure.empty()) {
        const StructureFile sf = load_structure(read_file(o.structure));
        if (sf.index_crc != index_identity(index_file) || sf.n != csa.size())
            throw UsageError("structure file was built from a different index");
        if (const auto* slcp = std::get_if<SampledLcp>(&sf.structure))
            rows.push_back(bench_sampled_lcp(csa, *slcp, o.queries, o.seed));
        else
            rows.push_back(bench_plcp(csa, std::get<PlcpRepr>(sf.structure), o.queries, o.seed));
    }
    emit_bench(out, rows, o.format);
    return kExitOk;
}

// --- stats ------------------------------------------------------------------

int cmd_stats(const Options& o, std::ostream& out) {
    const Text text = read_text(o.input);
    StatsRow row;
    row.name = std::filesystem::path(o.input).filename().string();
    row.stats = compute_stats(text);
    row.estimate = estimate_entropy(text, o.order);
    if (o.format == "json")
        out << stats_json({row}) << '\n';
    else
        out << stats_csv_header() << '\n' << stats_csv_row(row) << '\n';
    return kExitOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out) {
    if (o.verify_sample_rate == 0) throw UsageError("--sa-sample-rate must be >= 1");
    const Text text = read_text(o.input);
    VerifyOptions vo;
    vo.sample_rate = o.verify_sample_rate;
    vo.limits.max_lcp_length = o.max_n;
    vo.limits.max_sa_length = std::max(vo.limits.max_sa_length, o.max_n);
    vo.seed = o.seed;
    vo.patterns = o.patterns;

    VerifyReport report;
    try {
        report = verify_text(text, vo);
    } catch (const LimitExceeded& e) {
        throw UsageError(std::string(e.what()) + " (raise --max-n)");
    }
    auto add = [&](std::string name, bool pass, std::string detail) {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    std::optional<Csa> csa;
    std::vector<std::uint8_t> index_file;
    if (!o.index.empty()) {
        index_file = read_file(o.index);
        try {
            csa = load_index(index_file);
            add("index file checksum", true, "");
            const Csa fresh = Csa::build(text, csa->sample_rate(), o.block);
            add("index matches text", save_index(fresh) == index_file, "");
        } catch (const FormatError& e) {
            add("index file checksum", false, e.what());
        }
    }
    if (!o.structure.empty()) {
        try {
            const StructureFile sf = load_structure(read_file(o.structure));
            add("structure file checksum", true, "");
            if (!index_file.empty()) add("structure names index", sf.index_crc == index_identity(index_file), "");
            if (!csa) csa = Csa::build(text, o.verify_sample_rate, o.block);
            const RefArrays ref = naive_reference(text, vo.limits);
            size_type bad = 0;
            for (size_type x = 1; x <= ref.size() && bad == 0; ++x) {
                const size_type v = std::holds_alternative<SampledLcp>(sf.structure)
                                        ? std::get<SampledLcp>(sf.structure).access(*csa, x)
                                        : lcp_via_plcp(*csa, std::get<PlcpRepr>(sf.structure), x);
                if (v != ref.lcp[x]) bad = x;
            }
            add("structure values", sf.n == text.size() && bad == 0,
                bad ? "first mismatch at " + std::to_string(bad) : "");
        } catch (const FormatError& e) {
            add("structure file checksum", false, e.what());
        }
    }

    std::vector<Record> rows;
    for (const auto& c : report.checks) {
        Record r;
        r["check"] = c.name;
        r["result"] = c.pass ? "PASS" : "FAIL";
        r["detail"] = c.detail;
        rows.push_back(std::move(r));
    }
    emit(out, rows, o.format);
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

// --- gen --------------------------------------------------------------------

std::string concat_bytes(const SentinelConcat& c) {
    int lowest = 256;
    for (auto b : c.base.rank_to_byte())
        if (b != Text::kNoByte) lowest = std::min(lowest, b);
    if (lowest <= 1) throw UsageError("base text leaves no byte for the copy marker");
    const char marker = static_cast<char>(std::min(lowest - 1, static_cast<int>('#')));
    std::string out;
    out.reserve(c.text.size());
    for (auto s : c.text.symbols()) {
        if (s == kTerminator) continue;
        out.push_back(s == c.marker_rank ? marker : static_cast<char>(c.text.rank_to_byte()[s]));
    }
    return out;
}

int cmd_gen(const Options& o, std::ostream& out) {
    std::string bytes;
    if (o.kind == "de-bruijn") {
        bytes = generate_de_bruijn(o.sigma, o.de_bruijn_order).to_bytes();
    } else if (o.kind == "random") {
        bytes = generate_random(o.sigma, o.length, o.seed).to_bytes();
    } else if (o.kind == "repetitive") {
        bytes = generate_repetitive(o.sigma, o.length, o.copies, o.mutation, o.seed).to_bytes();
    } else if (o.kind == "concat") {
        const Text base = o.input.empty() ? generate_random(o.sigma, o.length, o.seed) : read_text(o.input);
        bytes = concat_bytes(generate_concat(base, o.copies));
    } else {
        throw UsageError("unknown generator '" + o.kind + "'");
    }
    write_file(o.output, std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
    Record r;
    r["kind"] = o.kind;
    r["bytes"] = bytes.size();
    r["output"] = o.output;
    emit(out, {r}, o.format);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Compressed suffix array with sampled LCP and PLCP structures"};
    app.name("slcp");
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"csv", "json"});
    const auto vectors = CLI::IsMember({"plain", "gap", "rle"});

    auto* build = app.add_subcommand("build", "Build and save a compressed suffix array");
    build->add_option("--input", o.input, "Text file")->required();
    build->add_option("--output", o.output, "Index file")->required();
    build->add_option("--sa-sample-rate", o.sample_rate, "SA sample rate d")->capture_default_str();

    auto* lcp = app.add_subcommand("lcp-build", "Build an LCP structure from an index");
    lcp->add_option("--input", o.input, "Index file")->required();
    lcp->add_option("--output", o.output, "Structure file")->required();
    lcp->add_option("--repr", o.repr, "plcp-plain, plcp-rle, plcp-sampled or sampled-lcp")->required();
    lcp->add_option("--param", o.param, "q for plcp-sampled (default 4), d' for sampled-lcp (default inf)");
    lcp->add_option("--vector", o.vector, "Sample mark vector for sampled-lcp")->check(vectors)->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time random LCP and locate queries");
    bench->add_option("--input", o.input, "Index file (text file for --sweep sample-rate)")->required();
    bench->add_option("--structure", o.structure, "Structure file");
    bench->add_option("--queries", o.queries, "Query count")->capture_default_str();
    bench->add_option("--seed", o.seed, "Query seed")->capture_default_str();
    bench->add_option("--sweep", o.sweep, "d-prime or sample-rate trade-off table")
        ->check(CLI::IsMember({"d-prime", "sample-rate"}));
    bench->add_option("--param", o.param, "Comma-separated sweep values");
    bench->add_option("--vector", o.vector, "Sample mark vector for the d-prime sweep")
        ->check(vectors)
        ->capture_default_str();

    auto* stats = app.add_subcommand("stats", "Value-class statistics and entropy estimate");
    stats->add_option("--input", o.input, "Text file")->required();
    stats->add_option("--order", o.order, "Context order k")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check every structure against the brute-force reference");
    verify->add_option("--input", o.input, "Text file")->required();
    verify->add_option("--index", o.index, "Index file to check against the text");
    verify->add_option("--structure", o.structure, "Structure file to check against the text");
    verify->add_option("--sa-sample-rate", o.verify_sample_rate, "SA sample rate d")->capture_default_str();
    verify->add_option("--max-n", o.max_n, "Largest text for the quadratic reference")->capture_default_str();
    verify->add_option("--queries", o.patterns, "Random count patterns")->capture_default_str();
    verify->add_option("--seed", o.seed, "Pattern seed")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Write a generated text");
    gen->add_option("--kind", o.kind, "de-bruijn, random, concat or repetitive")
        ->required()
        ->check(CLI::IsMember({"de-bruijn", "random", "concat", "repetitive"}));
    gen->add_option("--output", o.output, "Text file")->required();
    gen->add_option("--input", o.input, "Base text for concat (default: random)");
    gen->add_option("--sigma", o.sigma, "Alphabet size")->capture_default_str();
    gen->add_option("--order", o.de_bruijn_order, "de Bruijn order")->capture_default_str();
    gen->add_option("--length", o.length, "Random or base length")->capture_default_str();
    gen->add_option("--copies", o.copies, "Copies for concat and repetitive")->capture_default_str();
    gen->add_option("--mutation", o.mutation, "Per-symbol mutation rate for repetitive")->capture_default_str();
    gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

    for (auto* sub : {build, lcp, bench, stats, verify, gen}) {
        sub->add_option("--format", o.format, "Output format")->check(formats)->capture_default_str();
        sub->add_option("--block", o.block, "Directory block size")->check(CLI::PositiveNumber)->capture_default_str();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::string help;
        for (auto* sub : app.get_subcommands()) help = sub->help();
        err << "error: " << e.what() << '\n' << (help.empty() ? app.help() : help);
        return kExitUsage;
    }

    try {
        if (*build) return cmd_build(o, out);
        if (*lcp) return cmd_lcp_build(o, out);
        if (*bench) return cmd_bench(o, out);
        if (*stats) return cmd_stats(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*gen) return cmd_gen(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        err << "damaged file: " << e.what() << '\n';
        return kExitIo;
    } catch (const TextError& e) {
        err << "unusable input: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace slcp
