#include "slcp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "slcp/lcpbuild.hpp"
#include "slcp/suffixcore.hpp"

namespace slcp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <class Query>
void run(BenchResult& r, size_type n, size_type queries, std::uint64_t seed, Query&& query) {
    const std::vector<size_type> xs = random_queries(n, queries, seed);
    const size_type warm = std::min<size_type>(xs.size(), 1000);
    for (size_type t = 0; t < warm; ++t) {
        StepCounter c;
        r.answer_sum += query(xs[t], c);
    }
    r.answer_sum = 0;

    std::vector<double> ns;
    ns.reserve(xs.size());
    size_type psi = 0, cmp = 0;
    const auto start = Clock::now();
    for (auto x : xs) {
        StepCounter c;
        const auto t0 = Clock::now();
        r.answer_sum += query(x, c);
        const auto t1 = Clock::now();
        ns.push_back(std::chrono::duration<double, std::nano>(t1 - t0).count());
        psi += c.psi;
        cmp += c.comparisons;
        r.max_psi = std::max(r.max_psi, c.psi);
    }
    r.query_seconds = seconds_since(start);
    r.queries = xs.size();
    r.seed = seed;
    if (xs.empty()) return;
    const double q = static_cast<double>(xs.size());
    double total = 0;
    for (double v : ns) total += v;
    r.mean_ns = total / q;
    const size_type k = std::min<size_type>(ns.size() - 1, static_cast<size_type>(0.99 * q));
    std::nth_element(ns.begin(), ns.begin() + static_cast<std::ptrdiff_t>(k), ns.end());
    r.p99_ns = ns[k];
    r.mean_psi = static_cast<double>(psi) / q;
    r.mean_comparisons = static_cast<double>(cmp) / q;
}

double per_symbol(size_type bits, size_type n) { return static_cast<double>(bits) / static_cast<double>(n); }

std::string d_prime_text(size_type d_prime) {
    return d_prime == kUnbounded ? std::string("inf") : std::to_string(d_prime);
}

}  // namespace

std::vector<size_type> random_queries(size_type n, size_type count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<size_type> dist(1, n);
    std::vector<size_type> out(count);
    for (auto& x : out) x = dist(rng);
    return out;
}

BenchResult bench_locate(const Csa& csa, size_type queries, std::uint64_t seed) {
    BenchResult r;
    r.structure = "locate";
    r.d = csa.sample_rate();
    r.bits_per_symbol = per_symbol(csa.sizes().total(), csa.size());
    run(r, csa.size(), queries, seed, [&](size_type x, StepCounter& c) { return csa.locate(x, &c); });
    return r;
}

BenchResult bench_sampled_lcp(const Csa& csa, const SampledLcp& slcp, size_type queries, std::uint64_t seed) {
    BenchResult r;
    r.structure = "sampled-lcp";
    r.d = csa.sample_rate();
    r.d_prime = slcp.d_prime();
    r.vector = std::string(to_string(slcp.marks().kind()));
    r.bits_per_symbol = slcp.size_report().bits_per_symbol;
    run(r, csa.size(), queries, seed, [&](size_type x, StepCounter& c) { return slcp.access(csa, x, &c); });
    return r;
}

BenchResult bench_plcp(const Csa& csa, const PlcpRepr& repr, size_type queries, std::uint64_t seed) {
    BenchResult r;
    r.structure = std::string(to_string(repr.kind()));
    r.d = csa.sample_rate();
    r.q = repr.parameter();
    if (repr.kind() == PlcpKind::plain) r.vector = "plain";
    if (repr.kind() == PlcpKind::rle) r.vector = "rle";
    r.bits_per_symbol = per_symbol(repr.size_in_bits(), csa.size());
    run(r, csa.size(), queries, seed, [&](size_type x, StepCounter& c) { return lcp_via_plcp(csa, repr, x, &c); });
    return r;
}

std::vector<BenchResult> sweep_d_prime(const Csa& csa, const StrictSamples& pass1, std::span<const size_type> d_primes,
                                       size_type queries, std::uint64_t seed, BitVectorKind marks) {
    std::vector<BenchResult> out;
    for (auto dp : d_primes) {
        const auto t = Clock::now();
        const SampledLcp slcp = build_sampled_lcp(csa, pass1, dp, {marks, kDefaultBlock});
        const double built = seconds_since(t);
        out.push_back(bench_sampled_lcp(csa, slcp, queries, seed));
        out.back().build_seconds = built;
    }
    return out;
}

std::vector<BenchResult> sweep_sample_rate(const Text& text, std::span<const size_type> rates, size_type queries,
                                           std::uint64_t seed) {
    const SuffixArrayData sad = build_suffix_array(text);
    std::vector<BenchResult> out;
    for (auto d : rates) {
        const auto t = Clock::now();
        const Csa csa = Csa::build(text, sad, d);
        const double built = seconds_since(t);
        out.push_back(bench_locate(csa, queries, seed));
        out.back().build_seconds = built;
    }
    return out;
}

std::string bench_csv_header() {
    return "structure,d,q,d_prime,vector,bits_per_symbol,mean_ns,p99_ns,mean_psi,max_psi,mean_comparisons,"
           "queries,seed,answer_sum,build_seconds,query_seconds";
}

std::string bench_csv_row(const BenchResult& r) {
    std::ostringstream out;
    out << r.structure << ',' << r.d << ',' << r.q << ',' << (r.structure == "sampled-lcp" ? d_prime_text(r.d_prime) : "0")
        << ',' << r.vector << ',' << r.bits_per_symbol << ',' << r.mean_ns << ',' << r.p99_ns << ',' << r.mean_psi
        << ',' << r.max_psi << ',' << r.mean_comparisons << ',' << r.queries << ',' << r.seed << ',' << r.answer_sum << ',' << r.build_seconds << ','
        << r.query_seconds;
    return out.str();
}

std::string bench_json(const std::vector<BenchResult>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json d_prime = nullptr;
        if (r.structure == "sampled-lcp") {
            if (r.d_prime == kUnbounded) d_prime = "inf";
            else d_prime = r.d_prime;
        }
        arr.push_back({{"structure", r.structure},
                       {"d", r.d},
                       {"q", r.q},
                       {"d_prime", d_prime},
                       {"vector", r.vector},
                       {"bits_per_symbol", r.bits_per_symbol},
                       {"mean_ns", r.mean_ns},
                       {"p99_ns", r.p99_ns},
                       {"mean_psi", r.mean_psi},
                       {"max_psi", r.max_psi},
                       {"mean_comparisons", r.mean_comparisons},
                       {"queries", r.queries},
                       {"seed", r.seed},
                       {"answer_sum", r.answer_sum},
                       {"build_seconds", r.build_seconds},
                       {"query_seconds", r.query_seconds}});
    }
    return arr.dump(2);
}

}  // namespace slcp
