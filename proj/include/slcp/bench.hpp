#pragma once

// Query benchmarks over uniformly random SA positions. Single-threaded; a
// warm-up pass over the same queries is run first and excluded. Latencies
// come from the steady clock around each query.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slcp/csa.hpp"
#include "slcp/lcpbuild.hpp"
#include "slcp/plcprepr.hpp"
#include "slcp/sampledlcp.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

struct BenchResult {
    std::string structure;
    size_type d = 0;
    /// q for plcp-sampled, 0 otherwise.
    size_type q = 0;
    /// kUnbounded renders as "inf".
    size_type d_prime = 0;
    std::string vector;
    double bits_per_symbol = 0;
    double mean_ns = 0;
    double p99_ns = 0;
    double mean_psi = 0;
    size_type max_psi = 0;
    double mean_comparisons = 0;
    size_type queries = 0;
    std::uint64_t seed = 0;
    /// Sum of all answers; equal across runs with the same seed.
    size_type answer_sum = 0;
    /// Construction time of the benchmarked structure (0 when prebuilt).
    double build_seconds = 0;
    /// Wall time of the timed query pass.
    double query_seconds = 0;
};

/// Uniform SA positions in [1, n], deterministic in the seed.
std::vector<size_type> random_queries(size_type n, size_type count, std::uint64_t seed);

/// SA[x] alone: the floor under any PLCP-based LCP access.
BenchResult bench_locate(const Csa& csa, size_type queries, std::uint64_t seed);
BenchResult bench_sampled_lcp(const Csa& csa, const SampledLcp& slcp, size_type queries, std::uint64_t seed);
BenchResult bench_plcp(const Csa& csa, const PlcpRepr& repr, size_type queries, std::uint64_t seed);

/// Sampled LCP size and walk length as d' varies. Pass 1 is shared; each
/// row's build time covers pass 2 and the merge.
std::vector<BenchResult> sweep_d_prime(const Csa& csa, const StrictSamples& pass1, std::span<const size_type> d_primes,
                                       size_type queries, std::uint64_t seed,
                                       BitVectorKind marks = BitVectorKind::gap);
/// CSA size and locate cost as the SA sample rate d varies; one build per value.
std::vector<BenchResult> sweep_sample_rate(const Text& text, std::span<const size_type> rates, size_type queries,
                                           std::uint64_t seed);

std::string bench_csv_header();
std::string bench_csv_row(const BenchResult& r);
std::string bench_json(const std::vector<BenchResult>& rows);

}  // namespace slcp
