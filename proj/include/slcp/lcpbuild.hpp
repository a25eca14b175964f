#pragma once

// PLCP construction on top of the CSA alone (no text, no SA), and the
// two-pass sampled LCP construction built on it.
//
// PlcpScanner walks the text in order, keeping x = SA^-1[i]. PLCP[i] is
// reducible exactly when x' = SA^-1[i-1] is not the first position of its
// Psi_c range and Psi(x' - 1) = Psi(x') - 1: then the left match of suffix i
// is preceded by the same symbol as suffix i, and PLCP[i] = PLCP[i-1] - 1.
// Irreducible values are computed by stepping both suffixes forward with Psi
// while they start with the same symbol.

#include <functional>
#include <vector>

#include "slcp/bitcodec.hpp"
#include "slcp/common.hpp"
#include "slcp/csa.hpp"
#include "slcp/sampledlcp.hpp"

namespace slcp {

struct PlcpBuildStats {
    size_type irreducible_count = 0;
    size_type irreducible_sum = 0;
    size_type psi_evals = 0;
};

/// Streams (i, PLCP[i]) for i = 1..n. Constant state beyond the CSA.
class PlcpScanner {
public:
    explicit PlcpScanner(const Csa& csa);

    /// Advances to the next text position; false once position n was consumed.
    bool next();

    size_type position() const { return i_; }
    /// SA^-1[position()].
    size_type sa_position() const { return x_; }
    size_type value() const { return value_; }
    bool irreducible() const { return irreducible_; }
    const PlcpBuildStats& stats() const { return stats_; }

private:
    const Csa* csa_;
    size_type i_ = 0;
    size_type x_ = 0;
    size_type value_ = 0;
    bool irreducible_ = true;
    PlcpBuildStats stats_;
};

using PlcpSink = std::function<void(size_type position, size_type value)>;

PlcpBuildStats build_plcp_from_csa(const Csa& csa, const PlcpSink& sink);

/// LCP[b] for b >= 2, by paired Psi steps from SA positions b - 1 and b.
size_type lcp_pair_via_psi(const Csa& csa, size_type b, size_type* psi_evals = nullptr);

struct ValueSet {
    size_type count = 0;
    size_type sum = 0;

    bool operator==(const ValueSet&) const = default;
};

/// Counts and sums of the three value classes, streamed (no per-position
/// arrays).
struct ValueSummary {
    size_type n = 0;
    size_type runs = 0;
    ValueSet irreducible;
    ValueSet minimal;
    ValueSet strictly_minimal;
    size_type psi_evals = 0;
};

ValueSummary summarize_values(const Csa& csa);

/// Per text position flags (1-based, slot 0 unused) together with the PLCP.
struct MinimalClassification {
    std::vector<size_type> plcp;
    std::vector<bool> maximal;
    std::vector<bool> minimal;
    std::vector<bool> strictly_minimal;
    ValueSet maximal_values;
    ValueSet minimal_values;
    ValueSet strictly_minimal_values;
};

MinimalClassification classify_minimal_from_csa(const Csa& csa);

/// SA positions holding minimal values, found in SA order: x is the first
/// position of its Psi_c range or Psi(x - 1) != Psi(x) - 1. Ascending.
std::vector<size_type> minimal_sa_positions(const Csa& csa);

struct SampledLcpOptions {
    BitVectorKind marks = BitVectorKind::gap;
    std::uint32_t block = kDefaultBlock;
};

struct SampledLcpBuildReport {
    size_type minimal_samples = 0;
    size_type extra_samples = 0;
    size_type psi_evals = 0;
    /// Peak bytes held by the sample buffer.
    size_type peak_aux_bytes = 0;
};

struct LcpSample {
    size_type text_pos;
    size_type sa_pos;
    size_type value;
};

/// Pass 1: the strictly minimal values in text order, recorded during the
/// PLCP scan. Position n is always included.
struct StrictSamples {
    size_type n = 0;
    std::vector<LcpSample> samples;
    size_type psi_evals = 0;
};

StrictSamples collect_strictly_minimal(const Csa& csa);

/// Pass 2 over a pass-1 result, then the merge into SA order.
SampledLcp build_sampled_lcp(const Csa& csa, const StrictSamples& pass1, size_type d_prime,
                             const SampledLcpOptions& options = {}, SampledLcpBuildReport* report = nullptr);

/// Pass 1 records the strictly minimal samples during the PLCP scan; pass 2
/// walks the text again and adds an extra sample at the d'-th consecutive
/// unsampled position. d_prime = kUnbounded disables pass 2.
SampledLcp build_sampled_lcp_from_csa(const Csa& csa, size_type d_prime, const SampledLcpOptions& options = {},
                                      SampledLcpBuildReport* report = nullptr);

/// d' = n / R^(1 - eps), rounded up, at least 1.
size_type d_prime_from_epsilon(size_type n, size_type runs, double eps);

}  // namespace slcp
