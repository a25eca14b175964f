#pragma once

// Statistics over PLCP value classes and order-k entropy estimates: H_k,
// sigma', S', minimal and strictly minimal counts and sums, and R.

#include <string>
#include <vector>

#include "slcp/common.hpp"
#include "slcp/csa.hpp"
#include "slcp/lcpbuild.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

struct LcpStats {
    size_type n = 0;
    size_type runs = 0;
    ValueSet irreducible;
    ValueSet minimal;
    ValueSet strictly_minimal;

    static double per_n(const ValueSet& v, size_type n) {
        return n == 0 ? 0.0 : static_cast<double>(v.sum) / static_cast<double>(n);
    }
};

/// Counts and sums by one streaming scan. Throws InvariantViolation unless
/// count(minimal) = R and sum(minimal) = sum(irreducible) - (n - R).
LcpStats compute_stats(const Csa& csa);
LcpStats compute_stats(const Text& text);

/// Order-k empirical entropy in bits per symbol over T[1, n-1] (the
/// terminator is not text). Throws std::invalid_argument when n - 1 <= k.
double empirical_entropy(const Text& text, size_type k);

/// 1 / sum_w (occ(w) / total) * sum_c p(c | w)^2 over order-k contexts w.
double effective_alphabet(const Text& text, size_type k);

/// n (1 - 1/sigma') log2(n) / H - n / sigma'. Throws std::invalid_argument
/// when H <= 0 or sigma' < 1.
double estimate_irreducible_sum(size_type n, double sigma_prime, double entropy);

struct EntropyEstimate {
    size_type k = 0;
    double entropy = 0;
    double sigma_prime = 1;
    /// Clamped to 0 when the formula goes negative or H = 0.
    double s_prime = 0;
    bool degenerate = false;
};

EntropyEstimate estimate_entropy(const Text& text, size_type k);

struct ConcatSumResult {
    size_type base_sum = 0;
    size_type copy_length = 0;
    size_type copies = 0;
    size_type measured = 0;
    size_type predicted = 0;
    bool match = false;
};

/// Irreducible sum of concat(base, r) against s + (r - 1) N. With
/// use_oracle, the brute-force reference measures both sums.
ConcatSumResult concat_sum_experiment(const Text& base, size_type copies, bool use_oracle = false);

/// One table row: all stats columns plus the entropy estimate.
struct StatsRow {
    std::string name;
    LcpStats stats;
    EntropyEstimate estimate;
};

std::string stats_csv_header();
std::string stats_csv_row(const StatsRow& row);
std::string stats_json(const std::vector<StatsRow>& rows);

}  // namespace slcp
