#pragma once

// Brute-force reference arrays. Quadratic (or worse) by construction; used as
// ground truth by the tests and the `verify` command.

#include <vector>

#include "slcp/common.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

/// Limits on the content length (n - 1) accepted by the brute-force routines.
struct OracleLimits {
    size_type max_sa_length = 1'000'000;
    size_type max_lcp_length = 100'000;
};

/// All arrays are 1-based with slot 0 unused.
struct RefArrays {
    std::vector<size_type> sa;
    std::vector<size_type> isa;
    std::vector<size_type> lcp;
    std::vector<size_type> plcp;
    std::vector<Symbol> bwt;
    /// Per text position: PLCP[i] is irreducible.
    std::vector<bool> irreducible;

    size_type size() const { return sa.size() - 1; }
    /// Number of equal-letter runs in bwt.
    size_type runs() const;
};

RefArrays naive_reference(const Text& text, const OracleLimits& limits = {});
RefArrays oracle_concat_reference(const SentinelConcat& concat, const OracleLimits& limits = {});

/// lcp of suffixes i and j by direct comparison.
size_type naive_lcp_pair(const Text& text, size_type i, size_type j);

/// Occurrences of `pattern` in T[1, n-1] by scanning.
size_type naive_count(const Text& text, std::span<const Symbol> pattern);

}  // namespace slcp
