#pragma once

// Classical (uncompressed) suffix-array pipeline: SA by induced sorting, the
// inverse, the BWT, the C array, and two text-order PLCP builders.

#include <cstdint>
#include <vector>

#include "slcp/common.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

/// 1-based arrays (slot 0 unused). Values fit in 32 bits: texts are capped
/// below 2^31 symbols.
struct SuffixArrayData {
    std::vector<std::uint32_t> sa;
    std::vector<std::uint32_t> isa;
    std::vector<Symbol> bwt;
    /// C[c] = number of symbols smaller than c, for c in [0, alphabet_size];
    /// C[0] = 0 and C[alphabet_size] = n.
    std::vector<size_type> c_array;

    size_type size() const { return sa.size() - 1; }
};

/// Suffix array only (1-based), by SA-IS.
std::vector<std::uint32_t> build_sa(const Text& text);

SuffixArrayData build_suffix_array(const Text& text);

/// Linear time: each comparison resumes at the previous value
/// minus one. Returns 1-based PLCP.
std::vector<std::uint32_t> linear_plcp(const Text& text, const std::vector<std::uint32_t>& sa,
                                      const std::vector<std::uint32_t>& isa);

/// Irreducible-LCP route: only irreducible values are compared naively (from
/// offset 0); reducible ones are PLCP[i-1] - 1. `comparisons`, when given,
/// receives the number of symbol comparisons performed.
std::vector<std::uint32_t> irreducible_plcp_from_text(const Text& text, const std::vector<std::uint32_t>& sa,
                                                      size_type* comparisons = nullptr);

}  // namespace slcp
