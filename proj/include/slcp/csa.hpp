#pragma once

// Psi-based compressed suffix array over a run-length encoded BWT.
//
// The BWT is stored twice over its runs: globally (run heads in a gap-encoded
// bit vector, run symbols in a delta stream) for L[x], and per symbol (one RLE
// bit vector marking the positions of that symbol in L) for rank_c/select_c.
//
// Psi and LF are cyclic: Psi(SA^-1[n]) = SA^-1[1], LF(SA^-1[1]) = SA^-1[n].
// Suffix-array samples sit at SA positions x with SA[x] = 1 (mod d), plus
// SA^-1[n]; inverse samples at text positions 1, d+1, 2d+1, ...

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "slcp/bitcodec.hpp"
#include "slcp/common.hpp"
#include "slcp/serialize.hpp"
#include "slcp/suffixcore.hpp"
#include "slcp/textstore.hpp"

namespace slcp {

/// Psi_c = [lo, hi] = [C[c] + 1, C[c + 1]].
struct SymbolRange {
    Symbol symbol;
    size_type lo;
    size_type hi;

    bool contains(size_type x) const { return lo <= x && x <= hi; }
    bool operator==(const SymbolRange&) const = default;
};

/// Suffix-array interval [lo, hi]; empty when hi < lo.
struct SaRange {
    size_type lo;
    size_type hi;

    size_type count() const { return hi >= lo ? hi - lo + 1 : 0; }
};

struct CsaSizes {
    size_type bwt_bits;
    size_type sa_sample_bits;
    size_type isa_sample_bits;

    size_type total() const { return bwt_bits + sa_sample_bits + isa_sample_bits; }
};

class Csa {
public:
    Csa() = default;

    static Csa build(const Text& text, size_type sample_rate, std::uint32_t block = kDefaultBlock);
    static Csa build(const Text& text, const SuffixArrayData& sa, size_type sample_rate,
                     std::uint32_t block = kDefaultBlock);

    size_type size() const { return n_; }
    size_type alphabet_size() const { return c_array_.size() - 1; }
    size_type sample_rate() const { return sample_rate_; }
    /// Number of equal-letter runs in the BWT.
    size_type runs() const { return runs_; }
    std::span<const size_type> c_array() const { return c_array_; }
    std::span<const int> rank_to_byte() const { return rank_to_byte_; }

    SymbolRange range_containing(size_type x) const;
    /// First symbol of the suffix at SA position x.
    Symbol first_symbol(size_type x) const { return range_containing(x).symbol; }
    /// L[x].
    Symbol bwt(size_type x) const;
    /// Occurrences of c in L[1, i].
    size_type rank(Symbol c, size_type i) const;
    /// Position of the j-th c in L.
    size_type select(Symbol c, size_type j) const;

    size_type psi(size_type x) const {
        const SymbolRange r = range_containing(x);
        return by_symbol_[r.symbol].select1(x - c_array_[r.symbol]);
    }
    /// {Psi(x - 1), Psi(x)}, with 0 in place of Psi(x - 1) when x is the
    /// first position of its Psi_c range.
    std::pair<size_type, size_type> psi_with_previous(size_type x) const {
        const SymbolRange r = range_containing(x);
        const RleBitVector& v = by_symbol_[r.symbol];
        if (x == r.lo) return {0, v.select1(1)};
        return v.select1_pair(x - c_array_[r.symbol]);
    }
    /// {Psi(a), Psi(b)} for a < b inside one Psi_c range.
    std::pair<size_type, size_type> psi_two(size_type a, size_type b, const SymbolRange& r) const {
        return by_symbol_[r.symbol].select1_two(a - c_array_[r.symbol], b - c_array_[r.symbol]);
    }
    size_type lf(size_type x) const;

    SaRange backward_search(std::span<const Symbol> pattern) const;
    size_type count(std::span<const Symbol> pattern) const { return backward_search(pattern).count(); }
    /// Pattern given as external bytes; bytes outside the alphabet give 0.
    size_type count_bytes(std::string_view pattern) const;

    /// SA[x] by walking Psi to a sample; counter->psi receives the steps.
    size_type locate(size_type x, StepCounter* counter = nullptr) const;
    /// SA^-1[i] from the preceding inverse sample.
    size_type inverse(size_type i, StepCounter* counter = nullptr) const;
    /// T[i, i + len - 1].
    std::vector<Symbol> display(size_type i, size_type len, StepCounter* counter = nullptr) const;

    CsaSizes sizes() const;

    void serialize(ByteWriter& out) const;
    static Csa deserialize(ByteReader& in);

private:
    void check_position(size_type x) const;

    size_type n_ = 0;
    size_type sample_rate_ = 1;
    size_type runs_ = 0;
    std::uint32_t block_ = kDefaultBlock;
    std::vector<size_type> c_array_{0};
    std::vector<int> rank_to_byte_;

    BitVector run_heads_;
    DeltaStream run_symbols_;  // symbol + 1 per run
    std::vector<RleBitVector> by_symbol_;

    BitVector sa_marks_;
    IntVector sa_values_;
    IntVector isa_values_;
};

}  // namespace slcp
