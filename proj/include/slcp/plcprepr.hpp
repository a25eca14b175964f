#pragma once

// PLCP representations answering PLCP[i] by text position:
//  - bit vector: ones at PLCP[i] + 2i in a bit vector of length 2n (plain or
//    run-length encoded); PLCP[i] = select1(i) - 2i.
//  - q-sampled: PLCP[1], PLCP[q + 1], ... stored fixed width; the rest is
//    recovered by comparing suffix i with its left match, starting from the
//    bound that the neighbouring samples give.
// LCP[x] is then PLCP[SA[x]], one locate per query.

#include <span>
#include <string_view>
#include <variant>

#include "slcp/bitcodec.hpp"
#include "slcp/common.hpp"
#include "slcp/csa.hpp"
#include "slcp/lcpbuild.hpp"
#include "slcp/serialize.hpp"

namespace slcp {

class BitPlcp {
public:
    BitPlcp() = default;
    BitPlcp(size_type n, BitVector ones);

    size_type size() const { return n_; }
    BitVectorKind kind() const { return ones_.kind(); }
    const BitVector& bits() const { return ones_; }

    size_type access(size_type i) const;
    size_type size_in_bits() const { return ones_.size_in_bits(); }

    void serialize(ByteWriter& out) const;
    static BitPlcp deserialize(ByteReader& in);

private:
    size_type n_ = 0;
    BitVector ones_;
};

/// Takes PLCP[1], PLCP[2], ... in order. Throws InvariantViolation when
/// PLCP[i] < PLCP[i - 1] - 1.
class BitPlcpBuilder {
public:
    BitPlcpBuilder(BitVectorKind kind, size_type n, std::uint32_t block = kDefaultBlock);
    void push(size_type value);
    BitPlcp finish() &&;

private:
    size_type n_;
    size_type i_ = 0;
    size_type last_ = 0;
    BitVectorBuilder bits_;
};

BitPlcp build_bit_plcp(std::span<const size_type> plcp, BitVectorKind kind,
                            std::uint32_t block = kDefaultBlock);

class SampledPlcp {
public:
    SampledPlcp() = default;
    SampledPlcp(size_type n, size_type q, IntVector samples);

    size_type size() const { return n_; }
    size_type sample_rate() const { return q_; }
    /// PLCP[k * q + 1].
    size_type sample(size_type k) const { return samples_[k]; }
    size_type samples() const { return samples_.size(); }

    /// counter->comparisons receives the symbol comparisons, counter->psi the
    /// Psi steps spent in inverse/locate/display.
    size_type access(const Csa& csa, size_type i, StepCounter* counter = nullptr) const;
    /// Largest number of comparisons access(i) may spend: upper - lower.
    size_type comparison_budget(size_type i) const;

    size_type size_in_bits() const { return samples_.size_in_bits(); }

    void serialize(ByteWriter& out) const;
    static SampledPlcp deserialize(ByteReader& in);

private:
    size_type n_ = 0;
    size_type q_ = 1;
    IntVector samples_;
};

class SampledPlcpBuilder {
public:
    SampledPlcpBuilder(size_type n, size_type q);
    void push(size_type value);
    SampledPlcp finish() &&;

private:
    size_type n_;
    size_type q_;
    size_type i_ = 0;
    IntVector samples_;
};

enum class PlcpKind : std::uint8_t { plain = 1, rle = 2, sampled = 3 };

std::string_view to_string(PlcpKind kind);

class PlcpRepr {
public:
    PlcpRepr() = default;
    explicit PlcpRepr(BitPlcp s) : impl_(std::move(s)) {}
    explicit PlcpRepr(SampledPlcp s) : impl_(std::move(s)) {}

    PlcpKind kind() const;
    size_type size() const;
    size_type size_in_bits() const;
    /// q for the sampled kind, 0 otherwise.
    size_type parameter() const;

    size_type access(const Csa& csa, size_type i, StepCounter* counter = nullptr) const;

    /// The underlying q-sampled PLCP, or nullptr for the bit-vector kinds.
    const SampledPlcp* sampled() const { return std::get_if<SampledPlcp>(&impl_); }

    void serialize(ByteWriter& out) const;
    static PlcpRepr deserialize(ByteReader& in);

private:
    std::variant<BitPlcp, SampledPlcp> impl_;
};

/// Builds the representation from the CSA scan without materializing PLCP.
/// `param` is q for the sampled kind and ignored otherwise.
PlcpRepr build_plcp_repr(const Csa& csa, PlcpKind kind, size_type param = 0, std::uint32_t block = kDefaultBlock,
                         PlcpBuildStats* stats = nullptr);

inline size_type plcp_access(const PlcpRepr& repr, const Csa& csa, size_type i, StepCounter* counter = nullptr) {
    return repr.access(csa, i, counter);
}

/// LCP[x] = PLCP[SA[x]].
size_type lcp_via_plcp(const Csa& csa, const PlcpRepr& repr, size_type x, StepCounter* counter = nullptr);

}  // namespace slcp
