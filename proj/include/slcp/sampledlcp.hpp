#pragma once

// Sampled LCP array. Sampled SA positions are marked in a bit vector and their
// LCP values kept in SA order as a delta stream (value + 1). An unsampled
// position x is answered by walking Psi: if Psi^k(x) is the first marked
// position, LCP[x] = LCP[Psi^k(x)] + k.
//
// Samples are the strictly minimal PLCP values plus extra samples placed so
// that no run of unsampled text positions reaches d' (the walk stays below d').

#include "slcp/bitcodec.hpp"
#include "slcp/common.hpp"
#include "slcp/csa.hpp"
#include "slcp/serialize.hpp"

namespace slcp {

struct SampledLcpSize {
    size_type marks_bits;
    size_type values_bits;
    size_type header_bits;
    size_type total_bits;
    double bits_per_symbol;
};

class SampledLcp {
public:
    SampledLcp() = default;
    SampledLcp(size_type n, size_type d_prime, size_type minimal_samples, size_type extra_samples,
               BitVector marks, DeltaStream values);

    size_type size() const { return n_; }
    /// kUnbounded when no extra samples were requested.
    size_type d_prime() const { return d_prime_; }
    size_type minimal_samples() const { return minimal_samples_; }
    size_type extra_samples() const { return extra_samples_; }
    size_type samples() const { return marks_.ones(); }
    const BitVector& marks() const { return marks_; }

    bool is_sampled(size_type x) const { return marks_.access(x); }
    /// LCP[x]; counter->psi receives the walk length.
    size_type access(const Csa& csa, size_type x, StepCounter* counter = nullptr) const;

    SampledLcpSize size_report() const;

    void serialize(ByteWriter& out) const;
    static SampledLcp deserialize(ByteReader& in);

private:
    size_type n_ = 0;
    size_type d_prime_ = kUnbounded;
    size_type minimal_samples_ = 0;
    size_type extra_samples_ = 0;
    BitVector marks_;
    DeltaStream values_;
};

/// Longest Psi walk taken by any access: the longest run of unsampled text
/// positions. Exhaustive, one Psi step per text position.
size_type max_walk_length(const SampledLcp& slcp, const Csa& csa);

}  // namespace slcp
