#include "slcp/sampledlcp.hpp"

#include <algorithm>
#include <stdexcept>

namespace slcp {

SampledLcp::SampledLcp(size_type n, size_type d_prime, size_type minimal_samples, size_type extra_samples,
                       BitVector marks, DeltaStream values)
    : n_(n),
      d_prime_(d_prime),
      minimal_samples_(minimal_samples),
      extra_samples_(extra_samples),
      marks_(std::move(marks)),
      values_(std::move(values)) {
    if (marks_.size() != n_ || values_.size() != marks_.ones() ||
        marks_.ones() != minimal_samples_ + extra_samples_ || values_.offset() != 1)
        throw std::invalid_argument("inconsistent sampled LCP parts");
}

size_type SampledLcp::access(const Csa& csa, size_type x, StepCounter* counter) const {
    if (x < 1 || x > n_) throw std::out_of_range("SA position out of range");
    size_type k = 0;
    while (true) {
        const RankAccess ra = marks_.rank_access(x);
        if (ra.bit) {
            if (counter) counter->psi += k;
            return values_.access(ra.rank) + k;
        }
        x = csa.psi(x);
        ++k;
    }
}

SampledLcpSize SampledLcp::size_report() const {
    SampledLcpSize s{};
    s.marks_bits = marks_.size_in_bits();
    s.values_bits = values_.size_in_bits();
    s.header_bits = 4 * 64;
    s.total_bits = s.marks_bits + s.values_bits + s.header_bits;
    s.bits_per_symbol = n_ == 0 ? 0.0 : static_cast<double>(s.total_bits) / static_cast<double>(n_);
    return s;
}

void SampledLcp::serialize(ByteWriter& out) const {
    out.raw("SL");
    out.u64(n_);
    out.u64(d_prime_);
    out.u64(minimal_samples_);
    out.u64(extra_samples_);
    marks_.serialize(out);
    values_.serialize(out);
}

SampledLcp SampledLcp::deserialize(ByteReader& in) {
    in.expect_tag("SL");
    const size_type n = in.u64();
    const size_type d_prime = in.u64();
    const size_type minimal = in.u64();
    const size_type extra = in.u64();
    BitVector marks = BitVector::deserialize(in);
    DeltaStream values = DeltaStream::deserialize(in);
    try {
        return SampledLcp(n, d_prime, minimal, extra, std::move(marks), std::move(values));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

size_type max_walk_length(const SampledLcp& slcp, const Csa& csa) {
    size_type best = 0, run = 0;
    size_type x = csa.inverse(1);
    for (size_type i = 1; i <= csa.size(); ++i) {
        if (i > 1) x = csa.psi(x);
        if (slcp.is_sampled(x)) {
            run = 0;
        } else {
            best = std::max(best, ++run);
        }
    }
    return best;
}

}  // namespace slcp
