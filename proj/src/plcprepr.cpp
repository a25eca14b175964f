#include "slcp/plcprepr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "slcp/lcpbuild.hpp"

namespace slcp {

namespace {
constexpr size_type kDisplayChunk = 16;
}  // namespace

// --- BitPlcp ------------------------------------------------------------------

BitPlcp::BitPlcp(size_type n, BitVector ones) : n_(n), ones_(std::move(ones)) {
    if (ones_.size() != 2 * n_ || ones_.ones() != n_) throw std::invalid_argument("inconsistent PLCP bit vector");
}

size_type BitPlcp::access(size_type i) const {
    if (i < 1 || i > n_) throw std::out_of_range("text position out of range");
    return ones_.select1(i) - 2 * i;
}

void BitPlcp::serialize(ByteWriter& out) const {
    out.raw("SP");
    out.u64(n_);
    ones_.serialize(out);
}

BitPlcp BitPlcp::deserialize(ByteReader& in) {
    in.expect_tag("SP");
    const size_type n = in.u64();
    BitVector ones = BitVector::deserialize(in);
    try {
        return BitPlcp(n, std::move(ones));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

BitPlcpBuilder::BitPlcpBuilder(BitVectorKind kind, size_type n, std::uint32_t block)
    : n_(n), bits_(kind, 2 * n, block) {}

void BitPlcpBuilder::push(size_type value) {
    if (i_ == n_) throw std::out_of_range("more PLCP values than positions");
    ++i_;
    const size_type pos = value + 2 * i_;
    if (pos <= last_) throw InvariantViolation("PLCP stream violates PLCP[i] >= PLCP[i-1] - 1 at position " +
                                               std::to_string(i_));
    if (pos > 2 * n_) throw InvariantViolation("PLCP value exceeds the suffix length at position " +
                                               std::to_string(i_));
    bits_.push(pos);
    last_ = pos;
}

BitPlcp BitPlcpBuilder::finish() && {
    if (i_ != n_) throw std::logic_error("PLCP builder finished early");
    return BitPlcp(n_, std::move(bits_).finish());
}

BitPlcp build_bit_plcp(std::span<const size_type> plcp, BitVectorKind kind, std::uint32_t block) {
    BitPlcpBuilder b(kind, plcp.size(), block);
    for (auto v : plcp) b.push(v);
    return std::move(b).finish();
}

// --- q-sampled -----------------------------------------------------------------

SampledPlcp::SampledPlcp(size_type n, size_type q, IntVector samples) : n_(n), q_(q), samples_(std::move(samples)) {
    if (q_ == 0 || n_ == 0 || samples_.size() != (n_ - 1) / q_ + 1)
        throw std::invalid_argument("inconsistent sampled PLCP");
}

size_type SampledPlcp::comparison_budget(size_type i) const {
    if (i < 1 || i > n_) throw std::out_of_range("text position out of range");
    const size_type a = (i - 1) / q_, b = (i - 1) % q_;
    if (b == 0) return 0;
    const size_type s = samples_[a];
    const size_type lower = s > b ? s - b : 0;
    size_type upper = n_ - i;
    if ((a + 1) * q_ + 1 <= n_) upper = std::min(upper, samples_[a + 1] + q_ - b);
    return upper > lower ? upper - lower : 0;
}

size_type SampledPlcp::access(const Csa& csa, size_type i, StepCounter* counter) const {
    if (i < 1 || i > n_) throw std::out_of_range("text position out of range");
    const size_type a = (i - 1) / q_, b = (i - 1) % q_;
    const size_type s = samples_[a];
    if (b == 0) return s;

    // PLCP[i] >= PLCP[i - b] - b and PLCP[i] <= PLCP[i + q - b] + (q - b).
    const size_type lower = s > b ? s - b : 0;
    size_type upper = n_ - i;
    if ((a + 1) * q_ + 1 <= n_) upper = std::min(upper, samples_[a + 1] + q_ - b);

    const size_type x = csa.inverse(i, counter);
    if (x == 1) return 0;
    const size_type j = csa.locate(x - 1, counter);
    upper = std::min(upper, n_ - j);
    if (lower >= upper) return lower;

    size_type off = lower;
    while (off < upper) {
        const size_type len = std::min(kDisplayChunk, upper - off);
        const auto u = csa.display(i + off, len, counter);
        const auto v = csa.display(j + off, len, counter);
        for (size_type t = 0; t < len; ++t) {
            if (counter) ++counter->comparisons;
            if (u[t] != v[t]) return off + t;
        }
        off += len;
    }
    return upper;
}

void SampledPlcp::serialize(ByteWriter& out) const {
    out.raw("QP");
    out.u64(n_);
    out.u64(q_);
    samples_.serialize(out);
}

SampledPlcp SampledPlcp::deserialize(ByteReader& in) {
    in.expect_tag("QP");
    const size_type n = in.u64();
    const size_type q = in.u64();
    IntVector samples = IntVector::deserialize(in);
    try {
        return SampledPlcp(n, q, std::move(samples));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

SampledPlcpBuilder::SampledPlcpBuilder(size_type n, size_type q) : n_(n), q_(q) {
    if (q == 0) throw std::invalid_argument("PLCP sample rate q must be >= 1");
    if (n == 0) throw std::invalid_argument("empty text");
    samples_ = IntVector((n - 1) / q + 1, IntVector::width_for(n - 1));
}

void SampledPlcpBuilder::push(size_type value) {
    if (i_ == n_) throw std::out_of_range("more PLCP values than positions");
    if (i_ % q_ == 0) samples_.set(i_ / q_, value);
    ++i_;
}

SampledPlcp SampledPlcpBuilder::finish() && {
    if (i_ != n_) throw std::logic_error("sampled PLCP builder finished early");
    return SampledPlcp(n_, q_, std::move(samples_));
}

// --- PlcpRepr ------------------------------------------------------------------

std::string_view to_string(PlcpKind kind) {
    switch (kind) {
        case PlcpKind::plain: return "plcp-plain";
        case PlcpKind::rle: return "plcp-rle";
        case PlcpKind::sampled: return "plcp-sampled";
    }
    return "unknown";
}

PlcpKind PlcpRepr::kind() const {
    if (const auto* s = std::get_if<BitPlcp>(&impl_))
        return s->kind() == BitVectorKind::rle ? PlcpKind::rle : PlcpKind::plain;
    return PlcpKind::sampled;
}

size_type PlcpRepr::size() const {
    return std::visit([](const auto& r) { return r.size(); }, impl_);
}

size_type PlcpRepr::size_in_bits() const {
    return std::visit([](const auto& r) { return r.size_in_bits(); }, impl_);
}

size_type PlcpRepr::parameter() const {
    if (const auto* s = std::get_if<SampledPlcp>(&impl_)) return s->sample_rate();
    return 0;
}

size_type PlcpRepr::access(const Csa& csa, size_type i, StepCounter* counter) const {
    if (const auto* s = std::get_if<BitPlcp>(&impl_)) return s->access(i);
    return std::get<SampledPlcp>(impl_).access(csa, i, counter);
}

void PlcpRepr::serialize(ByteWriter& out) const {
    out.u8(static_cast<std::uint8_t>(impl_.index()));
    std::visit([&out](const auto& r) { r.serialize(out); }, impl_);
}

PlcpRepr PlcpRepr::deserialize(ByteReader& in) {
    switch (in.u8()) {
        case 0: return PlcpRepr(BitPlcp::deserialize(in));
        case 1: return PlcpRepr(SampledPlcp::deserialize(in));
        default: throw FormatError("unknown PLCP representation tag");
    }
}

PlcpRepr build_plcp_repr(const Csa& csa, PlcpKind kind, size_type param, std::uint32_t block,
                         PlcpBuildStats* stats) {
    PlcpScanner scan(csa);
    if (kind == PlcpKind::sampled) {
        SampledPlcpBuilder b(csa.size(), param);
        while (scan.next()) b.push(scan.value());
        if (stats) *stats = scan.stats();
        return PlcpRepr(std::move(b).finish());
    }
    BitPlcpBuilder b(kind == PlcpKind::rle ? BitVectorKind::rle : BitVectorKind::plain, csa.size(), block);
    while (scan.next()) b.push(scan.value());
    if (stats) *stats = scan.stats();
    return PlcpRepr(std::move(b).finish());
}

size_type lcp_via_plcp(const Csa& csa, const PlcpRepr& repr, size_type x, StepCounter* counter) {
    return repr.access(csa, csa.locate(x, counter), counter);
}

}  // namespace slcp
