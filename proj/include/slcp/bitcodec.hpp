#pragma once

// Bit-level storage substrate: packed words, Elias-delta codes, fixed-width
// integer vectors, and three bit-vector flavours sharing one rank/select
// contract.
//
// Bit order: bit p of a stream lives in words[p / 64] at bit (p % 64), i.e.
// LSB-first. Every word buffer carries one trailing zero word so that 64-bit
// windows never read past the end.
//
// Bit-vector positions are 1-based: rank1(pos) counts ones in [1, pos] and
// select1(k) returns the position of the k-th one.

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <string_view>
#include <variant>
#include <vector>

#include "slcp/common.hpp"
#include "slcp/serialize.hpp"

namespace slcp {

inline constexpr std::uint32_t kDefaultBlock = 32;

inline std::uint64_t low_mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Reads `width` (<= 64) bits starting at bit `pos`.
inline std::uint64_t fetch_bits(const std::uint64_t* words, size_type pos, unsigned width) {
    if (width == 0) return 0;
    const size_type idx = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    std::uint64_t v = words[idx] >> off;
    if (off != 0 && off + width > 64) v |= words[idx + 1] << (64 - off);
    return v & low_mask(width);
}

/// Length in bits of the Elias-delta codeword for v >= 1.
inline unsigned delta_length(std::uint64_t v) {
    const unsigned n = static_cast<unsigned>(std::bit_width(v)) - 1;
    const unsigned z = static_cast<unsigned>(std::bit_width(std::uint64_t{n} + 1)) - 1;
    return n + 2 * z + 1;
}

class BitWriter {
public:
    void append(std::uint64_t value, unsigned width);
    void append_delta(std::uint64_t v);
    size_type size() const { return size_; }
    /// Returns the words with the trailing zero pad word.
    std::vector<std::uint64_t> finish() &&;

private:
    std::vector<std::uint64_t> words_;
    size_type size_ = 0;
};

/// Sequential Elias-delta decoder.
class DeltaReader {
public:
    DeltaReader(const std::uint64_t* words, size_type pos) : words_(words), pos_(pos) {}

    [[gnu::always_inline]] std::uint64_t next() {
        // Fast path: the whole codeword sits in one 64-bit window.
        const std::uint64_t w = window(pos_);
        const unsigned z = static_cast<unsigned>(std::countr_zero(w));
        if (z < 21) {
            const unsigned n = static_cast<unsigned>(((w >> (z + 1)) & low_mask(z)) | (std::uint64_t{1} << z)) - 1;
            if (2 * z + 1 + n <= 64) {
                const std::uint64_t v = (std::uint64_t{1} << n) | ((w >> (2 * z + 1)) & low_mask(n));
                pos_ += 2 * z + 1 + n;
                return v;
            }
        }
        pos_ += z + 1;
        const std::uint64_t len = (std::uint64_t{1} << z) | fetch_bits(words_, pos_, z);
        pos_ += z;
        const unsigned n = static_cast<unsigned>(len - 1);
        const std::uint64_t v = (std::uint64_t{1} << n) | fetch_bits(words_, pos_, n);
        pos_ += n;
        return v;
    }
    size_type position() const { return pos_; }

private:
    std::uint64_t window(size_type pos) const {
        const size_type idx = pos >> 6;
        const unsigned off = static_cast<unsigned>(pos & 63);
        // Two-step shift so that off = 0 contributes nothing from the next word.
        return (words_[idx] >> off) | ((words_[idx + 1] << 1) << (63 - off));
    }

    const std::uint64_t* words_;
    size_type pos_;
};

/// Renders the first `bits` bits of a buffer as a '0'/'1' string in stream order.
std::string bit_string(std::span<const std::uint64_t> words, size_type bits);

/// Fixed-width packed unsigned integers, 0-based indexing.
class IntVector {
public:
    IntVector() = default;
    IntVector(size_type count, unsigned width);

    static unsigned width_for(std::uint64_t max_value);

    std::uint64_t operator[](size_type i) const { return fetch_bits(words_.data(), i * width_, width_); }
    void set(size_type i, std::uint64_t v);

    size_type size() const { return size_; }
    unsigned width() const { return width_; }
    size_type size_in_bits() const { return size_ * width_; }

    void serialize(ByteWriter& out) const;
    static IntVector deserialize(ByteReader& in);

private:
    size_type size_ = 0;
    unsigned width_ = 1;
    std::vector<std::uint64_t> words_{0};
};

/// Elias-delta coded sequence of integers with a block directory every B
/// values (bit offset and prefix sum). Stored codewords are value + offset;
/// offset 1 admits zero values.
class DeltaStream {
public:
    DeltaStream() = default;
    DeltaStream(std::span<const std::uint64_t> values, std::uint64_t offset = 0,
                std::uint32_t block = kDefaultBlock);

    size_type size() const { return count_; }
    std::uint64_t offset() const { return offset_; }

    /// k-th value, 1-based.
    std::uint64_t access(size_type k) const;
    /// Sum of the first k values.
    std::uint64_t prefix_sum(size_type k) const;
    std::vector<std::uint64_t> decode_all() const;

    size_type payload_bits() const { return bits_; }
    size_type size_in_bits() const;

    void serialize(ByteWriter& out) const;
    static DeltaStream deserialize(ByteReader& in);

    bool operator==(const DeltaStream&) const = default;

private:
    size_type count_ = 0;
    std::uint64_t offset_ = 0;
    std::uint32_t block_ = kDefaultBlock;
    size_type bits_ = 0;
    std::vector<std::uint64_t> words_{0};
    std::vector<std::uint64_t> dir_offset_;
    std::vector<std::uint64_t> dir_sum_;
};

/// rank1(pos) together with the bit at pos.
struct RankAccess {
    size_type rank;
    bool bit;
};

/// Bucket table over a sorted directory key array: entry j is the last block
/// whose key is below j * 2^shift, so a lookup only searches between two
/// neighbouring entries. Derived on build and load, never serialized.
class BlockHint {
public:
    void build(std::span<const std::uint64_t> keys, size_type universe);
    /// Blocks [first, second) bracket the last block with key below (or at) `key`.
    std::pair<size_type, size_type> range(size_type key) const {
        const size_type j = key >> shift_;
        return {table_[j], table_[j + 1] + 1};
    }
    size_type size_in_bits() const { return 32 * table_.size(); }

private:
    unsigned shift_ = 63;
    std::vector<std::uint32_t> table_{0, 0};
};

class PlainBitVectorBuilder;
class GapBitVectorBuilder;
class RleBitVectorBuilder;

class PlainBitVector {
public:
    PlainBitVector() : PlainBitVector(0, {}) {}
    /// Ones at the given strictly increasing 1-based positions.
    PlainBitVector(size_type length, std::span<const size_type> ones);

    size_type size() const { return length_; }
    size_type ones() const { return ones_; }

    bool access(size_type pos) const {
        return (words_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1;
    }
    size_type rank1(size_type pos) const;
    size_type select1(size_type k) const;
    size_type select0(size_type k) const;
    RankAccess rank_access(size_type pos) const { return {rank1(pos), access(pos)}; }

    size_type size_in_bits() const;
    void serialize(ByteWriter& out) const;
    static PlainBitVector deserialize(ByteReader& in);

private:
    friend class PlainBitVectorBuilder;
    struct Raw {};
    explicit PlainBitVector(Raw) {}
    void build_directory();

    size_type length_ = 0;
    size_type ones_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> super_;     // ones before each 512-bit superblock
    std::vector<std::uint16_t> block_;     // ones before each word within its superblock
    std::vector<std::uint64_t> select_hint_;  // superblock holding every 512th one
};

/// Gap-encoded bit vector: delta-coded distances between consecutive ones.
class GapBitVector {
public:
    GapBitVector() : GapBitVector(0, {}) {}
    GapBitVector(size_type length, std::span<const size_type> ones,
                 std::uint32_t block = kDefaultBlock);

    size_type size() const { return length_; }
    size_type ones() const { return ones_; }

    bool access(size_type pos) const { return rank_access(pos).bit; }
    size_type rank1(size_type pos) const { return rank_access(pos).rank; }
    size_type select1(size_type k) const;
    size_type select0(size_type k) const;
    RankAccess rank_access(size_type pos) const;

    size_type size_in_bits() const;
    void serialize(ByteWriter& out) const;
    static GapBitVector deserialize(ByteReader& in);

private:
    friend class GapBitVectorBuilder;
    struct Raw {};
    explicit GapBitVector(Raw) {}
    size_type length_ = 0;
    size_type ones_ = 0;
    std::uint32_t block_ = kDefaultBlock;
    size_type bits_ = 0;
    std::vector<std::uint64_t> words_{0};
    std::vector<std::uint64_t> dir_pos_;     // position of one number b*B (0 for b = 0)
    std::vector<std::uint64_t> dir_offset_;  // bit offset of gap number b*B + 1
    BlockHint pos_hint_;
};

/// Run-length encoded bit vector: each run of ones is stored as (zeros before
/// it + 1) in one delta stream and its length in a second one, with a
/// directory every B runs. Two streams keep the two decode chains independent.
class RleBitVector {
public:
    RleBitVector() : RleBitVector(0, {}) {}
    RleBitVector(size_type length, std::span<const size_type> ones,
                 std::uint32_t block = kDefaultBlock);

    size_type size() const { return length_; }
    size_type ones() const { return ones_; }
    size_type runs() const { return runs_; }

    bool access(size_type pos) const { return rank_access(pos).bit; }
    size_type rank1(size_type pos) const { return rank_access(pos).rank; }
    size_type select1(size_type k) const;
    /// {select1(k - 1), select1(k)} for k >= 2, decoding once.
    std::pair<size_type, size_type> select1_pair(size_type k) const;
    /// {select1(j), select1(k)} for j < k, decoding forward from j when k is
    /// near.
    std::pair<size_type, size_type> select1_two(size_type j, size_type k) const;
    size_type select0(size_type k) const;
    RankAccess rank_access(size_type pos) const;

    size_type size_in_bits() const;
    void serialize(ByteWriter& out) const;
    static RleBitVector deserialize(ByteReader& in);

private:
    friend class RleBitVectorBuilder;
    struct Raw {};
    explicit RleBitVector(Raw) {}
    size_type length_ = 0;
    size_type ones_ = 0;
    size_type runs_ = 0;
    std::uint32_t block_ = kDefaultBlock;
    size_type gap_bits_ = 0;
    size_type len_bits_ = 0;
    std::vector<std::uint64_t> gap_words_{0};
    std::vector<std::uint64_t> len_words_{0};
    std::vector<std::uint64_t> dir_start_;       // first position of run b*B
    std::vector<std::uint64_t> dir_rank_;        // ones before run b*B
    std::vector<std::uint64_t> dir_gap_offset_;  // bit offsets of run b*B in each stream
    std::vector<std::uint64_t> dir_len_offset_;
    BlockHint start_hint_;
    BlockHint rank_hint_;
    void build_hints();
};

// Streaming builders: ones are pushed at strictly increasing positions, so no
// position list is ever materialized.

class PlainBitVectorBuilder {
public:
    explicit PlainBitVectorBuilder(size_type length);
    void push(size_type pos);
    PlainBitVector finish() &&;

private:
    PlainBitVector v_{PlainBitVector::Raw{}};
    size_type last_ = 0;
};

class GapBitVectorBuilder {
public:
    GapBitVectorBuilder(size_type length, std::uint32_t block = kDefaultBlock);
    void push(size_type pos);
    GapBitVector finish() &&;

private:
    GapBitVector v_{GapBitVector::Raw{}};
    BitWriter writer_;
    size_type last_ = 0;
};

class RleBitVectorBuilder {
public:
    RleBitVectorBuilder(size_type length, std::uint32_t block = kDefaultBlock);
    void push(size_type pos);
    RleBitVector finish() &&;

private:
    void flush_run();

    RleBitVector v_{RleBitVector::Raw{}};
    BitWriter gaps_;
    BitWriter lengths_;
    size_type run_start_ = 0;
    size_type run_length_ = 0;
    size_type prev_end_ = 0;
};

enum class BitVectorKind : std::uint8_t { plain = 1, gap = 2, rle = 3 };

std::string_view to_string(BitVectorKind kind);
BitVectorKind parse_bit_vector_kind(std::string_view name);

/// Type-erased holder over the three bit-vector kinds.
class BitVector {
public:
    BitVector() = default;
    BitVector(BitVectorKind kind, size_type length, std::span<const size_type> ones,
              std::uint32_t block = kDefaultBlock);

    BitVectorKind kind() const;
    size_type size() const;
    size_type ones() const;
    bool access(size_type pos) const;
    size_type rank1(size_type pos) const;
    size_type rank0(size_type pos) const { return pos - rank1(pos); }
    size_type select1(size_type k) const;
    size_type select0(size_type k) const;
    RankAccess rank_access(size_type pos) const;
    size_type size_in_bits() const;

    void serialize(ByteWriter& out) const;
    static BitVector deserialize(ByteReader& in);

private:
    friend class BitVectorBuilder;
    std::variant<GapBitVector, PlainBitVector, RleBitVector> impl_;
};

class BitVectorBuilder {
public:
    BitVectorBuilder(BitVectorKind kind, size_type length, std::uint32_t block = kDefaultBlock);
    void push(size_type pos);
    BitVector finish() &&;

private:
    std::variant<GapBitVectorBuilder, PlainBitVectorBuilder, RleBitVectorBuilder> impl_;
};

}  // namespace slcp
