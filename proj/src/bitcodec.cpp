#include "slcp/bitcodec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slcp {

namespace {

// Index of the last directory entry whose key satisfies pred (keys monotone).
template <class Pred>
size_type last_block_in(size_type lo, size_type hi, Pred pred) {
    // pred(lo) assumed true; branch-free halving
    size_type len = hi - lo;
    while (len > 1) {
        const size_type half = len / 2;
        lo = pred(lo + half) ? lo + half : lo;
        len -= half;
    }
    return lo;
}

template <class Pred>
size_type last_block_where(size_type blocks, Pred pred) {
    return last_block_in(0, blocks, pred);
}

template <class Pred>
size_type last_block_hinted(const BlockHint& hint, size_type key, size_type blocks, Pred pred) {
    const auto [lo, hi] = hint.range(key);
    return last_block_in(lo, std::min(hi, blocks), pred);
}

unsigned select_in_word(std::uint64_t w, size_type k) {
    // k is 1-based
    for (size_type t = 1; t < k; ++t) w &= w - 1;
    return static_cast<unsigned>(std::countr_zero(w));
}

void write_header(ByteWriter& out, size_type length, size_type ones, std::uint32_t block,
                  size_type bits) {
    out.u64(length);
    out.u64(ones);
    out.u32(block);
    out.u64(bits);
}

}  // namespace

// --- BitWriter -------------------------------------------------------------

void BitWriter::append(std::uint64_t value, unsigned width) {
    if (width == 0) return;
    value &= low_mask(width);
    const unsigned off = static_cast<unsigned>(size_ & 63);
    if (off == 0) words_.push_back(0);
    words_.back() |= value << off;
    if (off != 0 && off + width > 64) words_.push_back(value >> (64 - off));
    size_ += width;
}

void BitWriter::append_delta(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("Elias-delta code is defined for values >= 1");
    const unsigned n = static_cast<unsigned>(std::bit_width(v)) - 1;
    const std::uint64_t len = std::uint64_t{n} + 1;
    const unsigned z = static_cast<unsigned>(std::bit_width(len)) - 1;
    append(std::uint64_t{1} << z, z + 1);
    append(len, z);
    append(v, n);
}

std::vector<std::uint64_t> BitWriter::finish() && {
    words_.push_back(0);
    return std::move(words_);
}

std::string bit_string(std::span<const std::uint64_t> words, size_type bits) {
    std::string s;
    s.reserve(bits);
    for (size_type p = 0; p < bits; ++p) s.push_back(((words[p >> 6] >> (p & 63)) & 1) ? '1' : '0');
    return s;
}

// --- IntVector -------------------------------------------------------------

IntVector::IntVector(size_type count, unsigned width)
    : size_(count), width_(width), words_((count * width + 63) / 64 + 1, 0) {
    if (width == 0 || width > 64) throw std::invalid_argument("IntVector width must be in [1, 64]");
}

unsigned IntVector::width_for(std::uint64_t max_value) {
    return std::max(1u, static_cast<unsigned>(std::bit_width(max_value)));
}

void IntVector::set(size_type i, std::uint64_t v) {
    if (width_ < 64 && (v >> width_) != 0) throw std::out_of_range("value does not fit IntVector width");
    const size_type pos = i * width_;
    const size_type idx = pos >> 6;
    const unsigned off = static_cast<unsigned>(pos & 63);
    const std::uint64_t mask = low_mask(width_);
    words_[idx] = (words_[idx] & ~(mask << off)) | (v << off);
    if (off != 0 && off + width_ > 64) {
        const unsigned spill = off + width_ - 64;
        words_[idx + 1] = (words_[idx + 1] & ~low_mask(spill)) | (v >> (64 - off));
    }
}

void IntVector::serialize(ByteWriter& out) const {
    out.raw("IV");
    out.u64(size_);
    out.u32(width_);
    out.u64_array(words_);
}

IntVector IntVector::deserialize(ByteReader& in) {
    in.expect_tag("IV");
    IntVector v;
    v.size_ = in.u64();
    v.width_ = in.u32();
    v.words_ = in.u64_array();
    if (v.width_ == 0 || v.width_ > 64 || v.words_.size() != (v.size_ * v.width_ + 63) / 64 + 1)
        throw FormatError("inconsistent IntVector section");
    return v;
}

// --- DeltaStream -----------------------------------------------------------

DeltaStream::DeltaStream(std::span<const std::uint64_t> values, std::uint64_t offset,
                         std::uint32_t block)
    : count_(values.size()), offset_(offset), block_(block) {
    if (block == 0) throw std::invalid_argument("block size must be positive");
    BitWriter w;
    std::uint64_t sum = 0;
    for (size_type t = 0; t < values.size(); ++t) {
        if (t % block_ == 0) {
            dir_offset_.push_back(w.size());
            dir_sum_.push_back(sum);
        }
        const std::uint64_t v = values[t];
        if (v > ~std::uint64_t{0} - offset_) throw std::overflow_error("delta stream value overflow");
        w.append_delta(v + offset_);
        sum += v;
    }
    bits_ = w.size();
    words_ = std::move(w).finish();
}

std::uint64_t DeltaStream::access(size_type k) const {
    if (k == 0 || k > count_) throw std::out_of_range("DeltaStream::access index out of range");
    const size_type t = k - 1;
    const size_type b = t / block_;
    DeltaReader r(words_.data(), dir_offset_[b]);
    for (size_type skip = t % block_; skip > 0; --skip) r.next();
    return r.next() - offset_;
}

std::uint64_t DeltaStream::prefix_sum(size_type k) const {
    if (k > count_) throw std::out_of_range("DeltaStream::prefix_sum index out of range");
    if (k == 0) return 0;
    const size_type b = (k - 1) / block_;
    std::uint64_t s = dir_sum_[b];
    DeltaReader r(words_.data(), dir_offset_[b]);
    for (size_type t = b * block_; t < k; ++t) s += r.next() - offset_;
    return s;
}

std::vector<std::uint64_t> DeltaStream::decode_all() const {
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    DeltaReader r(words_.data(), 0);
    for (size_type t = 0; t < count_; ++t) out.push_back(r.next() - offset_);
    return out;
}

size_type DeltaStream::size_in_bits() const { return bits_ + 128 * dir_offset_.size(); }

void DeltaStream::serialize(ByteWriter& out) const {
    out.raw("DS");
    out.u64(count_);
    out.u64(offset_);
    out.u32(block_);
    out.u64(bits_);
    out.u64_array(words_);
    out.u64_array(dir_offset_);
    out.u64_array(dir_sum_);
}

DeltaStream DeltaStream::deserialize(ByteReader& in) {
    in.expect_tag("DS");
    DeltaStream s;
    s.count_ = in.u64();
    s.offset_ = in.u64();
    s.block_ = in.u32();
    s.bits_ = in.u64();
    s.words_ = in.u64_array();
    s.dir_offset_ = in.u64_array();
    s.dir_sum_ = in.u64_array();
    const size_type blocks = s.block_ == 0 ? 0 : (s.count_ + s.block_ - 1) / s.block_;
    if (s.block_ == 0 || s.dir_offset_.size() != blocks || s.dir_sum_.size() != blocks ||
        s.words_.size() != (s.bits_ + 63) / 64 + 1)
        throw FormatError("inconsistent DeltaStream section");
    return s;
}

// --- PlainBitVector --------------------------------------------------------

PlainBitVector::PlainBitVector(size_type length, std::span<const size_type> ones) {
    PlainBitVectorBuilder b(length);
    for (auto p : ones) b.push(p);
    *this = std::move(b).finish();
}

PlainBitVectorBuilder::PlainBitVectorBuilder(size_type length) {
    v_.length_ = length;
    v_.words_.assign((length + 63) / 64 + 1, 0);
}

void PlainBitVectorBuilder::push(size_type pos) {
    if (pos <= last_ || pos > v_.length_)
        throw std::invalid_argument("bit positions must be strictly increasing within [1, length]");
    v_.words_[(pos - 1) >> 6] |= std::uint64_t{1} << ((pos - 1) & 63);
    ++v_.ones_;
    last_ = pos;
}

PlainBitVector PlainBitVectorBuilder::finish() && {
    v_.build_directory();
    return std::move(v_);
}

void PlainBitVector::build_directory() {
    const size_type nwords = words_.size();
    const size_type nsuper = (nwords + 7) / 8;
    super_.assign(nsuper + 1, 0);
    block_.assign(nwords, 0);
    select_hint_.clear();
    size_type total = 0;
    for (size_type s = 0; s < nsuper; ++s) {
        super_[s] = total;
        size_type within = 0;
        for (size_type w = s * 8; w < std::min(nwords, s * 8 + 8); ++w) {
            block_[w] = static_cast<std::uint16_t>(within);
            const size_type pc = static_cast<size_type>(std::popcount(words_[w]));
            // record the superblock holding every 512th one (ones 1, 513, ...)
            for (size_type j = (total + within + 511) / 512 * 512 + 1; j <= total + within + pc; j += 512)
                select_hint_.push_back(s);
            within += pc;
        }
        total += within;
    }
    super_[nsuper] = total;
}

size_type PlainBitVector::rank1(size_type pos) const {
    if (pos > length_) throw std::out_of_range("rank1 position out of range");
    const size_type w = pos >> 6;
    return super_[w / 8] + block_[w] +
           static_cast<size_type>(std::popcount(words_[w] & low_mask(static_cast<unsigned>(pos & 63))));
}

size_type PlainBitVector::select1(size_type k) const {
    if (k == 0 || k > ones_) throw std::out_of_range("select1 rank out of range");
    size_type s = select_hint_[(k - 1) / 512];
    while (super_[s + 1] < k) ++s;
    size_type w = s * 8;
    const size_type wend = std::min<size_type>(words_.size(), s * 8 + 8);
    while (w + 1 < wend && super_[s] + block_[w + 1] < k) ++w;
    const size_type rem = k - super_[s] - block_[w];
    return w * 64 + select_in_word(words_[w], rem) + 1;
}

size_type PlainBitVector::select0(size_type k) const {
    if (k == 0 || k > length_ - ones_) throw std::out_of_range("select0 rank out of range");
    const size_type nsuper = super_.size() - 1;
    const size_type s = last_block_where(nsuper, [&](size_type b) { return b * 512 - super_[b] < k; });
    size_type w = s * 8;
    const size_type wend = std::min<size_type>(words_.size(), s * 8 + 8);
    auto zeros_before = [&](size_type word) { return word * 64 - super_[s] - block_[word]; };
    while (w + 1 < wend && zeros_before(w + 1) < k) ++w;
    const size_type rem = k - zeros_before(w);
    return w * 64 + select_in_word(~words_[w], rem) + 1;
}

size_type PlainBitVector::size_in_bits() const {
    return length_ + 64 * super_.size() + 16 * block_.size() + 64 * select_hint_.size();
}

void PlainBitVector::serialize(ByteWriter& out) const {
    write_header(out, length_, ones_, 0, length_);
    out.u64_array(words_);
    out.u64_array(super_);
    std::vector<std::uint64_t> packed((block_.size() + 3) / 4, 0);
    for (size_type i = 0; i < block_.size(); ++i) packed[i / 4] |= std::uint64_t{block_[i]} << (16 * (i % 4));
    out.u64_array(packed);
    out.u64_array(select_hint_);
}

PlainBitVector PlainBitVector::deserialize(ByteReader& in) {
    PlainBitVector v;
    v.length_ = in.u64();
    v.ones_ = in.u64();
    in.u32();
    in.u64();
    v.words_ = in.u64_array();
    v.super_ = in.u64_array();
    auto packed = in.u64_array();
    v.select_hint_ = in.u64_array();
    if (v.words_.size() != (v.length_ + 63) / 64 + 1 || v.super_.size() != (v.words_.size() + 7) / 8 + 1 ||
        packed.size() != (v.words_.size() + 3) / 4 || v.super_.back() != v.ones_)
        throw FormatError("inconsistent plain bit vector section");
    v.block_.resize(v.words_.size());
    for (size_type i = 0; i < v.block_.size(); ++i)
        v.block_[i] = static_cast<std::uint16_t>(packed[i / 4] >> (16 * (i % 4)));
    return v;
}

// --- BlockHint -------------------------------------------------------------

void BlockHint::build(std::span<const std::uint64_t> keys, size_type universe) {
    // about four blocks per bucket
    const size_type width = std::max<size_type>(1, 4 * universe / std::max<size_type>(1, keys.size()));
    shift_ = static_cast<unsigned>(std::bit_width(width) - 1);
    const size_type buckets = (universe >> shift_) + 2;
    table_.assign(buckets, 0);
    size_type b = 0;
    for (size_type j = 0; j < buckets; ++j) {
        const size_type bound = j << shift_;
        while (b + 1 < keys.size() && keys[b + 1] < bound) ++b;
        table_[j] = static_cast<std::uint32_t>(b);
    }
}

// --- GapBitVector ----------------------------------------------------------

GapBitVector::GapBitVector(size_type length, std::span<const size_type> ones, std::uint32_t block) {
    GapBitVectorBuilder b(length, block);
    for (auto p : ones) b.push(p);
    *this = std::move(b).finish();
}

GapBitVectorBuilder::GapBitVectorBuilder(size_type length, std::uint32_t block) {
    if (block == 0) throw std::invalid_argument("block size must be positive");
    v_.length_ = length;
    v_.block_ = block;
    v_.dir_pos_.clear();
    v_.dir_offset_.clear();
}

void GapBitVectorBuilder::push(size_type pos) {
    if (pos <= last_ || pos > v_.length_)
        throw std::invalid_argument("bit positions must be strictly increasing within [1, length]");
    if (v_.ones_ % v_.block_ == 0) {
        v_.dir_pos_.push_back(last_);
        v_.dir_offset_.push_back(writer_.size());
    }
    writer_.append_delta(pos - last_);
    ++v_.ones_;
    last_ = pos;
}

GapBitVector GapBitVectorBuilder::finish() && {
    if (v_.dir_pos_.empty()) {
        v_.dir_pos_.push_back(0);
        v_.dir_offset_.push_back(0);
    }
    v_.bits_ = writer_.size();
    v_.words_ = std::move(writer_).finish();
    v_.pos_hint_.build(v_.dir_pos_, v_.length_);
    return std::move(v_);
}

RankAccess GapBitVector::rank_access(size_type pos) const {
    if (pos > length_) throw std::out_of_range("rank position out of range");
    if (pos == 0) return {0, false};
    const size_type b = last_block_hinted(pos_hint_, pos, dir_pos_.size(), [&](size_type i) { return dir_pos_[i] < pos; });
    size_type count = b * block_;
    size_type cur = dir_pos_[b];
    const size_type limit = std::min<size_type>(block_, ones_ - count);
    DeltaReader r(words_.data(), dir_offset_[b]);
    for (size_type t = 0; t < limit; ++t) {
        const size_type next = cur + r.next();
        if (next > pos) break;
        ++count;
        if (next == pos) return {count, true};
        cur = next;
    }
    return {count, false};
}

size_type GapBitVector::select1(size_type k) const {
    if (k == 0 || k > ones_) throw std::out_of_range("select1 rank out of range");
    const size_type b = (k - 1) / block_;
    size_type cur = dir_pos_[b];
    DeltaReader r(words_.data(), dir_offset_[b]);
    for (size_type t = b * block_; t < k; ++t) cur += r.next();
    return cur;
}

size_type GapBitVector::select0(size_type k) const {
    if (k == 0 || k > length_ - ones_) throw std::out_of_range("select0 rank out of range");
    const size_type b =
        last_block_where(dir_pos_.size(), [&](size_type i) { return dir_pos_[i] - i * block_ < k; });
    size_type cur = dir_pos_[b];
    size_type count = b * block_;
    const size_type limit = std::min<size_type>(block_, ones_ - count);
    DeltaReader r(words_.data(), dir_offset_[b]);
    for (size_type t = 0; t < limit; ++t) {
        const size_type zeros = cur - count;
        const size_type gap = r.next();
        if (zeros + gap - 1 >= k) return cur + (k - zeros);
        cur += gap;
        ++count;
    }
    return cur + (k - (cur - count));
}

size_type GapBitVector::size_in_bits() const { return bits_ + 128 * dir_pos_.size() + pos_hint_.size_in_bits(); }

void GapBitVector::serialize(ByteWriter& out) const {
    write_header(out, length_, ones_, block_, bits_);
    out.u64_array(words_);
    out.u64_array(dir_pos_);
    out.u64_array(dir_offset_);
}

GapBitVector GapBitVector::deserialize(ByteReader& in) {
    GapBitVector v;
    v.length_ = in.u64();
    v.ones_ = in.u64();
    v.block_ = in.u32();
    v.bits_ = in.u64();
    v.words_ = in.u64_array();
    v.dir_pos_ = in.u64_array();
    v.dir_offset_ = in.u64_array();
    const size_type blocks = v.block_ == 0 ? 0 : std::max<size_type>(1, (v.ones_ + v.block_ - 1) / v.block_);
    if (v.block_ == 0 || v.dir_pos_.size() != blocks || v.dir_offset_.size() != blocks ||
        v.words_.size() != (v.bits_ + 63) / 64 + 1)
        throw FormatError("inconsistent gap bit vector section");
    v.pos_hint_.build(v.dir_pos_, v.length_);
    return v;
}

// --- RleBitVector ----------------------------------------------------------

RleBitVector::RleBitVector(size_type length, std::span<const size_type> ones, std::uint32_t block) {
    RleBitVectorBuilder b(length, block);
    for (auto p : ones) b.push(p);
    *this = std::move(b).finish();
}

RleBitVectorBuilder::RleBitVectorBuilder(size_type length, std::uint32_t block) {
    if (block == 0) throw std::invalid_argument("block size must be positive");
    v_.length_ = length;
    v_.block_ = block;
}

void RleBitVectorBuilder::push(size_type pos) {
    const size_type last = run_length_ > 0 ? run_start_ + run_length_ - 1 : prev_end_;
    if (pos <= last || pos > v_.length_)
        throw std::invalid_argument("bit positions must be strictly increasing within [1, length]");
    if (run_length_ > 0 && pos == last + 1) {
        ++run_length_;
        return;
    }
    flush_run();
    run_start_ = pos;
    run_length_ = 1;
}

void RleBitVectorBuilder::flush_run() {
    if (run_length_ == 0) return;
    if (v_.runs_ % v_.block_ == 0) {
        v_.dir_start_.push_back(run_start_);
        v_.dir_rank_.push_back(v_.ones_);
        v_.dir_gap_offset_.push_back(gaps_.size());
        v_.dir_len_offset_.push_back(lengths_.size());
    }
    gaps_.append_delta(run_start_ - prev_end_);
    lengths_.append_delta(run_length_);
    ++v_.runs_;
    v_.ones_ += run_length_;
    prev_end_ = run_start_ + run_length_ - 1;
    run_length_ = 0;
}

RleBitVector RleBitVectorBuilder::finish() && {
    flush_run();
    v_.gap_bits_ = gaps_.size();
    v_.len_bits_ = lengths_.size();
    v_.gap_words_ = std::move(gaps_).finish();
    v_.len_words_ = std::move(lengths_).finish();
    v_.build_hints();
    return std::move(v_);
}

void RleBitVector::build_hints() {
    start_hint_.build(dir_start_, length_);
    rank_hint_.build(dir_rank_, ones_);
}

namespace {

// Walks the runs of an RLE vector from a directory entry.
class RunCursor {
public:
    RunCursor(const std::uint64_t* gaps, size_type gap_pos, const std::uint64_t* lens, size_type len_pos,
              size_type first_start)
        : gaps_(gaps, gap_pos), lens_(lens, len_pos), next_start_(first_start) {}

    // Decodes the next run; the first run's gap is skipped in favour of the
    // directory's start position.
    void next() {
        const size_type gap = gaps_.next();
        len = lens_.next();
        start = first_ ? next_start_ : end + gap;
        first_ = false;
        end = start + len - 1;
    }
    /// Gap before the run after the current one.
    size_type peek_gap() { return gaps_.next(); }

    size_type start = 0;
    size_type len = 0;
    size_type end = 0;

private:
    DeltaReader gaps_;
    DeltaReader lens_;
    size_type next_start_;
    bool first_ = true;
};

}  // namespace

RankAccess RleBitVector::rank_access(size_type pos) const {
    if (pos > length_) throw std::out_of_range("rank position out of range");
    if (runs_ == 0 || pos < dir_start_[0]) return {0, false};
    const size_type b = last_block_hinted(start_hint_, pos, dir_start_.size(), [&](size_type i) { return dir_start_[i] <= pos; });
    size_type count = dir_rank_[b];
    const size_type limit = std::min<size_type>(block_, runs_ - b * block_);
    RunCursor c(gap_words_.data(), dir_gap_offset_[b], len_words_.data(), dir_len_offset_[b], dir_start_[b]);
    for (size_type t = 0; t < limit; ++t) {
        c.next();
        if (c.start > pos) break;
        if (pos <= c.end) return {count + pos - c.start + 1, true};
        count += c.len;
    }
    return {count, false};
}

size_type RleBitVector::select1(size_type k) const {
    if (k == 0 || k > ones_) throw std::out_of_range("select1 rank out of range");
    const size_type b = last_block_hinted(rank_hint_, k - 1, dir_rank_.size(), [&](size_type i) { return dir_rank_[i] < k; });
    size_type count = dir_rank_[b];
    RunCursor c(gap_words_.data(), dir_gap_offset_[b], len_words_.data(), dir_len_offset_[b], dir_start_[b]);
    while (true) {
        c.next();
        if (count + c.len >= k) return c.start + (k - count - 1);
        count += c.len;
    }
}

std::pair<size_type, size_type> RleBitVector::select1_pair(size_type k) const {
    if (k < 2 || k > ones_) throw std::out_of_range("select1_pair rank out of range");
    const size_type b = last_block_hinted(rank_hint_, k - 2, dir_rank_.size(), [&](size_type i) { return dir_rank_[i] < k - 1; });
    size_type count = dir_rank_[b];
    RunCursor c(gap_words_.data(), dir_gap_offset_[b], len_words_.data(), dir_len_offset_[b], dir_start_[b]);
    while (true) {
        c.next();
        if (count + c.len >= k) return {c.start + (k - count - 2), c.start + (k - count - 1)};
        // The k-th one opens the next run.
        if (count + c.len == k - 1) return {c.end, c.end + c.peek_gap()};
        count += c.len;
    }
}

std::pair<size_type, size_type> RleBitVector::select1_two(size_type j, size_type k) const {
    if (j == 0 || j >= k || k > ones_) throw std::out_of_range("select1_two ranks out of range");
    const size_type b = last_block_hinted(rank_hint_, j - 1, dir_rank_.size(), [&](size_type i) { return dir_rank_[i] < j; });
    size_type count = dir_rank_[b];
    size_type first = 0;
    const size_type limit = std::min<size_type>(2 * block_, runs_ - b * block_);
    RunCursor c(gap_words_.data(), dir_gap_offset_[b], len_words_.data(), dir_len_offset_[b], dir_start_[b]);
    for (size_type t = 0; t < limit; ++t) {
        c.next();
        if (first == 0 && count + c.len >= j) first = c.start + (j - count - 1);
        if (count + c.len >= k) return {first, c.start + (k - count - 1)};
        count += c.len;
    }
    return {first, select1(k)};
}

size_type RleBitVector::select0(size_type k) const {
    if (k == 0 || k > length_ - ones_) throw std::out_of_range("select0 rank out of range");
    if (runs_ == 0) return k;
    // zeros strictly before the start of run b*B
    auto zeros_before = [&](size_type i) { return dir_start_[i] - 1 - dir_rank_[i]; };
    if (zeros_before(0) >= k) return k;
    const size_type b = last_block_where(dir_start_.size(), [&](size_type i) { return zeros_before(i) < k; });
    size_type count = dir_rank_[b];
    size_type prev_end = 0;
    const size_type limit = std::min<size_type>(block_, runs_ - b * block_);
    RunCursor c(gap_words_.data(), dir_gap_offset_[b], len_words_.data(), dir_len_offset_[b], dir_start_[b]);
    for (size_type t = 0; t < limit; ++t) {
        c.next();
        if (t > 0 && c.start - 1 - count >= k) return prev_end + (k - (prev_end - count));
        count += c.len;
        prev_end = c.end;
    }
    return prev_end + (k - (prev_end - count));
}

size_type RleBitVector::size_in_bits() const {
    return gap_bits_ + len_bits_ + 256 * dir_start_.size() + start_hint_.size_in_bits() + rank_hint_.size_in_bits();
}

void RleBitVector::serialize(ByteWriter& out) const {
    write_header(out, length_, ones_, block_, gap_bits_);
    out.u64(len_bits_);
    out.u64(runs_);
    out.u64_array(gap_words_);
    out.u64_array(len_words_);
    out.u64_array(dir_start_);
    out.u64_array(dir_rank_);
    out.u64_array(dir_gap_offset_);
    out.u64_array(dir_len_offset_);
}

RleBitVector RleBitVector::deserialize(ByteReader& in) {
    RleBitVector v;
    v.length_ = in.u64();
    v.ones_ = in.u64();
    v.block_ = in.u32();
    v.gap_bits_ = in.u64();
    v.len_bits_ = in.u64();
    v.runs_ = in.u64();
    v.gap_words_ = in.u64_array();
    v.len_words_ = in.u64_array();
    v.dir_start_ = in.u64_array();
    v.dir_rank_ = in.u64_array();
    v.dir_gap_offset_ = in.u64_array();
    v.dir_len_offset_ = in.u64_array();
    const size_type blocks = v.block_ == 0 ? 0 : (v.runs_ + v.block_ - 1) / v.block_;
    if (v.block_ == 0 || v.dir_start_.size() != blocks || v.dir_rank_.size() != blocks ||
        v.dir_gap_offset_.size() != blocks || v.dir_len_offset_.size() != blocks ||
        v.gap_words_.size() != (v.gap_bits_ + 63) / 64 + 1 || v.len_words_.size() != (v.len_bits_ + 63) / 64 + 1)
        throw FormatError("inconsistent RLE bit vector section");
    v.build_hints();
    return v;
}

// --- BitVector -------------------------------------------------------------

BitVectorBuilder::BitVectorBuilder(BitVectorKind kind, size_type length, std::uint32_t block)
    : impl_(std::in_place_index<0>, length, block) {
    switch (kind) {
        case BitVectorKind::plain: impl_.emplace<1>(length); break;
        case BitVectorKind::gap: break;
        case BitVectorKind::rle: impl_.emplace<2>(length, block); break;
        default: throw std::invalid_argument("unknown bit vector kind");
    }
}

void BitVectorBuilder::push(size_type pos) {
    std::visit([pos](auto& b) { b.push(pos); }, impl_);
}

BitVector BitVectorBuilder::finish() && {
    BitVector out;
    std::visit([&out](auto& b) { out.impl_ = std::move(b).finish(); }, impl_);
    return out;
}

std::string_view to_string(BitVectorKind kind) {
    switch (kind) {
        case BitVectorKind::plain: return "plain";
        case BitVectorKind::gap: return "gap";
        case BitVectorKind::rle: return "rle";
    }
    return "unknown";
}

BitVectorKind parse_bit_vector_kind(std::string_view name) {
    if (name == "plain") return BitVectorKind::plain;
    if (name == "gap") return BitVectorKind::gap;
    if (name == "rle") return BitVectorKind::rle;
    throw std::invalid_argument("unknown bit vector kind: " + std::string(name));
}

BitVector::BitVector(BitVectorKind kind, size_type length, std::span<const size_type> ones,
                     std::uint32_t block) {
    switch (kind) {
        case BitVectorKind::plain: impl_ = PlainBitVector(length, ones); break;
        case BitVectorKind::gap: impl_ = GapBitVector(length, ones, block); break;
        case BitVectorKind::rle: impl_ = RleBitVector(length, ones, block); break;
        default: throw std::invalid_argument("unknown bit vector kind");
    }
}

BitVectorKind BitVector::kind() const {
    switch (impl_.index()) {
        case 0: return BitVectorKind::gap;
        case 1: return BitVectorKind::plain;
        default: return BitVectorKind::rle;
    }
}

size_type BitVector::size() const { return std::visit([](const auto& v) { return v.size(); }, impl_); }
size_type BitVector::ones() const { return std::visit([](const auto& v) { return v.ones(); }, impl_); }

bool BitVector::access(size_type pos) const {
    if (pos == 0 || pos > size()) throw std::out_of_range("bit position out of range");
    return std::visit([pos](const auto& v) { return v.access(pos); }, impl_);
}

size_type BitVector::rank1(size_type pos) const {
    return std::visit([pos](const auto& v) { return v.rank1(pos); }, impl_);
}

size_type BitVector::select1(size_type k) const {
    return std::visit([k](const auto& v) { return v.select1(k); }, impl_);
}

size_type BitVector::select0(size_type k) const {
    return std::visit([k](const auto& v) { return v.select0(k); }, impl_);
}

RankAccess BitVector::rank_access(size_type pos) const {
    if (pos == 0 || pos > size()) throw std::out_of_range("bit position out of range");
    return std::visit([pos](const auto& v) { return v.rank_access(pos); }, impl_);
}

size_type BitVector::size_in_bits() const {
    return std::visit([](const auto& v) { return v.size_in_bits(); }, impl_);
}

void BitVector::serialize(ByteWriter& out) const {
    out.raw("BV");
    out.u8(static_cast<std::uint8_t>(kind()));
    std::visit([&out](const auto& v) { v.serialize(out); }, impl_);
}

BitVector BitVector::deserialize(ByteReader& in) {
    in.expect_tag("BV");
    BitVector bv;
    switch (in.u8()) {
        case static_cast<std::uint8_t>(BitVectorKind::plain): bv.impl_ = PlainBitVector::deserialize(in); break;
        case static_cast<std::uint8_t>(BitVectorKind::gap): bv.impl_ = GapBitVector::deserialize(in); break;
        case static_cast<std::uint8_t>(BitVectorKind::rle): bv.impl_ = RleBitVector::deserialize(in); break;
        default: throw FormatError("unknown bit vector kind tag");
    }
    return bv;
}

}  // namespace slcp
