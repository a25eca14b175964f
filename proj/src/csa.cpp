#include "slcp/csa.hpp"

#include <algorithm>
#include <stdexcept>

namespace slcp {

namespace {
constexpr std::string_view kMagic = "SLCP";
constexpr std::uint32_t kVersion = 1;
}  // namespace

Csa Csa::build(const Text& text, size_type sample_rate, std::uint32_t block) {
    if (sample_rate == 0) throw std::invalid_argument("SA sample rate must be >= 1");
    return build(text, build_suffix_array(text), sample_rate, block);
}

Csa Csa::build(const Text& text, const SuffixArrayData& sad, size_type sample_rate, std::uint32_t block) {
    if (sample_rate == 0) throw std::invalid_argument("SA sample rate must be >= 1");
    const size_type n = text.size();
    if (sad.size() != n) throw std::invalid_argument("suffix array does not match text");

    Csa csa;
    csa.n_ = n;
    csa.sample_rate_ = sample_rate;
    csa.block_ = block;
    csa.c_array_ = sad.c_array;
    csa.rank_to_byte_.assign(text.rank_to_byte().begin(), text.rank_to_byte().end());
    const size_type alphabet = text.alphabet_size();

    // BWT runs.
    std::vector<size_type> heads;
    std::vector<std::uint64_t> run_symbols;
    std::vector<std::vector<size_type>> positions(alphabet);
    for (size_type x = 1; x <= n; ++x) {
        const Symbol c = sad.bwt[x];
        if (x == 1 || c != sad.bwt[x - 1]) {
            heads.push_back(x);
            run_symbols.push_back(c + 1);
        }
        positions[c].push_back(x);
    }
    csa.runs_ = heads.size();
    csa.run_heads_ = BitVector(BitVectorKind::gap, n, heads, block);
    csa.run_symbols_ = DeltaStream(run_symbols, 0, block);
    csa.by_symbol_.reserve(alphabet);
    for (auto& p : positions) {
        csa.by_symbol_.emplace_back(n, p, block);
        std::vector<size_type>().swap(p);
    }

    // SA samples.
    std::vector<size_type> marks;
    std::vector<size_type> values;
    for (size_type x = 1; x <= n; ++x) {
        const size_type v = sad.sa[x];
        if ((v - 1) % sample_rate == 0 || v == n) {
            marks.push_back(x);
            values.push_back(v);
        }
    }
    csa.sa_marks_ = BitVector(BitVectorKind::gap, n, marks, block);
    csa.sa_values_ = IntVector(values.size(), IntVector::width_for(n));
    for (size_type k = 0; k < values.size(); ++k) csa.sa_values_.set(k, values[k]);

    const size_type isa_count = (n - 1) / sample_rate + 1;
    csa.isa_values_ = IntVector(isa_count, IntVector::width_for(n));
    for (size_type s = 0; s < isa_count; ++s) csa.isa_values_.set(s, sad.isa[s * sample_rate + 1]);
    return csa;
}

void Csa::check_position(size_type x) const {
    if (x < 1 || x > n_) throw std::out_of_range("SA position out of range");
}

SymbolRange Csa::range_containing(size_type x) const {
    check_position(x);
    // largest c with C[c] < x
    const auto it = std::lower_bound(c_array_.begin(), c_array_.end(), x);
    const auto c = static_cast<Symbol>((it - c_array_.begin()) - 1);
    return {c, c_array_[c] + 1, c_array_[c + 1]};
}

Symbol Csa::bwt(size_type x) const {
    check_position(x);
    return static_cast<Symbol>(run_symbols_.access(run_heads_.rank1(x)) - 1);
}

size_type Csa::rank(Symbol c, size_type i) const {
    if (c >= alphabet_size()) return 0;
    return by_symbol_[c].rank1(i);
}

size_type Csa::select(Symbol c, size_type j) const {
    if (c >= alphabet_size()) throw std::out_of_range("symbol outside alphabet");
    return by_symbol_[c].select1(j);
}

size_type Csa::lf(size_type x) const {
    const Symbol c = bwt(x);
    return c_array_[c] + by_symbol_[c].rank1(x);
}

SaRange Csa::backward_search(std::span<const Symbol> pattern) const {
    size_type sp = 1, ep = n_;
    for (size_type k = pattern.size(); k > 0; --k) {
        const Symbol c = pattern[k - 1];
        if (c >= alphabet_size()) return {1, 0};
        sp = c_array_[c] + by_symbol_[c].rank1(sp - 1) + 1;
        ep = c_array_[c] + by_symbol_[c].rank1(ep);
        if (sp > ep) return {1, 0};
    }
    return {sp, ep};
}

size_type Csa::count_bytes(std::string_view pattern) const {
    std::vector<Symbol> mapped;
    mapped.reserve(pattern.size());
    for (char ch : pattern) {
        const auto b = static_cast<int>(static_cast<unsigned char>(ch));
        const auto it = std::find(rank_to_byte_.begin() + 1, rank_to_byte_.end(), b);
        if (it == rank_to_byte_.end()) return 0;
        mapped.push_back(static_cast<Symbol>(it - rank_to_byte_.begin()));
    }
    return count(mapped);
}

size_type Csa::locate(size_type x, StepCounter* counter) const {
    check_position(x);
    size_type k = 0;
    while (true) {
        const RankAccess ra = sa_marks_.rank_access(x);
        if (ra.bit) {
            if (counter) counter->psi += k;
            return sa_values_[ra.rank - 1] - k;
        }
        x = psi(x);
        ++k;
    }
}

size_type Csa::inverse(size_type i, StepCounter* counter) const {
    if (i < 1 || i > n_) throw std::out_of_range("text position out of range");
    const size_type s = (i - 1) / sample_rate_;
    size_type x = isa_values_[s];
    const size_type steps = (i - 1) - s * sample_rate_;
    for (size_type t = 0; t < steps; ++t) x = psi(x);
    if (counter) counter->psi += steps;
    return x;
}

std::vector<Symbol> Csa::display(size_type i, size_type len, StepCounter* counter) const {
    if (len == 0) return {};
    if (i < 1 || i > n_ || len > n_ - i + 1) throw std::out_of_range("display range out of bounds");
    std::vector<Symbol> out;
    out.reserve(len);
    size_type x = inverse(i, counter);
    for (size_type t = 0; t < len; ++t) {
        out.push_back(first_symbol(x));
        if (t + 1 < len) x = psi(x);
    }
    if (counter) counter->psi += len - 1;
    return out;
}

CsaSizes Csa::sizes() const {
    size_type bwt_bits = run_heads_.size_in_bits() + run_symbols_.size_in_bits();
    for (const auto& v : by_symbol_) bwt_bits += v.size_in_bits();
    return {bwt_bits, sa_marks_.size_in_bits() + sa_values_.size_in_bits(), isa_values_.size_in_bits()};
}

void Csa::serialize(ByteWriter& out) const {
    out.raw(kMagic);
    out.u32(kVersion);
    out.u64(n_);
    out.u64(alphabet_size());
    out.u64(sample_rate_);
    out.u32(block_);
    out.u64(runs_);
    out.u64_array(c_array_);
    std::vector<std::uint64_t> bytes;
    for (int b : rank_to_byte_) bytes.push_back(static_cast<std::uint64_t>(b + 1));
    out.u64_array(bytes);
    run_heads_.serialize(out);
    run_symbols_.serialize(out);
    for (const auto& v : by_symbol_) v.serialize(out);
    sa_marks_.serialize(out);
    sa_values_.serialize(out);
    isa_values_.serialize(out);
}

Csa Csa::deserialize(ByteReader& in) {
    if (in.raw(kMagic.size()) != kMagic) throw FormatError("not an index file (bad magic)");
    if (in.u32() != kVersion) throw FormatError("unsupported index format version");
    Csa csa;
    csa.n_ = in.u64();
    const size_type alphabet = in.u64();
    csa.sample_rate_ = in.u64();
    csa.block_ = in.u32();
    csa.runs_ = in.u64();
    csa.c_array_ = in.u64_array();
    auto bytes = in.u64_array();
    if (csa.n_ == 0 || csa.sample_rate_ == 0 || alphabet == 0 || csa.c_array_.size() != alphabet + 1 ||
        bytes.size() != alphabet || csa.c_array_.front() != 0 || csa.c_array_.back() != csa.n_)
        throw FormatError("inconsistent index header");
    for (auto b : bytes) csa.rank_to_byte_.push_back(static_cast<int>(b) - 1);
    csa.run_heads_ = BitVector::deserialize(in);
    csa.run_symbols_ = DeltaStream::deserialize(in);
    for (size_type c = 0; c < alphabet; ++c) csa.by_symbol_.push_back(RleBitVector::deserialize(in));
    csa.sa_marks_ = BitVector::deserialize(in);
    csa.sa_values_ = IntVector::deserialize(in);
    csa.isa_values_ = IntVector::deserialize(in);
    if (csa.run_heads_.size() != csa.n_ || csa.run_heads_.ones() != csa.runs_ ||
        csa.sa_marks_.size() != csa.n_ || csa.sa_values_.size() != csa.sa_marks_.ones() ||
        csa.isa_values_.size() != (csa.n_ - 1) / csa.sample_rate_ + 1)
        throw FormatError("inconsistent index sections");
    for (size_type c = 0; c < alphabet; ++c)
        if (csa.by_symbol_[c].size() != csa.n_ ||
            csa.by_symbol_[c].ones() != csa.c_array_[c + 1] - csa.c_array_[c])
            throw FormatError("inconsistent BWT symbol section");
    return csa;
}

}  // namespace slcp
