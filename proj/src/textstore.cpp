#include "slcp/textstore.hpp"

#include <algorithm>
#include <random>

namespace slcp {

Text::Text(std::vector<Symbol> symbols, std::vector<int> rank_to_byte)
    : symbols_(std::move(symbols)), rank_to_byte_(std::move(rank_to_byte)) {
    if (symbols_.empty() || rank_to_byte_.empty()) throw TextError("text must contain at least the terminator");
    if (symbols_.back() != kTerminator) throw TextError("text must end with the terminator", symbols_.size());
    const size_type sigma = rank_to_byte_.size() - 1;
    std::vector<bool> seen(sigma + 1, false);
    for (size_type i = 0; i + 1 < symbols_.size(); ++i) {
        const Symbol c = symbols_[i];
        if (c == kTerminator) throw TextError("terminator occurs before the end", i + 1);
        if (c > sigma) throw TextError("symbol rank outside alphabet", i + 1);
        seen[c] = true;
    }
    for (size_type c = 1; c <= sigma; ++c)
        if (!seen[c]) throw TextError("alphabet is not dense: rank " + std::to_string(c) + " missing");
    byte_to_rank_.fill(-1);
    for (size_type c = 1; c <= sigma; ++c) {
        const int b = rank_to_byte_[c];
        if (b == kNoByte) continue;
        if (b < 0 || b > 255 || byte_to_rank_[b] != -1) throw TextError("invalid alphabet map");
        byte_to_rank_[b] = static_cast<int>(c);
    }
}

std::string Text::to_bytes(bool include_terminator) const {
    std::string out;
    out.reserve(symbols_.size());
    for (size_type i = 0; i < symbols_.size(); ++i) {
        const Symbol c = symbols_[i];
        if (c == kTerminator) {
            if (include_terminator) out.push_back('$');
            continue;
        }
        const int b = rank_to_byte_[c];
        out.push_back(b == kNoByte ? '#' : static_cast<char>(b));
    }
    return out;
}

Text load_text(std::string_view bytes, std::uint8_t reserved) {
    if (bytes.empty()) throw TextError("empty input");
    std::array<bool, 256> present{};
    for (size_type i = 0; i < bytes.size(); ++i) {
        const auto b = static_cast<std::uint8_t>(bytes[i]);
        if (b == reserved) throw TextError("reserved terminator byte in input", i + 1);
        present[b] = true;
    }
    std::array<Symbol, 256> rank{};
    std::vector<int> rank_to_byte{Text::kNoByte};
    for (int b = 0; b < 256; ++b) {
        if (!present[b]) continue;
        rank[b] = static_cast<Symbol>(rank_to_byte.size());
        rank_to_byte.push_back(b);
    }
    std::vector<Symbol> symbols;
    symbols.reserve(bytes.size() + 1);
    for (char ch : bytes) symbols.push_back(rank[static_cast<std::uint8_t>(ch)]);
    symbols.push_back(kTerminator);
    return Text(std::move(symbols), std::move(rank_to_byte));
}

std::uint8_t generated_byte(size_type sigma, Symbol rank) {
    if (sigma <= 26) return static_cast<std::uint8_t>('a' + rank - 1);
    if (sigma > 255) throw std::invalid_argument("generated alphabets are limited to 255 symbols");
    return static_cast<std::uint8_t>(rank);
}

namespace {

std::vector<int> generated_alphabet(size_type sigma) {
    std::vector<int> map{Text::kNoByte};
    for (size_type c = 1; c <= sigma; ++c) map.push_back(generated_byte(sigma, static_cast<Symbol>(c)));
    return map;
}

// Drops ranks that never occur, keeping the order of the rest.
Text densify(std::vector<Symbol> symbols, size_type sigma) {
    std::vector<bool> seen(sigma + 1, false);
    for (auto c : symbols) seen[c] = true;
    std::vector<Symbol> remap(sigma + 1, 0);
    std::vector<int> map{Text::kNoByte};
    for (size_type c = 1; c <= sigma; ++c) {
        if (!seen[c]) continue;
        remap[c] = static_cast<Symbol>(map.size());
        map.push_back(generated_byte(sigma, static_cast<Symbol>(c)));
    }
    for (auto& c : symbols) c = remap[c];
    return Text(std::move(symbols), std::move(map));
}

}  // namespace

Text generate_de_bruijn(size_type sigma, size_type order) {
    if (sigma < 2) throw std::invalid_argument("de Bruijn sequences need sigma >= 2");
    if (order < 1) throw std::invalid_argument("de Bruijn order must be >= 1");
    if (sigma > 255) throw std::invalid_argument("de Bruijn alphabet too large");
    constexpr size_type kMaxLength = size_type{1} << 31;
    size_type total = 1;
    for (size_type t = 0; t < order; ++t) {
        if (total > kMaxLength / sigma) throw std::overflow_error("sigma^k exceeds the size budget");
        total *= sigma;
    }
    // Fredricksen-Kessler-Maiorana: concatenate the Lyndon words whose length
    // divides `order`, in lexicographic order.
    std::vector<Symbol> seq;
    seq.reserve(total + 1);
    std::vector<size_type> a(order + 1, 0);
    size_type i = 1;
    while (true) {
        if (order % i == 0)
            for (size_type j = 1; j <= i; ++j) seq.push_back(static_cast<Symbol>(a[j] + 1));
        // next pre-necklace
        i = order;
        while (i > 0 && a[i] == sigma - 1) --i;
        if (i == 0) break;
        ++a[i];
        for (size_type j = i + 1; j <= order; ++j) a[j] = a[j - i];
    }
    seq.push_back(kTerminator);
    return Text(std::move(seq), generated_alphabet(sigma));
}

SentinelConcat generate_concat(const Text& base, size_type copies) {
    if (copies < 2) throw std::invalid_argument("concatenation needs at least 2 copies");
    const size_type content = base.size() - 1;
    std::vector<Symbol> seq;
    seq.reserve(copies * base.size() + 1);
    for (size_type r = 0; r < copies; ++r) {
        for (size_type i = 1; i <= content; ++i) seq.push_back(base[i] + 1);
        seq.push_back(1);
    }
    seq.push_back(kTerminator);
    std::vector<int> map{Text::kNoByte, Text::kNoByte};
    for (auto b : base.rank_to_byte().subspan(1)) map.push_back(b);
    return SentinelConcat{base, copies, 1, Text(std::move(seq), std::move(map))};
}

Text generate_random(size_type sigma, size_type length, std::uint64_t seed) {
    if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> dist(1, static_cast<Symbol>(sigma));
    std::vector<Symbol> seq(length + 1);
    for (size_type i = 0; i < length; ++i) seq[i] = dist(rng);
    seq[length] = kTerminator;
    return densify(std::move(seq), sigma);
}

Text generate_repetitive(size_type sigma, size_type base_length, size_type copies,
                         double mutation_rate, std::uint64_t seed) {
    if (sigma < 1 || base_length < 1 || copies < 1) throw std::invalid_argument("invalid repetitive corpus parameters");
    if (mutation_rate < 0.0 || mutation_rate > 1.0) throw std::invalid_argument("mutation rate must be in [0, 1]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Symbol> dist(1, static_cast<Symbol>(sigma));
    std::bernoulli_distribution mutate(mutation_rate);
    std::vector<Symbol> base(base_length);
    for (auto& c : base) c = dist(rng);
    std::vector<Symbol> seq;
    seq.reserve(base_length * copies + 1);
    for (size_type r = 0; r < copies; ++r)
        for (auto c : base) seq.push_back(r > 0 && mutate(rng) ? dist(rng) : c);
    seq.push_back(kTerminator);
    return densify(std::move(seq), sigma);
}

}  // namespace slcp
