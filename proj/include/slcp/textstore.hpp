#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slcp/common.hpp"

namespace slcp {

/// Raised when a byte sequence cannot become a Text.
class TextError : public std::invalid_argument {
public:
    TextError(const std::string& what, size_type position = 0)
        : std::invalid_argument(what), position_(position) {}
    /// 1-based offending byte position (0 when not position-specific).
    size_type position() const { return position_; }

private:
    size_type position_;
};

/// A terminator-completed symbol sequence over a dense alphabet.
///
/// Ranks 1..sigma are regular symbols, each occurring at least once; rank 0 is
/// the terminator and occurs exactly once, at position n. Ranks may lack an
/// external byte (the terminator always does, concatenation markers too).
class Text {
public:
    static constexpr int kNoByte = -1;

    Text() = default;

    /// Validates the invariants; `rank_to_byte` has sigma + 1 entries.
    Text(std::vector<Symbol> symbols, std::vector<int> rank_to_byte);

    size_type size() const { return symbols_.size(); }
    size_type sigma() const { return rank_to_byte_.size() - 1; }
    /// sigma + 1, counting the terminator.
    size_type alphabet_size() const { return rank_to_byte_.size(); }

    /// 1-based symbol access.
    Symbol operator[](size_type i) const { return symbols_[i - 1]; }
    std::span<const Symbol> symbols() const { return symbols_; }

    std::span<const int> rank_to_byte() const { return rank_to_byte_; }
    /// Rank of an external byte, or -1 when the byte does not occur.
    int rank_of(std::uint8_t byte) const { return byte_to_rank_[byte]; }

    /// Symbols mapped back to bytes. Byte-less ranks render as '#', the
    /// terminator (when included) as '$'.
    std::string to_bytes(bool include_terminator = false) const;

    bool operator==(const Text& other) const { return symbols_ == other.symbols_ && rank_to_byte_ == other.rank_to_byte_; }

private:
    std::vector<Symbol> symbols_;
    std::vector<int> rank_to_byte_;
    std::array<int, 256> byte_to_rank_{};
};

/// r copies of a base text's content, each followed by the same marker
/// symbol, closed by a single terminator:
///     base·#·base·# ··· base·# $      with  $ < # < every regular symbol.
/// Every suffix class {copy 1 at offset i, ..., copy r at offset i} is
/// contiguous in the suffix array; the last copy sorts first.
struct SentinelConcat {
    Text base;
    size_type copies = 0;
    Symbol marker_rank = 1;
    /// The concatenation itself, a valid Text of length copies * base.size() + 1.
    Text text;

    /// Per-copy length (base content plus its marker) = base.size().
    size_type copy_length() const { return base.size(); }
};

/// Order-preserving dense mapping of the bytes, terminator appended.
Text load_text(std::string_view bytes, std::uint8_t reserved = 0x00);

/// Cyclic order-k de Bruijn sequence over sigma symbols (Lyndon-word
/// concatenation, lexicographically least), written once without wraparound,
/// terminator appended. Regular ranks 1..sigma map to bytes 'a'.. when sigma
/// <= 26, else to 1..sigma.
Text generate_de_bruijn(size_type sigma, size_type order);

SentinelConcat generate_concat(const Text& base, size_type copies);

/// Uniform i.i.d. symbols from a seeded mt19937_64. Regular symbols that never
/// occur are dropped from the alphabet so the result stays dense.
Text generate_random(size_type sigma, size_type length, std::uint64_t seed);

/// `copies` point-mutated copies of a random base (each symbol replaced with
/// probability `mutation_rate`); the repetitive benchmark corpus.
Text generate_repetitive(size_type sigma, size_type base_length, size_type copies,
                         double mutation_rate, std::uint64_t seed);

/// Byte used for rank r of a generated alphabet of size sigma.
std::uint8_t generated_byte(size_type sigma, Symbol rank);

}  // namespace slcp
