#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slcp/common.hpp"

namespace slcp {

/// Little-endian byte sink used by every on-disk section.
class ByteWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void raw(std::string_view s);
    void words(std::span<const std::uint64_t> w);
    void u64_array(std::span<const std::uint64_t> values);

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

/// Bounds-checked reader over a byte buffer. Throws FormatError on truncation.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::string raw(std::size_t len);
    std::vector<std::uint64_t> words(std::size_t count);
    std::vector<std::uint64_t> u64_array();

    void expect_tag(std::string_view tag);
    std::size_t remaining() const { return data_.size() - pos_; }
    std::size_t position() const { return pos_; }

private:
    void need(std::size_t len) const;

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

/// CRC-32 (zlib polynomial) of a byte range.
std::uint32_t checksum(std::span<const std::uint8_t> data);

/// Appends the CRC-32 trailer to a finished file body.
std::vector<std::uint8_t> seal(std::vector<std::uint8_t> body);

/// Verifies and strips the CRC-32 trailer. Throws FormatError on mismatch.
std::span<const std::uint8_t> unseal(std::span<const std::uint8_t> file);

}  // namespace slcp
