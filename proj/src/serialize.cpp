#include "slcp/serialize.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstring>

namespace slcp {

void ByteWriter::u32(std::uint32_t v) {
    for (int k = 0; k < 4; ++k) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void ByteWriter::u64(std::uint64_t v) {
    for (int k = 0; k < 8; ++k) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void ByteWriter::raw(std::string_view s) { bytes_.insert(bytes_.end(), s.begin(), s.end()); }

void ByteWriter::words(std::span<const std::uint64_t> w) {
    for (auto v : w) u64(v);
}

void ByteWriter::u64_array(std::span<const std::uint64_t> values) {
    u64(values.size());
    words(values);
}

void ByteReader::need(std::size_t len) const {
    if (len > data_.size() - pos_) throw FormatError("truncated input");
}

std::uint8_t ByteReader::u8() {
    need(1);
    return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
    need(4);
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= std::uint32_t{data_[pos_++]} << (8 * k);
    return v;
}

std::uint64_t ByteReader::u64() {
    need(8);
    std::uint64_t v = 0;
    for (int k = 0; k < 8; ++k) v |= std::uint64_t{data_[pos_++]} << (8 * k);
    return v;
}

std::string ByteReader::raw(std::size_t len) {
    need(len);
    std::string s(reinterpret_cast<const char*>(data_.data() + pos_), len);
    pos_ += len;
    return s;
}

std::vector<std::uint64_t> ByteReader::words(std::size_t count) {
    if (count > remaining() / 8) throw FormatError("truncated word array");
    std::vector<std::uint64_t> w(count);
    for (auto& v : w) v = u64();
    return w;
}

std::vector<std::uint64_t> ByteReader::u64_array() { return words(u64()); }

void ByteReader::expect_tag(std::string_view tag) {
    if (raw(tag.size()) != tag) throw FormatError("bad section tag, expected " + std::string(tag));
}

std::uint32_t checksum(std::span<const std::uint8_t> data) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed in chunks.
    std::size_t off = 0;
    while (off < data.size()) {
        auto len = static_cast<uInt>(std::min<std::size_t>(data.size() - off, 1u << 30));
        crc = crc32(crc, data.data() + off, len);
        off += len;
    }
    return static_cast<std::uint32_t>(crc);
}

std::vector<std::uint8_t> seal(std::vector<std::uint8_t> body) {
    auto crc = checksum(body);
    for (int k = 0; k < 4; ++k) body.push_back(static_cast<std::uint8_t>(crc >> (8 * k)));
    return body;
}

std::span<const std::uint8_t> unseal(std::span<const std::uint8_t> file) {
    if (file.size() < 4) throw FormatError("file too short for checksum");
    auto body = file.first(file.size() - 4);
    std::uint32_t stored = 0;
    for (int k = 0; k < 4; ++k) stored |= std::uint32_t{file[file.size() - 4 + k]} << (8 * k);
    if (checksum(body) != stored) throw FormatError("checksum mismatch");
    return body;
}

}  // namespace slcp
