#pragma once

// On-disk files. An index file is the serialized CSA followed by a CRC-32
// trailer. A structure file holds one LCP structure and names its index by
// the index file's CRC-32 and length, so mismatched pairs are rejected:
//
//   "SLCS" | u32 version | u8 kind | u32 index crc | u64 n | payload | u32 crc

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "slcp/csa.hpp"
#include "slcp/plcprepr.hpp"
#include "slcp/sampledlcp.hpp"

namespace slcp {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> save_index(const Csa& csa);
/// Verifies the checksum; throws FormatError on any damage.
Csa load_index(std::span<const std::uint8_t> file);
/// CRC-32 trailer of an index file, used as its identity.
std::uint32_t index_identity(std::span<const std::uint8_t> file);

enum class StructureKind : std::uint8_t { plcp_plain = 1, plcp_rle = 2, plcp_sampled = 3, sampled_lcp = 4 };

std::string_view to_string(StructureKind kind);
/// Accepts plcp-plain, plcp-rle, plcp-sampled, sampled-lcp.
StructureKind parse_structure_kind(std::string_view name);

struct StructureFile {
    std::uint32_t index_crc = 0;
    size_type n = 0;
    std::variant<PlcpRepr, SampledLcp> structure;

    StructureKind kind() const;
};

std::vector<std::uint8_t> save_structure(const StructureFile& file);
StructureFile load_structure(std::span<const std::uint8_t> file);

}  // namespace slcp
