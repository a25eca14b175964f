#include "slcp/store.hpp"

#include <fstream>
#include <iterator>

namespace slcp {

namespace {
constexpr std::string_view kStructureMagic = "SLCS";
constexpr std::uint32_t kStructureVersion = 1;
}  // namespace

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::uint8_t> save_index(const Csa& csa) {
    ByteWriter w;
    csa.serialize(w);
    return seal(w.take());
}

Csa load_index(std::span<const std::uint8_t> file) {
    ByteReader r(unseal(file));
    Csa csa = Csa::deserialize(r);
    if (r.remaining() != 0) throw FormatError("trailing bytes after index");
    return csa;
}

std::uint32_t index_identity(std::span<const std::uint8_t> file) {
    if (file.size() < 4) throw FormatError("file too short");
    return checksum(file.first(file.size() - 4));
}

std::string_view to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::plcp_plain: return "plcp-plain";
        case StructureKind::plcp_rle: return "plcp-rle";
        case StructureKind::plcp_sampled: return "plcp-sampled";
        case StructureKind::sampled_lcp: return "sampled-lcp";
    }
    return "unknown";
}

StructureKind parse_structure_kind(std::string_view name) {
    for (auto k : {StructureKind::plcp_plain, StructureKind::plcp_rle, StructureKind::plcp_sampled,
                   StructureKind::sampled_lcp})
        if (to_string(k) == name) return k;
    throw std::invalid_argument("unknown representation '" + std::string(name) + "'");
}

StructureKind StructureFile::kind() const {
    if (std::holds_alternative<SampledLcp>(structure)) return StructureKind::sampled_lcp;
    switch (std::get<PlcpRepr>(structure).kind()) {
        case PlcpKind::plain: return StructureKind::plcp_plain;
        case PlcpKind::rle: return StructureKind::plcp_rle;
        case PlcpKind::sampled: return StructureKind::plcp_sampled;
    }
    return StructureKind::plcp_plain;
}

std::vector<std::uint8_t> save_structure(const StructureFile& file) {
    ByteWriter w;
    w.raw(kStructureMagic);
    w.u32(kStructureVersion);
    w.u8(static_cast<std::uint8_t>(file.kind()));
    w.u32(file.index_crc);
    w.u64(file.n);
    std::visit([&w](const auto& s) { s.serialize(w); }, file.structure);
    return seal(w.take());
}

StructureFile load_structure(std::span<const std::uint8_t> bytes) {
    ByteReader r(unseal(bytes));
    if (r.raw(kStructureMagic.size()) != kStructureMagic) throw FormatError("not a structure file (bad magic)");
    if (r.u32() != kStructureVersion) throw FormatError("unsupported structure format version");
    const auto kind = static_cast<StructureKind>(r.u8());
    StructureFile f;
    f.index_crc = r.u32();
    f.n = r.u64();
    if (kind == StructureKind::sampled_lcp) {
        f.structure = SampledLcp::deserialize(r);
    } else if (kind == StructureKind::plcp_plain || kind == StructureKind::plcp_rle ||
               kind == StructureKind::plcp_sampled) {
        f.structure = PlcpRepr::deserialize(r);
    } else {
        throw FormatError("unknown structure kind");
    }
    if (r.remaining() != 0) throw FormatError("trailing bytes after structure");
    if (f.kind() != kind) throw FormatError("structure kind does not match its payload");
    const size_type n = std::visit([](const auto& s) { return s.size(); }, f.structure);
    if (n != f.n) throw FormatError("structure length does not match its header");
    return f;
}

}  // namespace slcp
