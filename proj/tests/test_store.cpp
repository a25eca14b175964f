#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcp/lcpbuild.hpp"
#include "slcp/store.hpp"
#include "support.hpp"

using namespace slcp;

namespace {

const std::filesystem::path kGolden = SLCP_GOLDEN_DIR;

std::vector<std::uint8_t> golden(const char* name) { return read_file(kGolden / name); }

}  // namespace

TEST_CASE("banana index matches the pinned file") {
    const auto pinned = golden("banana.idx");
    CHECK(pinned.size() == 1096);
    CHECK(index_identity(pinned) == 0x284ad6f3u);
    const Csa csa = Csa::build(test::banana(), 2);
    CHECK(save_index(csa) == pinned);

    const Csa loaded = load_index(pinned);
    CHECK(save_index(loaded) == pinned);
    CHECK(loaded.runs() == 5);
    const std::vector<size_type> sa{0, 7, 6, 4, 2, 1, 5, 3};
    for (size_type x = 1; x <= 7; ++x) CHECK(loaded.locate(x) == sa[x]);
}

TEST_CASE("banana structures match the pinned files") {
    const auto index = golden("banana.idx");
    const Csa csa = load_index(index);

    StructureFile s;
    s.index_crc = index_identity(index);
    s.n = 7;
    s.structure = build_sampled_lcp_from_csa(csa, 4);
    CHECK(save_structure(s) == golden("banana.sampled-lcp"));

    StructureFile p;
    p.index_crc = index_identity(index);
    p.n = 7;
    p.structure = build_plcp_repr(csa, PlcpKind::plain);
    CHECK(save_structure(p) == golden("banana.plcp-plain"));

    const std::vector<size_type> lcp{0, 0, 0, 1, 3, 0, 0, 2};
    const StructureFile ls = load_structure(golden("banana.sampled-lcp"));
    CHECK(ls.kind() == StructureKind::sampled_lcp);
    CHECK(ls.index_crc == 0x284ad6f3u);
    CHECK(save_structure(ls) == golden("banana.sampled-lcp"));
    const auto& slcp = std::get<SampledLcp>(ls.structure);
    CHECK(slcp.minimal_samples() == 4);
    for (size_type x = 1; x <= 7; ++x) CHECK(slcp.access(csa, x) == lcp[x]);

    const StructureFile lp = load_structure(golden("banana.plcp-plain"));
    CHECK(lp.kind() == StructureKind::plcp_plain);
    for (size_type x = 1; x <= 7; ++x) CHECK(lcp_via_plcp(csa, std::get<PlcpRepr>(lp.structure), x) == lcp[x]);
}

TEST_CASE("every structure kind survives a file round trip") {
    const Text t = generate_repetitive(3, 800, 6, 0.02, 9);
    const Csa csa = Csa::build(t, 8);
    const auto index = save_index(csa);
    std::vector<StructureFile> files;
    for (auto kind : {PlcpKind::plain, PlcpKind::rle, PlcpKind::sampled})
        files.push_back({index_identity(index), t.size(), build_plcp_repr(csa, kind, 8)});
    for (auto marks : {BitVectorKind::plain, BitVectorKind::gap, BitVectorKind::rle})
        files.push_back({index_identity(index), t.size(), build_sampled_lcp_from_csa(csa, 16, {marks, 8})});
    for (const auto& f : files) {
        const auto bytes = save_structure(f);
        const StructureFile back = load_structure(bytes);
        CHECK(back.kind() == f.kind());
        CHECK(save_structure(back) == bytes);
    }
}

TEST_CASE("damaged files are rejected") {
    auto index = golden("banana.idx");
    index[100] ^= 0x10;
    CHECK_THROWS_AS(load_index(index), FormatError);
    auto truncated = golden("banana.idx");
    truncated.resize(500);
    CHECK_THROWS_AS(load_index(truncated), FormatError);
    CHECK_THROWS_AS(load_index(std::vector<std::uint8_t>{1, 2}), FormatError);

    auto structure = golden("banana.sampled-lcp");
    structure[30] ^= 0x01;
    CHECK_THROWS_AS(load_structure(structure), FormatError);
    CHECK_THROWS_AS(load_structure(golden("banana.idx")), FormatError);
    CHECK_THROWS_AS(load_index(golden("banana.sampled-lcp")), FormatError);
}

TEST_CASE("structure kind names") {
    CHECK(parse_structure_kind("plcp-plain") == StructureKind::plcp_plain);
    CHECK(parse_structure_kind("plcp-rle") == StructureKind::plcp_rle);
    CHECK(parse_structure_kind("plcp-sampled") == StructureKind::plcp_sampled);
    CHECK(parse_structure_kind("sampled-lcp") == StructureKind::sampled_lcp);
    CHECK(to_string(StructureKind::sampled_lcp) == "sampled-lcp");
    CHECK_THROWS_AS(parse_structure_kind("lcp"), std::invalid_argument);
}

TEST_CASE("file errors") {
    CHECK_THROWS_AS(read_file("/nonexistent/slcp/file"), IoError);
    const std::vector<std::uint8_t> bytes{1, 2, 3};
    CHECK_THROWS_AS(write_file("/nonexistent/slcp/file", bytes), IoError);
    const auto dir = test::scratch_dir("store");
    write_file(dir / "x", bytes);
    CHECK(read_file(dir / "x") == bytes);
}
