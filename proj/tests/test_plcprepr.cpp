#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcp/oracle.hpp"
#include "slcp/plcprepr.hpp"
#include "support.hpp"

using namespace slcp;

namespace {

std::vector<size_type> ones_of(const BitPlcp& p) {
    std::vector<size_type> out;
    for (size_type k = 1; k <= p.bits().ones(); ++k) out.push_back(p.bits().select1(k));
    return out;
}

PlcpRepr round_trip(const PlcpRepr& r) {
    ByteWriter w;
    r.serialize(w);
    const auto bytes = w.take();
    ByteReader in(bytes);
    PlcpRepr back = PlcpRepr::deserialize(in);
    CHECK(in.remaining() == 0);
    return back;
}

}  // namespace

TEST_CASE("bit-vector PLCP layout") {
    const std::vector<size_type> banana{0, 3, 2, 1, 0, 0, 0};
    for (auto kind : {BitVectorKind::plain, BitVectorKind::rle}) {
        const BitPlcp p = build_bit_plcp(banana, kind);
        CHECK(p.bits().size() == 14);
        CHECK(ones_of(p) == std::vector<size_type>{2, 7, 8, 9, 10, 12, 14});
        CHECK(p.bits().select1(3) - 6 == 2);
        CHECK(p.access(2) == 3);
        for (size_type i = 1; i <= 7; ++i) CHECK(p.access(i) == banana[i - 1]);
    }
    const std::vector<size_type> unary{3, 2, 1, 0, 0};
    CHECK(ones_of(build_bit_plcp(unary, BitVectorKind::plain)) == std::vector<size_type>{5, 6, 7, 8, 10});
    const std::vector<size_type> single{0};
    CHECK(ones_of(build_bit_plcp(single, BitVectorKind::plain)) == std::vector<size_type>{2});
}

TEST_CASE("bit-vector PLCP builder rejects impossible sequences") {
    BitPlcpBuilder b(BitVectorKind::plain, 4);
    b.push(3);
    CHECK_THROWS_AS(b.push(1), InvariantViolation);
}

TEST_CASE("streamed representations from the index") {
    const Csa csa = Csa::build(test::banana(), 2);
    const std::vector<size_type> plcp{0, 0, 3, 2, 1, 0, 0, 0};
    const std::vector<size_type> lcp{0, 0, 0, 1, 3, 0, 0, 2};
    for (auto kind : {PlcpKind::plain, PlcpKind::rle, PlcpKind::sampled}) {
        for (size_type q : {1, 2, 4, 7}) {
            if (kind != PlcpKind::sampled && q > 1) continue;
            CAPTURE(to_string(kind));
            CAPTURE(q);
            const PlcpRepr r = build_plcp_repr(csa, kind, q);
            CHECK(r.kind() == kind);
            CHECK(r.size() == 7);
            const PlcpRepr back = round_trip(r);
            for (size_type i = 1; i <= 7; ++i) {
                CHECK(plcp_access(r, csa, i) == plcp[i]);
                CHECK(back.access(csa, i) == plcp[i]);
            }
            for (size_type x = 1; x <= 7; ++x) CHECK(lcp_via_plcp(csa, r, x) == lcp[x]);
        }
    }
    CHECK(build_plcp_repr(csa, PlcpKind::plain).size_in_bits() >= 14);
    CHECK(to_string(PlcpKind::rle) == "plcp-rle");
}

TEST_CASE("sampled PLCP with q = 2 on banana") {
    const Csa csa = Csa::build(test::banana(), 2);
    const PlcpRepr r = build_plcp_repr(csa, PlcpKind::sampled, 2);
    const SampledPlcp* s = r.sampled();
    REQUIRE(s != nullptr);
    CHECK(s->samples() == 4);
    CHECK(s->sample(0) == 0);
    CHECK(s->sample(1) == 2);
    CHECK(s->sample(2) == 0);
    CHECK(s->sample(3) == 0);
    CHECK(r.parameter() == 2);
    // Between PLCP[3] = 2 and PLCP[5] = 0 the bounds meet: no comparisons.
    StepCounter c;
    CHECK(s->access(csa, 4, &c) == 1);
    CHECK(s->comparison_budget(4) == 0);
    CHECK(c.comparisons == 0);
    CHECK(s->comparison_budget(2) == 3);
    CHECK(s->access(csa, 1) == 0);
    CHECK(build_plcp_repr(csa, PlcpKind::plain).sampled() == nullptr);
}

TEST_CASE("random text against the reference") {
    const Text t = generate_random(4, 10000, 1);
    const RefArrays ref = naive_reference(t);
    const Csa csa = Csa::build(t, 8);
    for (auto kind : {PlcpKind::plain, PlcpKind::rle}) {
        const PlcpRepr r = build_plcp_repr(csa, kind);
        bool ok = true;
        for (size_type i = 1; i <= t.size(); ++i) ok &= r.access(csa, i) == ref.plcp[i];
        for (size_type x = 1; x <= t.size(); x += 13) ok &= lcp_via_plcp(csa, r, x) == ref.lcp[x];
        CHECK(ok);
    }
    const PlcpRepr q16 = build_plcp_repr(csa, PlcpKind::sampled, 16);
    bool ok = true;
    size_type comparisons = 0;
    for (size_type i = 1; i <= t.size(); ++i) {
        StepCounter c;
        ok &= q16.access(csa, i, &c) == ref.plcp[i];
        ok &= c.comparisons <= q16.sampled()->comparison_budget(i) + 1;
        comparisons += c.comparisons;
    }
    CHECK(ok);
    CHECK(static_cast<double>(comparisons) / static_cast<double>(t.size()) <= 16.0);
}

TEST_CASE("run-length layout is smaller on repetitive text") {
    const Text t = generate_concat(generate_random(4, 2000, 11), 8).text;
    const Csa csa = Csa::build(t, 16);
    const size_type plain = build_plcp_repr(csa, PlcpKind::plain).size_in_bits();
    const size_type rle = build_plcp_repr(csa, PlcpKind::rle).size_in_bits();
    CHECK(rle < plain);
}
