#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcp/lcpbuild.hpp"
#include "slcp/oracle.hpp"
#include "slcp/plcprepr.hpp"
#include "slcp/sampledlcp.hpp"
#include "support.hpp"

using namespace slcp;

namespace {

SampledLcp round_trip(const SampledLcp& s) {
    ByteWriter w;
    s.serialize(w);
    const auto bytes = w.take();
    ByteReader in(bytes);
    SampledLcp back = SampledLcp::deserialize(in);
    CHECK(in.remaining() == 0);
    return back;
}

}  // namespace

TEST_CASE("banana with strictly minimal samples only") {
    const Csa csa = Csa::build(test::banana(), 2);
    const SampledLcp s = build_sampled_lcp_from_csa(csa, kUnbounded);
    CHECK(s.minimal_samples() == 4);
    CHECK(s.extra_samples() == 0);
    CHECK(s.samples() == 4);
    CHECK(s.d_prime() == kUnbounded);
    for (size_type x : {1, 2, 5, 6}) CHECK(s.is_sampled(x));
    for (size_type x : {3, 4, 7}) CHECK_FALSE(s.is_sampled(x));

    StepCounter c;
    CHECK(s.access(csa, 3, &c) == 1);
    CHECK(c.psi == 1);
    StepCounter c5;
    CHECK(s.access(csa, 5, &c5) == 0);
    CHECK(c5.psi == 0);
    const std::vector<size_type> lcp{0, 0, 0, 1, 3, 0, 0, 2};
    for (size_type x = 1; x <= 7; ++x) CHECK(s.access(csa, x) == lcp[x]);
    // Text positions 2, 3, 4 are unsampled; a walk from 2 reaches 5 in 3 steps.
    CHECK(max_walk_length(s, csa) == 3);
}

TEST_CASE("every position sampled") {
    const Csa csa = Csa::build(test::banana(), 2);
    const SampledLcp s = build_sampled_lcp_from_csa(csa, 1);
    const std::vector<size_type> lcp{0, 0, 0, 1, 3, 0, 0, 2};
    for (size_type x = 1; x <= 7; ++x) {
        StepCounter c;
        CHECK(s.access(csa, x, &c) == lcp[x]);
        CHECK(c.psi == 0);
    }
    CHECK(max_walk_length(s, csa) == 0);
}

TEST_CASE("unary text") {
    const Csa csa = Csa::build(load_text("aaaa"), 2);
    const SampledLcp s = build_sampled_lcp_from_csa(csa, kUnbounded);
    CHECK(s.samples() == 2);
    CHECK(max_walk_length(s, csa) == 3);
    const std::vector<size_type> lcp{0, 0, 0, 1, 2, 3};
    for (size_type x = 1; x <= 5; ++x) CHECK(s.access(csa, x) == lcp[x]);
}

TEST_CASE("repetitive text, every spacing and mark vector") {
    const Text t = generate_concat(generate_random(4, 2000, 3), 8).text;
    const RefArrays ref = naive_reference(t);
    const Csa csa = Csa::build(t, 16);
    const StrictSamples pass1 = collect_strictly_minimal(csa);
    for (size_type dp : {1, 4, 64}) {
        for (auto marks : {BitVectorKind::gap, BitVectorKind::plain, BitVectorKind::rle}) {
            CAPTURE(dp);
            CAPTURE(to_string(marks));
            const SampledLcp s = build_sampled_lcp(csa, pass1, dp, {marks, kDefaultBlock});
            CHECK(s.marks().kind() == marks);
            bool ok = true;
            size_type longest = 0;
            for (size_type x = 1; x <= t.size(); ++x) {
                StepCounter c;
                ok &= s.access(csa, x, &c) == ref.lcp[x];
                longest = std::max(longest, c.psi);
            }
            CHECK(ok);
            CHECK(longest < dp);
            CHECK(max_walk_length(s, csa) < dp);
            const SampledLcpSize sz = s.size_report();
            CHECK(sz.total_bits == sz.marks_bits + sz.values_bits + sz.header_bits);
            const SampledLcp back = round_trip(s);
            for (size_type x = 1; x <= t.size(); x += 31) CHECK(back.access(csa, x) == ref.lcp[x]);
        }
    }
    // Fewer than the 2 bits per symbol of the bit-vector PLCP.
    CHECK(build_sampled_lcp(csa, pass1, kUnbounded).size_report().bits_per_symbol < 2.0);
}

TEST_CASE("sizes shrink as the spacing grows") {
    const Text t = generate_repetitive(4, 5000, 20, 0.01, 5);
    const Csa csa = Csa::build(t, 16);
    const StrictSamples pass1 = collect_strictly_minimal(csa);
    size_type last = ~size_type{0};
    for (size_type dp : {1, 4, 16, 64, 256}) {
        const size_type bits = build_sampled_lcp(csa, pass1, dp).size_report().total_bits;
        CHECK(bits <= last);
        last = bits;
    }
    CHECK(build_sampled_lcp(csa, pass1, kUnbounded).size_report().total_bits <= last);
}
