#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcp/lcpbuild.hpp"
#include "slcp/oracle.hpp"
#include "slcp/suffixcore.hpp"
#include "support.hpp"

using namespace slcp;
using test::one_based;

namespace {

std::vector<size_type> scan_plcp(const Csa& csa, PlcpBuildStats* stats = nullptr) {
    std::vector<size_type> out{0};
    const PlcpBuildStats s = build_plcp_from_csa(csa, [&](size_type i, size_type v) {
        CHECK(i == out.size());
        out.push_back(v);
    });
    if (stats) *stats = s;
    return out;
}

}  // namespace

TEST_CASE("banana PLCP stream") {
    const Csa csa = Csa::build(test::banana(), 2);
    PlcpBuildStats stats;
    CHECK(scan_plcp(csa, &stats) == one_based({0, 3, 2, 1, 0, 0, 0}));
    CHECK(stats.irreducible_count == 5);
    CHECK(stats.irreducible_count == csa.runs());
    CHECK(stats.irreducible_sum == 3);
    CHECK(stats.psi_evals == 15);

    PlcpScanner scan(csa);
    std::vector<bool> irreducible{false};
    std::vector<size_type> inverse{0};
    while (scan.next()) {
        irreducible.push_back(scan.irreducible());
        inverse.push_back(scan.sa_position());
    }
    CHECK(irreducible == std::vector<bool>{false, true, true, false, false, true, true, true});
    CHECK(inverse == one_based({5, 4, 7, 3, 6, 2, 1}));
}

TEST_CASE("unary and de Bruijn texts") {
    const Csa u = Csa::build(load_text("aaaa"), 2);
    PlcpBuildStats s;
    CHECK(scan_plcp(u, &s) == one_based({3, 2, 1, 0, 0}));
    CHECK(s.irreducible_count == 2);

    const Text db = generate_de_bruijn(2, 7);
    const Csa csa = Csa::build(db, 8);
    const SuffixArrayData d = build_suffix_array(db);
    CHECK(scan_plcp(csa, &s) == test::widen(linear_plcp(db, d.sa, d.isa)));
    CHECK(s.irreducible_sum == 579);
    CHECK(s.psi_evals <= 3 * (s.irreducible_sum + db.size()));
}

TEST_CASE("random texts against the reference") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Text t = generate_random(1 + seed % 6, 1 + (seed * 131) % 3000, seed);
        const RefArrays ref = naive_reference(t);
        const Csa csa = Csa::build(t, 1 + seed % 9);
        PlcpBuildStats s;
        CHECK(scan_plcp(csa, &s) == ref.plcp);
        CHECK(s.irreducible_count == ref.runs());
        CHECK(s.psi_evals <= 3 * (s.irreducible_sum + t.size()));
    }
}

TEST_CASE("lcp of SA neighbours by paired Psi steps") {
    const Csa csa = Csa::build(test::banana(), 2);
    CHECK(lcp_pair_via_psi(csa, 4) == 3);
    CHECK(lcp_pair_via_psi(csa, 2) == 0);
    CHECK(lcp_pair_via_psi(csa, 7) == 2);
    const std::vector<size_type> lcp{0, 0, 0, 1, 3, 0, 0, 2};
    for (size_type b = 2; b <= 7; ++b) CHECK(lcp_pair_via_psi(csa, b) == lcp[b]);
}

TEST_CASE("value classes of banana") {
    const Csa csa = Csa::build(test::banana(), 2);
    const MinimalClassification m = classify_minimal_from_csa(csa);
    CHECK(m.plcp == one_based({0, 3, 2, 1, 0, 0, 0}));
    CHECK(m.maximal == std::vector<bool>{false, true, true, false, false, true, true, true});
    CHECK(m.minimal == std::vector<bool>{false, true, false, false, true, true, true, true});
    CHECK(m.strictly_minimal == std::vector<bool>{false, true, false, false, false, true, true, true});
    CHECK(m.maximal_values == ValueSet{5, 3});
    CHECK(m.minimal_values == ValueSet{5, 1});
    CHECK(m.strictly_minimal_values == ValueSet{4, 0});
    CHECK(m.minimal_values.sum == m.maximal_values.sum - (csa.size() - csa.runs()));

    const ValueSummary s = summarize_values(csa);
    CHECK(s.runs == 5);
    CHECK(s.irreducible == ValueSet{5, 3});
    CHECK(s.minimal == ValueSet{5, 1});
    CHECK(s.strictly_minimal == ValueSet{4, 0});

    CHECK(minimal_sa_positions(csa) == std::vector<size_type>{1, 2, 3, 5, 6});

    const Csa u = Csa::build(load_text("aaaa"), 2);
    CHECK(summarize_values(u).minimal.count == 2);
}

TEST_CASE("value-class identities on random and structured texts") {
    std::vector<Text> texts{generate_de_bruijn(2, 8), generate_de_bruijn(3, 4),
                            generate_concat(generate_random(4, 300, 5), 4).text};
    for (std::uint64_t seed = 0; seed < 10; ++seed) texts.push_back(generate_random(2 + seed % 4, 2000, seed));
    for (const Text& t : texts) {
        const Csa csa = Csa::build(t, 4);
        const ValueSummary s = summarize_values(csa);
        CHECK(s.minimal.count == csa.runs());
        CHECK(s.irreducible.count == csa.runs());
        CHECK(s.minimal.sum == s.irreducible.sum - (t.size() - csa.runs()));
        // minimal positions in SA order are the inverse images of the minimal text positions
        const MinimalClassification m = classify_minimal_from_csa(csa);
        std::vector<size_type> expect;
        for (size_type i = 1; i <= t.size(); ++i)
            if (m.minimal[i]) expect.push_back(csa.inverse(i));
        std::sort(expect.begin(), expect.end());
        CHECK(minimal_sa_positions(csa) == expect);
    }
}

TEST_CASE("strictly minimal samples") {
    const Csa csa = Csa::build(test::banana(), 2);
    const StrictSamples p = collect_strictly_minimal(csa);
    CHECK(p.n == 7);
    REQUIRE(p.samples.size() == 4);
    const std::vector<size_type> text_pos{1, 5, 6, 7};
    const std::vector<size_type> sa_pos{5, 6, 2, 1};
    for (size_type k = 0; k < 4; ++k) {
        CHECK(p.samples[k].text_pos == text_pos[k]);
        CHECK(p.samples[k].sa_pos == sa_pos[k]);
        CHECK(p.samples[k].value == 0);
    }
}

TEST_CASE("extra samples bound the walk") {
    const Csa csa = Csa::build(test::banana(), 2);
    struct Case {
        size_type d_prime;
        size_type extra;
        const char* marks;
    };
    for (const Case& c : {Case{1, 3, "1111111"}, Case{2, 1, "1100111"}, Case{3, 1, "1110110"},
                          Case{4, 0, "1100110"}, Case{kUnbounded, 0, "1100110"}}) {
        CAPTURE(c.d_prime);
        SampledLcpBuildReport rep;
        const SampledLcp s = build_sampled_lcp_from_csa(csa, c.d_prime, {}, &rep);
        CHECK(rep.minimal_samples == 4);
        CHECK(rep.extra_samples == c.extra);
        std::string marks;
        for (size_type x = 1; x <= 7; ++x) marks += s.is_sampled(x) ? '1' : '0';
        CHECK(marks == c.marks);
        if (c.d_prime != kUnbounded) CHECK(max_walk_length(s, csa) < c.d_prime);
    }
}

TEST_CASE("shared first pass gives the same structure") {
    const Text t = generate_concat(generate_random(4, 500, 2), 4).text;
    const Csa csa = Csa::build(t, 8);
    const StrictSamples pass1 = collect_strictly_minimal(csa);
    for (size_type dp : {1, 7, 64}) {
        ByteWriter a, b;
        build_sampled_lcp(csa, pass1, dp).serialize(a);
        build_sampled_lcp_from_csa(csa, dp).serialize(b);
        CHECK(a.take() == b.take());
    }
}

TEST_CASE("spacing from an exponent") {
    CHECK(d_prime_from_epsilon(1000000, 10000, 0.5) == 10000);
    CHECK(d_prime_from_epsilon(7, 5, 0.0) == 2);
    CHECK(d_prime_from_epsilon(10, 10, 0.0) == 1);
}
