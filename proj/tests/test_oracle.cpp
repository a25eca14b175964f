#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slcp/oracle.hpp"
#include "support.hpp"

using namespace slcp;
using test::one_based;

TEST_CASE("banana reference arrays") {
    const RefArrays r = naive_reference(test::banana());
    CHECK(r.size() == 7);
    CHECK(r.sa == one_based({7, 6, 4, 2, 1, 5, 3}));
    CHECK(r.isa == one_based({5, 4, 7, 3, 6, 2, 1}));
    CHECK(r.lcp == one_based({0, 0, 1, 3, 0, 0, 2}));
    CHECK(r.plcp == one_based({0, 3, 2, 1, 0, 0, 0}));
    // L = "annb$aa"
    CHECK(r.bwt == std::vector<Symbol>{0, 1, 3, 3, 2, 0, 1, 1});
    CHECK(r.runs() == 5);
    const std::vector<bool> irreducible{false, true, true, false, false, true, true, true};
    CHECK(r.irreducible == irreducible);
    for (size_type i = 2; i <= 7; ++i)
        if (!r.irreducible[i]) CHECK(r.plcp[i] == r.plcp[i - 1] - 1);
}

TEST_CASE("single letter and unary texts") {
    const RefArrays a = naive_reference(load_text("a"));
    CHECK(a.sa == one_based({2, 1}));
    CHECK(a.lcp == one_based({0, 0}));
    CHECK(a.plcp == one_based({0, 0}));
    const RefArrays u = naive_reference(load_text("aaaa"));
    CHECK(u.sa == one_based({5, 4, 3, 2, 1}));
    CHECK(u.plcp == one_based({3, 2, 1, 0, 0}));
    CHECK(u.runs() == 2);
}

TEST_CASE("pairwise lcp and counting") {
    const Text t = test::banana();
    CHECK(naive_lcp_pair(t, 2, 4) == 3);
    CHECK(naive_lcp_pair(t, 1, 7) == 0);
    for (size_type i = 1; i <= 7; ++i) CHECK(naive_lcp_pair(t, i, i) == 8 - i);
    const std::vector<Symbol> ana{1, 3, 1};
    CHECK(naive_count(t, ana) == 2);
    CHECK(naive_count(t, std::vector<Symbol>{}) == 7);
}

TEST_CASE("concatenation reference") {
    const Text base = test::banana();
    for (size_type r : {2, 3}) {
        const SentinelConcat c = generate_concat(base, r);
        const RefArrays ref = oracle_concat_reference(c);
        size_type sum = 0;
        for (size_type i = 1; i <= ref.size(); ++i)
            if (ref.irreducible[i]) sum += ref.plcp[i];
        CHECK(sum == (r == 2 ? 10 : 17));
        const RefArrays direct = naive_reference(c.text);
        CHECK(direct.plcp == ref.plcp);
        CHECK(direct.sa == ref.sa);
    }
    // For r = 2, every suffix of the first copy except position 1 is reducible.
    const SentinelConcat c = generate_concat(base, 2);
    const RefArrays ref = oracle_concat_reference(c);
    for (size_type i = 2; i <= c.copy_length(); ++i) CHECK_FALSE(ref.irreducible[i]);
}

TEST_CASE("limits") {
    OracleLimits tight;
    tight.max_lcp_length = 5;
    tight.max_sa_length = 5;
    CHECK_THROWS_AS(naive_reference(test::banana(), tight), LimitExceeded);
    tight.max_lcp_length = 6;
    tight.max_sa_length = 6;
    CHECK_NOTHROW(naive_reference(test::banana(), tight));
}
