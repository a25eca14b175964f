#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "slcp/analysis.hpp"
#include "support.hpp"

using namespace slcp;

TEST_CASE("banana statistics") {
    const LcpStats s = compute_stats(test::banana());
    CHECK(s.n == 7);
    CHECK(s.runs == 5);
    CHECK(s.irreducible == ValueSet{5, 3});
    CHECK(s.minimal == ValueSet{5, 1});
    CHECK(s.strictly_minimal == ValueSet{4, 0});
    CHECK(LcpStats::per_n(s.minimal, s.n) == doctest::Approx(1.0 / 7));
    CHECK(compute_stats(load_text("aaaa")).minimal.count == 2);
    CHECK(compute_stats(load_text("aaaa")).runs == 2);
}

TEST_CASE("concatenation sums") {
    CHECK(compute_stats(generate_concat(test::banana(), 3).text).irreducible.sum == 17);
    for (bool oracle : {false, true}) {
        const ConcatSumResult r2 = concat_sum_experiment(test::banana(), 2, oracle);
        CHECK(r2.base_sum == 3);
        CHECK(r2.copy_length == 7);
        CHECK(r2.measured == 10);
        CHECK(r2.predicted == 10);
        CHECK(r2.match);
        const ConcatSumResult r3 = concat_sum_experiment(test::banana(), 3, oracle);
        CHECK(r3.measured == 17);
        CHECK(r3.predicted == 17);
    }
    const Text base = generate_random(4, 500, 3);
    const ConcatSumResult r5 = concat_sum_experiment(base, 5, true);
    CHECK(r5.base_sum == 1339);
    CHECK(r5.measured == 3343);
    CHECK(r5.match);
}

TEST_CASE("de Bruijn sums") {
    struct Case {
        size_type k, n, runs, irreducible, minimal;
    };
    for (const Case& c : {Case{7, 129, 115, 579, 565}, Case{8, 257, 231, 1399, 1373},
                          Case{10, 1025, 943, 7626, 7544}}) {
        const LcpStats s = compute_stats(generate_de_bruijn(2, c.k));
        CHECK(s.n == c.n);
        CHECK(s.runs == c.runs);
        CHECK(s.irreducible.sum == c.irreducible);
        CHECK(s.minimal.sum == c.minimal);
        CHECK(static_cast<double>(s.irreducible.sum) <= 2.0 * c.n * std::log2(c.n));
    }
}

TEST_CASE("empirical entropy") {
    CHECK(empirical_entropy(load_text("aaaaaaa"), 0) == 0.0);
    CHECK(empirical_entropy(load_text("abababab"), 0) == doctest::Approx(1.0));
    CHECK(empirical_entropy(load_text("abababab"), 1) == doctest::Approx(0.0));
    CHECK(empirical_entropy(test::banana(), 0) == doctest::Approx(1.4591479170272448));
    CHECK(empirical_entropy(generate_random(4, 100000, 1), 0) == doctest::Approx(2.0).epsilon(0.01));
    CHECK_THROWS_AS(empirical_entropy(test::banana(), 6), std::invalid_argument);
}

TEST_CASE("effective alphabet") {
    CHECK(effective_alphabet(load_text("aaaaaaa"), 0) == doctest::Approx(1.0));
    CHECK(effective_alphabet(load_text("aaaaaaa"), 3) == doctest::Approx(1.0));
    CHECK(effective_alphabet(load_text("abababab"), 1) == doctest::Approx(1.0));
    CHECK(effective_alphabet(test::banana(), 0) == doctest::Approx(36.0 / 14));
    CHECK(effective_alphabet(generate_random(4, 100000, 1), 0) == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("irreducible sum estimate") {
    CHECK(estimate_irreducible_sum(1000000, 2, 1) == doctest::Approx(9.46578e6).epsilon(1e-5));
    CHECK(estimate_irreducible_sum(7, 36.0 / 14, 1.4591479170272448) == doctest::Approx(5.508088330788595));
    CHECK(estimate_irreducible_sum(1000, 1, 1) == doctest::Approx(-1000));
    CHECK_THROWS_AS(estimate_irreducible_sum(1000, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(estimate_irreducible_sum(1000, 0.5, 1), std::invalid_argument);

    const EntropyEstimate unary = estimate_entropy(load_text("aaaaaaaaaa"), 0);
    CHECK(unary.entropy == 0.0);
    CHECK(unary.degenerate);
    CHECK(unary.s_prime == 0.0);
    const EntropyEstimate abab = estimate_entropy(load_text("abababab"), 0);
    CHECK_FALSE(abab.degenerate);
    CHECK(abab.sigma_prime == doctest::Approx(2.0));
}

TEST_CASE("repetitive text sits far below the estimate") {
    const Text t = generate_concat(generate_random(4, 2000, 1), 8).text;
    const LcpStats s = compute_stats(t);
    const EntropyEstimate e = estimate_entropy(t, 0);
    CHECK(static_cast<double>(s.irreducible.sum) < e.s_prime / 2);
}

TEST_CASE("table output") {
    StatsRow row{"banana", compute_stats(test::banana()), estimate_entropy(test::banana(), 0)};
    const std::string header = stats_csv_header();
    const std::string line = stats_csv_row(row);
    CHECK(std::count(header.begin(), header.end(), ',') == std::count(line.begin(), line.end(), ','));
    CHECK(line.rfind("banana,7,5,0,", 0) == 0);
    const auto j = nlohmann::json::parse(stats_json({row}));
    REQUIRE(j.is_array());
    CHECK(j[0]["R"] == 5);
    CHECK(j[0]["minimal"]["sum"] == 1);
    CHECK(j[0]["strictly_minimal"]["count"] == 4);
    for (const char* key : {"H_k", "sigma_prime", "S_prime", "irreducible", "minimal", "strictly_minimal"})
        CHECK(j[0].contains(key));
}
