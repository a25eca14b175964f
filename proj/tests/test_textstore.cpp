#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "slcp/textstore.hpp"
#include "support.hpp"

using namespace slcp;

TEST_CASE("banana maps bytes to dense ranks") {
    const Text t = test::banana();
    CHECK(t.size() == 7);
    CHECK(t.sigma() == 3);
    CHECK(t.rank_of('a') == 1);
    CHECK(t.rank_of('b') == 2);
    CHECK(t.rank_of('n') == 3);
    CHECK(t.rank_of('z') == -1);
    const std::vector<Symbol> expect{2, 1, 3, 1, 3, 1, 0};
    CHECK(std::vector<Symbol>(t.symbols().begin(), t.symbols().end()) == expect);
    CHECK(t[7] == kTerminator);
    CHECK(t.to_bytes() == "banana");
    CHECK(t.to_bytes(true) == "banana$");
}

TEST_CASE("unary and invalid inputs") {
    const Text t = load_text("aaa");
    CHECK(t.size() == 4);
    CHECK(t.sigma() == 1);
    CHECK_THROWS_AS(load_text(""), TextError);
    try {
        load_text(std::string("ab\0c", 4));
        FAIL("reserved byte accepted");
    } catch (const TextError& e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(load_text("a$b", '$'), TextError);
    const Text zero = load_text(std::string("a\0b", 3), '$');
    CHECK(zero.size() == 4);
    CHECK(zero.rank_of(0) == 1);
}

namespace {

bool all_windows_once(const Text& t, size_type sigma, size_type k) {
    const size_type len = t.size() - 1;
    std::set<std::vector<Symbol>> seen;
    for (size_type i = 0; i < len; ++i) {
        std::vector<Symbol> w;
        for (size_type j = 0; j < k; ++j) w.push_back(t[1 + (i + j) % len]);
        if (!seen.insert(w).second) return false;
    }
    size_type total = 1;
    for (size_type j = 0; j < k; ++j) total *= sigma;
    return seen.size() == total;
}

}  // namespace

TEST_CASE("de Bruijn sequences") {
    const Text one = generate_de_bruijn(2, 1);
    CHECK(one.size() == 3);
    CHECK(one.to_bytes() == "ab");
    const Text three = generate_de_bruijn(2, 3);
    CHECK(three.size() == 9);
    CHECK(three.to_bytes() == "aaababbb");
    CHECK(all_windows_once(three, 2, 3));
    CHECK(all_windows_once(generate_de_bruijn(2, 10), 2, 10));
    CHECK(all_windows_once(generate_de_bruijn(3, 4), 3, 4));
    CHECK(generate_de_bruijn(4, 3).size() == 65);
    CHECK_THROWS_AS(generate_de_bruijn(2, 0), std::invalid_argument);
}

TEST_CASE("concatenation with copy markers") {
    const SentinelConcat c2 = generate_concat(test::banana(), 2);
    CHECK(c2.text.size() == 15);
    CHECK(c2.copy_length() == 7);
    CHECK(c2.text.to_bytes(true) == "banana#banana#$");
    CHECK(c2.marker_rank == 1);
    // terminator < marker < every regular symbol
    CHECK(c2.text[7] == 1);
    CHECK(c2.text[14] == 1);
    CHECK(c2.text[15] == kTerminator);
    CHECK(c2.text[2] == 2);
    const SentinelConcat c3 = generate_concat(test::banana(), 3);
    CHECK(c3.text.size() == 22);
    CHECK(c3.text.to_bytes() == "banana#banana#banana#");
    CHECK_THROWS_AS(generate_concat(test::banana(), 1), std::invalid_argument);
}

TEST_CASE("random texts") {
    CHECK(generate_random(4, 10, 42) == generate_random(4, 10, 42));
    CHECK(generate_random(4, 10, 42).to_bytes() == "dcdadacbbb");
    CHECK(generate_random(1, 5, 0).to_bytes() == "aaaaa");
    const Text big = generate_random(4, 100000, 7);
    std::vector<size_type> count(5, 0);
    for (size_type i = 1; i < big.size(); ++i) ++count[big[i]];
    for (Symbol c = 1; c <= 4; ++c) CHECK(std::abs(count[c] / 100000.0 - 0.25) < 0.05 * 0.25);
    CHECK_THROWS_AS(generate_random(0, 10, 1), std::invalid_argument);
}

TEST_CASE("repetitive texts") {
    const Text t = generate_repetitive(4, 1000, 10, 0.01, 3);
    CHECK(t.size() == 10001);
    CHECK(t == generate_repetitive(4, 1000, 10, 0.01, 3));
    size_type diff = 0;
    for (size_type i = 1; i <= 1000; ++i) diff += t[i] != t[i + 1000];
    CHECK(diff > 0);
    CHECK(diff < 100);
}

TEST_CASE("generated alphabets") {
    CHECK(generated_byte(4, 1) == 'a');
    CHECK(generated_byte(26, 26) == 'z');
    CHECK(generated_byte(100, 5) == 5);
}
