#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "slcp/csa.hpp"
#include "slcp/oracle.hpp"
#include "support.hpp"

using namespace slcp;

TEST_CASE("banana index") {
    const Csa csa = Csa::build(test::banana(), 2);
    CHECK(csa.size() == 7);
    CHECK(csa.alphabet_size() == 4);
    CHECK(csa.runs() == 5);
    CHECK(std::vector<size_type>(csa.c_array().begin(), csa.c_array().end()) == std::vector<size_type>{0, 1, 4, 5, 7});

    std::string l;
    for (size_type x = 1; x <= 7; ++x) l += "$abn"[csa.bwt(x)];
    CHECK(l == "annb$aa");

    const std::vector<size_type> psi{0, 5, 1, 6, 7, 4, 2, 3};
    for (size_type x = 1; x <= 7; ++x) CHECK(csa.psi(x) == psi[x]);
    CHECK(csa.psi(4) == 7);
    CHECK(csa.psi(6) == 2);
    CHECK(csa.psi(3) == 6);
    CHECK(csa.lf(1) == 2);
    for (size_type x = 1; x <= 7; ++x) CHECK(csa.lf(csa.psi(x)) == x);

    CHECK(csa.range_containing(3) == SymbolRange{1, 2, 4});
    CHECK(csa.range_containing(1) == SymbolRange{kTerminator, 1, 1});
    CHECK(csa.range_containing(7) == SymbolRange{3, 6, 7});

    CHECK(csa.psi_with_previous(3) == std::pair<size_type, size_type>{1, 6});
    CHECK(csa.psi_with_previous(2) == std::pair<size_type, size_type>{0, 1});
    CHECK(csa.psi_two(2, 4, csa.range_containing(2)) == std::pair<size_type, size_type>{1, 7});
}

TEST_CASE("counting") {
    const Csa csa = Csa::build(test::banana(), 2);
    const SaRange r = csa.backward_search(std::vector<Symbol>{1, 3, 1});
    CHECK(r.lo == 3);
    CHECK(r.hi == 4);
    CHECK(csa.count_bytes("ana") == 2);
    CHECK(csa.count_bytes("x") == 0);
    CHECK(csa.count_bytes("") == 7);
    CHECK(csa.count_bytes("banana") == 1);
    CHECK(csa.count_bytes("nab") == 0);
}

TEST_CASE("locate, inverse and display on banana") {
    const Text t = test::banana();
    const Csa csa = Csa::build(t, 2);
    const std::vector<size_type> sa{0, 7, 6, 4, 2, 1, 5, 3};
    CHECK(csa.locate(4) == 2);
    for (size_type x = 1; x <= 7; ++x) {
        StepCounter c;
        CHECK(csa.locate(x, &c) == sa[x]);
        CHECK(c.psi <= 2);
        CHECK(csa.inverse(sa[x]) == x);
    }
    const Csa every = Csa::build(t, 1);
    for (size_type x = 1; x <= 7; ++x) {
        StepCounter c;
        CHECK(every.locate(x, &c) == sa[x]);
        CHECK(c.psi == 0);
    }
    CHECK(csa.display(2, 3) == std::vector<Symbol>{1, 3, 1});
    CHECK(csa.display(1, 7) == std::vector<Symbol>{2, 1, 3, 1, 3, 1, 0});
    CHECK(csa.display(3, 0).empty());
    CHECK_THROWS_AS(csa.display(5, 4), std::out_of_range);
    CHECK_THROWS_AS(Csa::build(t, 0), std::invalid_argument);
}

TEST_CASE("unary index") {
    for (size_type d : {1, 2, 3}) {
        const Csa csa = Csa::build(load_text("aaaa"), d);
        CHECK(csa.runs() == 2);
    }
}

TEST_CASE("random text against the reference") {
    const Text t = generate_random(4, 10000, 1);
    const RefArrays ref = naive_reference(t);
    const Csa csa = Csa::build(t, 8);
    size_type max_steps = 0;
    bool ok = true;
    for (size_type x = 1; x <= t.size(); ++x) {
        StepCounter c;
        ok &= csa.locate(x, &c) == ref.sa[x];
        ok &= csa.bwt(x) == ref.bwt[x];
        ok &= csa.psi(x) == ref.isa[ref.sa[x] % t.size() + 1];
        max_steps = std::max(max_steps, c.psi);
    }
    CHECK(ok);
    CHECK(max_steps <= 8);
    CHECK(csa.runs() == ref.runs());

    std::mt19937_64 rng(9);
    for (int q = 0; q < 1000; ++q) {
        const size_type len = 1 + rng() % 8;
        const size_type at = 1 + rng() % (t.size() - len);
        std::vector<Symbol> p(t.symbols().begin() + at - 1, t.symbols().begin() + at - 1 + len);
        if (q % 4 == 0) p.back() = static_cast<Symbol>(1 + rng() % 4);
        CHECK(csa.count(p) == naive_count(t, p));
    }
    for (size_type i = 1; i <= t.size(); i += 97)
        for (size_type len = 1; len <= 16 && i + len - 1 <= t.size(); ++len) {
            StepCounter c;
            const auto got = csa.display(i, len, &c);
            CHECK(std::equal(got.begin(), got.end(), t.symbols().begin() + i - 1));
            CHECK(c.psi <= 8 + len);
        }
}

TEST_CASE("serialization round trip") {
    const Csa csa = Csa::build(generate_random(3, 3000, 4), 5, 8);
    ByteWriter w;
    csa.serialize(w);
    const auto bytes = w.take();
    ByteReader r(bytes);
    const Csa back = Csa::deserialize(r);
    ByteWriter w2;
    back.serialize(w2);
    CHECK(w2.take() == bytes);
    for (size_type x = 1; x <= csa.size(); x += 7) CHECK(back.locate(x) == csa.locate(x));
    CHECK(back.sizes().total() == csa.sizes().total());
}
