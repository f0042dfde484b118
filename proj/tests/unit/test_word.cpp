#include <doctest.h>

#include <hcube/word.hpp>

#include <set>

using namespace hcube;

TEST_SUITE_BEGIN("word");

TEST_CASE("weight and distance agree with naive bit loops") {
    for (word_t u = 0; u < 64; ++u) {
        int w = 0;
        for (int b = 0; b < 6; ++b) w += (u >> b) & 1;
        CHECK(weight(u) == w);
        for (word_t v = 0; v < 64; ++v) {
            int d = 0;
            for (int b = 0; b < 6; ++b) d += ((u ^ v) >> b) & 1;
            CHECK(distance(u, v) == d);
        }
    }
}

TEST_CASE("distance is a metric on E^5") {
    const auto even = enumerate_even_bits(5);
    for (word_t u : even)
        for (word_t v : even) {
            CHECK(distance(u, v) == distance(v, u));
            CHECK((distance(u, v) == 0) == (u == v));
            for (word_t w : even) CHECK(distance(u, w) <= distance(u, v) + distance(v, w));
        }
}

TEST_CASE("even enumeration has size 2^(n-1), even weights, ascending") {
    for (int n = 1; n <= 10; ++n) {
        const auto even = enumerate_even_bits(n);
        CHECK(even.size() == (std::size_t(1) << (n - 1)));
        for (std::size_t i = 0; i < even.size(); ++i) {
            CHECK(weight(even[i]) % 2 == 0);
            if (i > 0) CHECK(even[i - 1] < even[i]);
        }
    }
}

TEST_CASE("add_parity maps Z_2^n onto E^(n+1)") {
    std::set<word_t> images;
    for (word_t w = 0; w < 256; ++w) {
        Word e = add_parity(Word{w, 8});
        CHECK(e.length == 9);
        CHECK(weight(e) % 2 == 0);
        images.insert(e.bits);
    }
    const auto even = enumerate_even_bits(9);
    CHECK(images == std::set<word_t>(even.begin(), even.end()));
}

TEST_CASE("even_index is the inverse of even enumeration") {
    const auto even = enumerate_even_bits(9);
    for (std::size_t i = 0; i < even.size(); ++i)
        CHECK(even_index(even[i]) == static_cast<int>(i));
}

TEST_CASE("format/parse round trip and bit convention") {
    CHECK(format_word(0b100000000, 9) == "100000000");  // coordinate 1 = MSB
    CHECK(format_word(1, 9) == "000000001");
    CHECK(parse_word("100100101", 9) == 0b100100101);
    for (word_t w = 0; w < 128; ++w) CHECK(parse_word(format_word(w, 7), 7) == w);
    CHECK_THROWS(parse_word("01", 3));
    CHECK_THROWS(parse_word("012", 3));
}

TEST_SUITE_END();
