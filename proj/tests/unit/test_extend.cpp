#include <doctest.h>

#include <hcube/extend.hpp>
#include <hcube/search.hpp>

using namespace hcube;

TEST_SUITE_BEGIN("extend");

TEST_CASE("1820 ordered size tuples for the 13-code extension") {
    CHECK(enumerate_size_tuples(256, 13, 20).size() == 1820);
}

TEST_CASE("size tuples match a brute-force count at small scale") {
    auto ts = enumerate_size_tuples(6, 3, 4);
    int brute = 0;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                if (a + b + c == 6) ++brute;
    CHECK(static_cast<int>(ts.size()) == brute);
    for (const auto& t : ts) {
        CHECK(t.size() == 3);
        CHECK(t[0] + t[1] + t[2] == 6);
    }
}

TEST_CASE("candidate complements stay clear of the base code") {
    Code base(5, {0b00000, 0b01111});
    for (const Code& e : candidate_codes(base, 2)) {
        CHECK(e.size() == 2);
        CHECK(min_distance_at_least(e, 4));
        for (word_t w : e.words) {
            CHECK(weight(w) % 2 == 1);
            for (word_t u : base.words) CHECK(distance(u, w) >= 3);
        }
    }
    CHECK(!candidate_codes(base, 2).empty());
    CHECK(candidate_codes(base, 0).size() == 1);  // the empty complement
}

TEST_CASE("an 8-code partition of E^7 extends to E^8") {
    ExhaustiveOptions first;
    first.first_only = true;
    auto base = exhaustive_color(7, 8, first);
    REQUIRE(base.size() == 1);
    REQUIRE(covers_even_space(base[0]));
    ExtendResult r = extend_partition(base[0]);
    REQUIRE(r.extension.has_value());
    const Partition& ext = *r.extension;
    CHECK(ext.length == 8);
    CHECK(ext.num_codes() == 8);
    CHECK(is_admissible(ext));
    CHECK(covers_even_space(ext));
    // every extended code restricts back to the base code
    for (const Code& c : ext.codes) {
        std::vector<word_t> low;
        for (word_t w : c.words)
            if (!(w >> 7)) low.push_back(w);
        bool found = false;
        for (const Code& d : base[0].codes)
            if (Code(7, low) == d) found = true;
        CHECK(found);
    }
}

TEST_SUITE_END();
