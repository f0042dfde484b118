#include <doctest.h>

#include <hcube/isometry.hpp>

#include <random>
#include <set>

using namespace hcube;

namespace {

Isometry random_isometry(int n, std::mt19937& rng) {
    std::vector<std::uint8_t> p(n);
    for (int i = 0; i < n; ++i) p[i] = std::uint8_t(i);
    std::shuffle(p.begin(), p.end(), rng);
    const auto evens = enumerate_even_bits(n);
    word_t t = evens[rng() % evens.size()];
    return Isometry(n, std::move(p), t);
}

}  // namespace

TEST_SUITE_BEGIN("isometry");

TEST_CASE("apply moves coordinates and xors the translation") {
    // pi = (12) on n=3, translation 110: coordinate 1 of the image comes
    // from coordinate 2 of the argument
    Isometry g(3, {1, 0, 2}, 0b110);
    CHECK(g.apply_bits(0b100) == (0b010u ^ 0b110u));
    CHECK(g.apply_bits(0b001) == (0b001u ^ 0b110u));
}

TEST_CASE("compose and inverse satisfy the group laws (random, n=6)") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        Isometry g = random_isometry(6, rng);
        Isometry h = random_isometry(6, rng);
        Isometry gh = compose(g, h);
        for (word_t w = 0; w < 64; ++w)
            CHECK(gh.apply_bits(w) == g.apply_bits(h.apply_bits(w)));
        CHECK(compose(g, inverse(g)).is_identity());
        CHECK(compose(inverse(g), g).is_identity());
    }
}

TEST_CASE("group_order matches the lazy enumeration") {
    for (int n = 2; n <= 5; ++n) {
        long long count = 0;
        std::set<IsoKey> keys;
        for_each_element(n, [&](const Isometry& g) {
            ++count;
            keys.insert(iso_key(g));
            return true;
        });
        CHECK(bigint(count) == group_order(n));
        CHECK(bigint(keys.size()) == group_order(n));  // all distinct
    }
    CHECK(group_order(5) == 1920);
    CHECK(group_order(9) == bigint(362880) * 256);
}

TEST_CASE("distinct elements act distinctly (faithful action, n=4)") {
    std::set<std::vector<word_t>> actions;
    for_each_element(4, [&](const Isometry& g) {
        std::vector<word_t> img;
        for (word_t w = 0; w < 16; ++w) img.push_back(g.apply_bits(w));
        actions.insert(img);
        return true;
    });
    CHECK(bigint(actions.size()) == group_order(4));
}

TEST_CASE("generate closes under the generators") {
    // swap of two coordinates and a weight-2 translation generate a dihedral-ish group
    Isometry a(4, {1, 0, 2, 3}, 0);
    Isometry b(4, {0, 1, 2, 3}, 0b0011);
    Group G = generate(4, {a, b});
    CHECK(G.order() % 2 == 0);
    for (const Isometry& g : G.elems) {
        CHECK(G.contains(inverse(g)));
        CHECK(G.contains(compose(g, a)));
        CHECK(G.contains(compose(g, b)));
    }
}

TEST_CASE("element_order divides the group order") {
    std::mt19937 rng(11);
    for (int it = 0; it < 50; ++it) {
        Isometry g = random_isometry(5, rng);
        int k = element_order(g);
        Isometry acc = g;
        for (int i = 1; i < k; ++i) {
            CHECK(!acc.is_identity());
            acc = compose(g, acc);
        }
        CHECK(acc.is_identity());
    }
}

TEST_CASE("format/parse round trip") {
    std::mt19937 rng(13);
    for (int it = 0; it < 100; ++it) {
        Isometry g = random_isometry(9, rng);
        CHECK(parse_isometry(format_isometry(g), 9) == g);
    }
    Isometry id = Isometry::identity(6);
    CHECK(format_isometry(id) == "(id, 000000)");
    CHECK(parse_isometry("(id, 000000)", 6) == id);
    // multi-digit coordinates for n > 9
    Isometry g(12, {9, 1, 2, 3, 4, 5, 6, 7, 8, 0, 11, 10}, 0);
    CHECK(parse_isometry(format_isometry(g), 12) == g);
}

TEST_SUITE_END();
