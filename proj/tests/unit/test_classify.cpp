#include <doctest.h>

#include <hcube/canon.hpp>
#include <hcube/classify.hpp>

#include <set>

using namespace hcube;

TEST_SUITE_BEGIN("classify");

namespace {

// independent class count: orbit-minimal images under all of G_n
int brute_classes(int n, int M, int d) {
    const auto even = enumerate_even_bits(n);
    const int k = static_cast<int>(even.size());
    REQUIRE(M <= 4);
    std::vector<Code> codes;
    std::vector<int> idx(M);
    auto rec = [&](auto&& self, int depth, int start, std::vector<word_t>& ws) -> void {
        if (depth == M) {
            codes.emplace_back(n, ws);
            return;
        }
        for (int i = start; i < k; ++i) {
            bool ok = true;
            for (word_t u : ws)
                if (distance(u, even[i]) < d) ok = false;
            if (!ok) continue;
            ws.push_back(even[i]);
            self(self, depth + 1, i + 1, ws);
            ws.pop_back();
        }
    };
    std::vector<word_t> ws;
    rec(rec, 0, 0, ws);
    std::set<std::vector<word_t>> minima;
    for (const Code& c : codes) {
        std::vector<word_t> best = c.words;
        for_each_element(n, [&](const Isometry& g) {
            auto img = apply_code(g, c).words;
            if (img < best) best = img;
            return true;
        });
        minima.insert(best);
    }
    return static_cast<int>(minima.size());
}

}  // namespace

TEST_CASE("both engines match a brute-force oracle on (6,4,4)") {
    const int oracle = brute_classes(6, 4, 4);
    ClassifyOptions anchored;
    anchored.method = ClassifyMethod::AnchoredClique;
    ClassificationResult a = classify_codes(6, 4, 4, anchored);
    CHECK(static_cast<int>(a.representatives.size()) == oracle);
    ClassifyOptions augment;
    augment.method = ClassifyMethod::Augmentation;
    ClassificationResult b = classify_codes(6, 4, 4, augment);
    CHECK(a.representatives == b.representatives);
    CHECK(a.aut_orders == b.aut_orders);
}

TEST_CASE("engines agree on (6,3,4) and (7,4,4)") {
    for (auto [n, M] : {std::pair{6, 3}, std::pair{7, 4}}) {
        ClassifyOptions anchored;
        anchored.method = ClassifyMethod::AnchoredClique;
        ClassifyOptions augment;
        augment.method = ClassifyMethod::Augmentation;
        ClassificationResult a = classify_codes(n, M, 4, anchored);
        ClassificationResult b = classify_codes(n, M, 4, augment);
        CHECK(a.representatives == b.representatives);
    }
}

TEST_CASE("representatives are canonical, inequivalent, and valid") {
    ClassificationResult r = classify_codes(7, 8, 4);
    for (const Code& c : r.representatives) {
        CHECK(is_canonical(c));
        CHECK(min_distance_at_least(c, 4));
        CHECK(is_even_code(c));
    }
    for (std::size_t i = 0; i < r.representatives.size(); ++i)
        for (std::size_t j = i + 1; j < r.representatives.size(); ++j)
            CHECK(!are_equivalent(r.representatives[i], r.representatives[j]));
    // the largest even (7,8,4) code is unique up to equivalence
    CHECK(r.representatives.size() == 1);
}

TEST_CASE("is_maximal") {
    ClassificationResult r = classify_codes(7, 8, 4);
    REQUIRE(r.representatives.size() == 1);
    CHECK(is_maximal(r.representatives[0]));
    Code sub(7, {r.representatives[0].words[0], r.representatives[0].words[1]});
    CHECK(!is_maximal(sub));
}

TEST_CASE("doubly extended Hamming code") {
    Code h = doubly_extended_hamming();
    CHECK(h.length == 9);
    CHECK(h.size() == 16);
    CHECK(min_distance(h) == 4);
    CHECK(is_even_code(h));
    CHECK(is_maximal(h));
}

TEST_SUITE_END();
