#include <doctest.h>

#include <hcube/cover.hpp>

#include <random>
#include <set>

using namespace hcube;

namespace {

CoverInstance random_instance(int n_atoms, int n_rows, std::mt19937& rng) {
    CoverInstance inst;
    inst.n_atoms = n_atoms;
    for (int i = 0; i < n_rows; ++i) {
        CoverRow r;
        r.id = i;
        int sz = 1 + int(rng() % 4);
        std::set<int> atoms;
        while (static_cast<int>(atoms.size()) < sz) atoms.insert(int(rng() % n_atoms));
        r.atoms.assign(atoms.begin(), atoms.end());
        r.weight = 1 + int(rng() % 3);
        inst.rows.push_back(std::move(r));
    }
    return inst;
}

// all subsets of rows, tested directly
long long brute_exact_covers(const CoverInstance& inst) {
    long long count = 0;
    const int r = static_cast<int>(inst.rows.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> hit(inst.n_atoms, 0);
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1)
                for (int a : inst.rows[i].atoms) ++hit[a];
        bool ok = true;
        for (int a = 0; a < inst.n_atoms; ++a)
            if (hit[a] != 1) ok = false;
        if (ok) ++count;
    }
    return count;
}

long long brute_packs(const CoverInstance& inst, int target) {
    long long count = 0;
    const int r = static_cast<int>(inst.rows.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> hit(inst.n_atoms, 0);
        int w = 0;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) {
                w += inst.rows[i].weight;
                for (int a : inst.rows[i].atoms) ++hit[a];
            }
        if (w != target) continue;
        bool ok = true;
        for (int a = 0; a < inst.n_atoms; ++a)
            if (hit[a] > 1) ok = false;
        if (ok) ++count;
    }
    return count;
}

}  // namespace

TEST_SUITE_BEGIN("cover");

TEST_CASE("exact_cover matches subset brute force") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        CoverInstance inst = random_instance(8, 12, rng);
        CHECK(count_exact_covers(inst) == brute_exact_covers(inst));
    }
}

TEST_CASE("pack matches subset brute force for several targets") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        CoverInstance inst = random_instance(10, 12, rng);
        for (int target = 0; target <= 6; ++target)
            CHECK(count_packs(inst, target) == brute_packs(inst, target));
    }
}

TEST_CASE("solutions are disjoint and exact") {
    std::mt19937 rng(59);
    CoverInstance inst = random_instance(6, 14, rng);
    exact_cover(inst, [&](const std::vector<int>& ids) {
        std::vector<int> hit(inst.n_atoms, 0);
        for (int id : ids)
            for (int a : inst.rows[id].atoms) ++hit[a];
        for (int a = 0; a < inst.n_atoms; ++a) CHECK(hit[a] == 1);
        return true;
    });
}

TEST_CASE("pack with target zero emits the empty selection once") {
    CoverInstance inst;
    inst.n_atoms = 4;
    inst.rows.push_back({0, {0, 1}, 2});
    long long count = 0;
    std::vector<int> got;
    pack(inst, 0, [&](const std::vector<int>& ids) {
        ++count;
        got = ids;
        return true;
    });
    CHECK(count == 1);
    CHECK(got.empty());
}

TEST_CASE("restrict_rows keeps exactly the rows inside the mask") {
    CoverInstance inst;
    inst.n_atoms = 4;
    inst.rows.push_back({0, {0, 1}, 1});
    inst.rows.push_back({1, {2}, 1});
    inst.rows.push_back({2, {1, 3}, 1});
    CoverInstance out = restrict_rows(inst, {true, true, false, true});
    REQUIRE(out.rows.size() == 2);
    CHECK(out.rows[0].id == 0);
    CHECK(out.rows[1].id == 2);
}

TEST_SUITE_END();
