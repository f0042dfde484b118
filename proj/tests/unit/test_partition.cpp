#include <doctest.h>

#include <hcube/partition.hpp>

#include <sstream>

using namespace hcube;

TEST_SUITE_BEGIN("partition");

namespace {

Partition sample() {
    return Partition(5, {Code(5, {0b00000, 0b01111}), Code(5, {0b00011, 0b11101}),
                         Code(5, {0b00101, 0b11011})});
}

}  // namespace

TEST_CASE("admissibility and coverage checks") {
    Partition p = sample();
    CHECK(is_admissible(p));
    CHECK(!covers_even_space(p));  // only 6 of 16 words
    CHECK(codes_pairwise_disjoint(p));
    Partition overlap(5, {Code(5, {0b00000, 0b01111}), Code(5, {0b00000, 0b11011})});
    CHECK(!codes_pairwise_disjoint(overlap));
    CHECK(!is_admissible(overlap));
    Partition close(5, {Code(5, {0b00000, 0b00011})});
    CHECK(!is_admissible(close));  // distance 2 inside a code
}

TEST_CASE("apply_partition is a group action") {
    Partition p = sample();
    Isometry g(5, {4, 0, 1, 2, 3}, 0b00110);
    Isometry h(5, {1, 0, 3, 2, 4}, 0b01010);
    CHECK(apply_partition(compose(g, h), p) == apply_partition(g, apply_partition(h, p)));
    CHECK(apply_partition(inverse(g), apply_partition(g, p)) == p);
    CHECK(is_admissible(apply_partition(g, p)));
}

TEST_CASE("size distribution formatting") {
    CHECK(format_distribution({16, 20, 20, 20}) == "16 + 3x20");
    CHECK(format_distribution({18, 19, 19, 20}) == "18 + 2x19 + 20");
    CHECK(format_distribution({8}) == "8");
}

TEST_CASE("partition file round trip is bit exact") {
    PartitionFile pf;
    pf.partition = sample();
    pf.aut_order = 12;
    pf.generators.push_back(Isometry(5, {1, 0, 2, 3, 4}, 0b00011));
    std::ostringstream out;
    write_partition(out, pf);
    std::istringstream in(out.str());
    PartitionFile back = read_partition(in);
    CHECK(back.partition == pf.partition);
    CHECK(back.aut_order == pf.aut_order);
    CHECK(back.generators == pf.generators);
    std::ostringstream out2;
    write_partition(out2, back);
    CHECK(out.str() == out2.str());
}

TEST_CASE("several partitions can share one stream") {
    std::ostringstream out;
    write_partition(out, {sample(), {}, std::nullopt});
    write_partition(out, {sample(), {}, std::nullopt});
    std::istringstream in(out.str());
    CHECK(read_partition(in).partition == sample());
    CHECK(read_partition(in).partition == sample());
}

TEST_SUITE_END();
