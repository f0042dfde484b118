#pragma once

#include <set>
#include <vector>

#include "hcube/search.hpp"

namespace hcube {

// Counts of (partition, seed code, subgroup) triples obtained two ways;
// equality of the totals is the consistency check.
struct CountingLedger {
    bigint by_partition = 0;
    bigint by_seed = 0;
    bool consistent() const { return by_partition == by_seed; }
};

// Sum over nonisomorphic representatives of N(C) * |G_n| / |Aut(C)| where
// N(C) counts pairs (C, H): C a code of size seed_size in the partition,
// H <= Aut(partition) of an order in `orders` with H <= Aut(C).
bigint count_by_partition(const std::vector<std::pair<Partition, long>>& reps, int seed_size,
                          const std::set<int>& orders);

// Sum over searched seed pairs of N(C,H) * X(C,H) * |G_n| / |Aut(C)|.
bigint count_by_seed(const std::vector<SearchRecord>& records, int n,
                     const std::vector<long>& seed_aut_orders);

struct SandboxResult {
    CountingLedger ledger;
    std::vector<SearchRecord> records;
    std::vector<std::pair<Partition, long>> reps;
};

// Desk-scale end-to-end case: partitions of E^7 into 8 even (7,8,4) codes
// with prescribed order-2 subgroups.
SandboxResult run_sandbox_e7();

}  // namespace hcube
