#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hcube/clique.hpp"
#include "hcube/partition.hpp"

namespace hcube {

// All ordered k-tuples of sizes in [0, cap] summing to `total`.
std::vector<std::vector<int>> enumerate_size_tuples(int total, int k, int cap);

// All odd-weight codes E of size M over O^n such that prepending 0 to the
// base code and 1 to E yields a code of minimum distance 4: filter O^n to
// words at distance >= 3 from every base word, then enumerate M-cliques of
// the distance->=4 graph.
std::vector<Code> candidate_codes(const Code& base, int M);

struct ExtendOptions {
    bool first_only = true;
    int jobs = 1;
    std::function<void(int, long long)> progress;  // (tuple index, covers found)
};

struct ExtendResult {
    std::optional<Partition> extension;  // partition of E^(n+1), if any
    long long tuples_tried = 0;
    long long extensions_found = 0;
};

// Decides whether a k-code admissible partition of E^n extends to a k-code
// admissible partition of E^(n+1) with each new code 0 D_i + 1 E_i. The
// exact-cover universe is {code labels} + O^n so empty E_i stay
// representable.
ExtendResult extend_partition(const Partition& base, const ExtendOptions& opts = {});

}  // namespace hcube
