#pragma once

#include <functional>
#include <vector>

#include "hcube/word.hpp"

namespace hcube {

// A candidate subset over a universe of interned atoms [0, n_atoms).
struct CoverRow {
    int id = 0;
    std::vector<int> atoms;  // sorted, duplicate-free
    int weight = 1;
};

struct CoverInstance {
    int n_atoms = 0;
    std::vector<CoverRow> rows;
};

// All selections of pairwise-disjoint rows with total weight exactly N
// (atoms at most once). Rows whose atoms leave the universe are the
// caller's responsibility to exclude. Callback returns false to stop.
void pack(const CoverInstance& inst, int target_weight,
          const std::function<bool(const std::vector<int>&)>& emit);

// All selections of rows covering every atom exactly once. Rows containing
// atoms outside the universe must be filtered out by the caller (see
// restrict_rows). Callback returns false to stop.
void exact_cover(const CoverInstance& inst,
                 const std::function<bool(const std::vector<int>&)>& emit);

long long count_exact_covers(const CoverInstance& inst);
long long count_packs(const CoverInstance& inst, int target_weight);

// Keeps only rows entirely inside the atom set `keep` (bitmask per atom).
CoverInstance restrict_rows(const CoverInstance& inst, const std::vector<bool>& keep);

}  // namespace hcube
