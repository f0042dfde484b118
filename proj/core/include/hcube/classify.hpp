#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hcube/code.hpp"

namespace hcube {

enum class ClassifyMethod { AnchoredClique, Augmentation };

struct ClassificationResult {
    int n = 0, M = 0, d = 0;
    std::vector<Code> representatives;  // canonical forms, pairwise inequivalent
    std::vector<long> aut_orders;       // parallel to representatives
};

struct ClassifyOptions {
    ClassifyMethod method = ClassifyMethod::AnchoredClique;
    // Progress callback, called with (cliques examined, classes found).
    std::function<void(long long, long long)> progress;
    // Write each representative as a codelist into this directory.
    std::optional<std::string> out_dir;
};

// One representative per equivalence class of even (n,M,d) codes.
// AnchoredClique enumerates cliques through the zero word and keeps the
// ones equal to their canonical form; Augmentation grows classes one word
// per level with canonical dedup.
ClassificationResult classify_codes(int n, int M, int d, const ClassifyOptions& opts = {});

// True iff no word of E^n outside c can be added keeping min distance >= 4.
bool is_maximal(const Code& c);

// The even (9,16,4) code obtained by twice extending the (7,16,3) Hamming
// code with parity bits.
Code doubly_extended_hamming();

}  // namespace hcube
