#pragma once

#include <string>
#include <vector>

#include "hcube/partition.hpp"

namespace hcube {

// The published 13-code partition of E^9 with automorphism group of order
// 48: a (9,16,4) code C0, a (9,20,4) code C1, and two generators; the
// twelve size-20 codes are the orbit of C1 under the generated group.
Code certificate_c0();
Code certificate_c1();
Isometry certificate_g1();
Isometry certificate_g2();

Partition certificate_partition();

struct VerifyReport {
    bool admissible = false;
    bool covers_space = false;
    std::vector<int> distribution;
    long aut_order = 0;
    bool generators_are_automorphisms = false;
    // Derived statement: counting lower bound vs the partition's code count.
    int num_codes = 0;
    long lower_bound = 0;
    bool chromatic_number_settled = false;  // lower == num_codes
    std::string statement;

    bool ok() const { return admissible && covers_space && generators_are_automorphisms; }
};

VerifyReport verify_partition(const Partition& p, const std::vector<Isometry>& generators = {});

// chi_2(9*2^i - 1) <= 13*2^i, from doubling a 13-coloring of the 8-cube.
std::string theorem_doubling_statement(int i);

}  // namespace hcube
