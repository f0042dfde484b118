#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hcube/code.hpp"
#include "hcube/isometry.hpp"

namespace hcube {

// A set of pairwise-disjoint codes over E^n. Admissible when every code
// has minimum distance >= 4.
struct Partition {
    int length = 0;
    std::vector<Code> codes;  // kept sorted for a deterministic identity

    Partition() = default;
    Partition(int n, std::vector<Code> cs);

    int num_codes() const { return static_cast<int>(codes.size()); }
    long covered_size() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
};

Partition apply_partition(const Isometry& g, const Partition& p);

bool codes_pairwise_disjoint(const Partition& p);
bool is_admissible(const Partition& p);
// covers all of E^n
bool covers_even_space(const Partition& p);

// multiset of code sizes, ascending
std::vector<int> size_distribution(const Partition& p);
std::string format_distribution(const std::vector<int>& sizes);

// Partition file format: line-oriented text with "n <int>", optional
// "aut_order <int>", optional repeated "generator <isometry>", then one
// "code" header per code followed by its codewords. Bit-exact round trip.
struct PartitionFile {
    Partition partition;
    std::vector<Isometry> generators;
    std::optional<long> aut_order;
};

PartitionFile read_partition(std::istream& in);
PartitionFile read_partition_file(const std::string& path);
void write_partition(std::ostream& out, const PartitionFile& pf);
void write_partition_file(const std::string& path, const PartitionFile& pf);

}  // namespace hcube
