#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcube/canon.hpp"
#include "hcube/classify.hpp"
#include "hcube/partition.hpp"

namespace hcube {

// One case of the symmetry-prescribed search: a seed code of size M plus
// N1 codes of size M1 and N2 codes of size M2 (N1 + N2 = 12 for E^9).
struct SearchCase {
    int M = 0;
    int N1 = 0;
    std::optional<int> M1;
    int N2 = 0;
    int M2 = 0;
    bool hamming_seed = false;  // seed restricted to the doubly extended Hamming code
};

// All multisets of `parts` positive sizes <= cap summing to `space`,
// each ascending, in lexicographic order.
std::vector<std::vector<int>> enumerate_distributions(int space, int parts, int cap);

// The six (M; N1,M1; N2,M2) tuples of the 13-code search over E^9.
std::vector<SearchCase> search_cases();

// An H-orbit of codes, pairwise disjoint and disjoint from the seed.
struct OrbitSet {
    std::vector<Code> codes;  // sorted, duplicate-free
};

// All orbits {hgC' : h in H} with C' ranging over class representatives of
// size-M codes and g over G_n, of orbit size <= N, members disjoint from
// `seed` and from each other. Duplicates removed.
std::vector<OrbitSet> find_orbits(const Code& seed, int N, int M, const Group& H,
                                  const std::vector<Code>& class_reps);

struct SearchRecord {
    Code seed;
    Subgroup subgroup;
    long long solutions = 0;      // N(C,H)
    std::vector<Partition> found;
};

struct RunCaseOptions {
    std::set<int> orders;  // subgroup orders to prescribe; empty = per-case default
    std::optional<int> seed_class;  // restrict to one class index
    std::optional<std::string> checkpoint_dir;
    int jobs = 1;
    std::function<void(const std::string&)> log;
};

// Algorithm: for each seed class and each nonconjugate subgroup of its
// automorphism group, assemble partitions via pack over size-M1 orbits and
// exact cover over size-M2 orbits on the residual.
std::vector<SearchRecord> run_case(const SearchCase& sc, int n,
                                   const std::function<ClassificationResult(int)>& classes_of_size,
                                   const RunCaseOptions& opts = {});

// Canonical byte image of a partition under G_n; isomorphic partitions map
// to equal digests.
std::vector<word_t> partition_digest(const Partition& p);

// One representative per isomorphism class (the digest-minimal member),
// with automorphism group orders; output independent of input order.
std::vector<std::pair<Partition, long>> reject_isomorphs(const std::vector<Partition>& parts);

// Full stabilizer of the code set in G_n.
Group partition_automorphisms(const Partition& p);

// Lemma: if a p-subgroup H stabilizes the partition and |H| is coprime to
// the number N of size-M codes, H fixes one of them.
bool has_fixed_code_of_size(const Partition& p, const Group& H, int M);

struct ExhaustiveOptions {
    bool first_only = false;        // existence mode: maximal-class pruning, stop at first
    long long max_partitions = -1;  // cap on enumeration, -1 = unlimited
};

// All admissible partitions of E^n into at most k_colors codes (min
// distance 4). Existence mode restricts each class to a clique maximal in
// the remaining words, which preserves satisfiability.
std::vector<Partition> exhaustive_color(int n, int k_colors, const ExhaustiveOptions& opts = {});

// All partitions reachable by repeatedly moving a single word from a code
// into a non-maximal code at least as large, keeping admissibility;
// deduplicated by isomorphism, input excluded.
std::vector<Partition> augment_nonmaximal(const Partition& p);

}  // namespace hcube
