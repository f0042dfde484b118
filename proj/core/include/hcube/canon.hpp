#pragma once

#include <set>
#include <vector>

#include "hcube/code.hpp"
#include "hcube/isometry.hpp"

namespace hcube {

struct CanonicalForm {
    Code code;             // canonical representative of the class {gC : g in G_n}
    Isometry certificate;  // apply_code(certificate, input) == code
};

// Minimal representative under a fixed total order on codes: compare, for
// k = 1..n, the sorted multiset of k-coordinate prefixes of the word list.
// Deterministic, platform independent, and reached by translating a
// codeword to zero followed by a pruned search over coordinate orders.
CanonicalForm canonical_form(const Code& c);

// True iff c equals its own canonical representative. Aborts the search as
// soon as something smaller is seen, so rejection is cheap.
bool is_canonical(const Code& c);

bool are_equivalent(const Code& c, const Code& d);

// Full element list of Aut(C) <= G_n.
Group automorphism_group(const Code& c);

struct Subgroup {
    Group elements;
    int order = 0;
    // Number of subgroups of the parent conjugate to this one, X(C,H).
    long conjugates = 0;
};

// One representative per conjugacy class of subgroups of G whose order is
// in `orders`; supported orders are 2, 4 and odd primes. Conjugation is
// taken within G.
std::vector<Subgroup> nonconjugate_subgroups(const Group& G, const std::set<int>& orders);

// All subgroups (not up to conjugacy) of the given orders, as element lists.
std::vector<Group> subgroups_of_orders(const Group& G, const std::set<int>& orders);

// The orbit {hC : h in H}, duplicate-free, sorted.
std::vector<Code> orbit(const Code& c, const Group& H);

}  // namespace hcube
