#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hcube/code.hpp"
#include "hcube/word.hpp"

namespace hcube {

using bigint = boost::multiprecision::cpp_int;

// An element of G_n: coordinate permutation followed by translation with an
// even-weight word. The image of w has, at coordinate i, w_{perm^-1(i)} xor
// trans_i. Internally coordinates are 0-based: perm[j] is the image of
// coordinate j.
struct Isometry {
    int n = 0;
    std::vector<std::uint8_t> perm;
    word_t trans = 0;

    Isometry() = default;
    Isometry(int n_, std::vector<std::uint8_t> p, word_t t);

    static Isometry identity(int n);
    bool is_identity() const;

    word_t apply_bits(word_t w) const;
    friend auto operator<=>(const Isometry&, const Isometry&) = default;
};

Word apply(const Isometry& g, const Word& w);
Isometry compose(const Isometry& g, const Isometry& h);
Isometry inverse(const Isometry& g);
Code apply_code(const Isometry& g, const Code& c);

// |G_n| = n! * 2^(n-1)
bigint group_order(int n);

// Compact key for hashing/dedup; valid for n <= 12.
struct IsoKey {
    std::uint64_t pk;
    word_t t;
    friend auto operator<=>(const IsoKey&, const IsoKey&) = default;
};
IsoKey iso_key(const Isometry& g);

struct IsoKeyHash {
    std::size_t operator()(const IsoKey& k) const {
        std::uint64_t h = k.pk * 0x9e3779b97f4a7c15ull ^ (std::uint64_t(k.t) << 17);
        h ^= h >> 29;
        return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ull);
    }
};

// An explicit element list. Closed under compose/inverse when produced by
// generate(); ad-hoc lists are used for element sets under construction.
struct Group {
    int n = 0;
    std::vector<Isometry> elems;

    int order() const { return static_cast<int>(elems.size()); }
    bool contains(const Isometry& g) const;
};

Group generate(int n, const std::vector<Isometry>& gens);
int element_order(const Isometry& g);

// Lazy iteration over all of G_n; f returns false to stop early.
void for_each_element(int n, const std::function<bool(const Isometry&)>& f);

// Isometry text format: ((23)(47)(68), 100100101); identity cycles print
// as "id". Coordinates are 1-based.
std::string format_isometry(const Isometry& g);
Isometry parse_isometry(const std::string& s, int n);

}  // namespace hcube
