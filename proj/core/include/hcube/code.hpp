#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "hcube/word.hpp"

namespace hcube {

// min_distance of a code with fewer than two words; compares greater than
// any real distance so admissibility checks accept singletons uniformly.
constexpr int kDistanceUndefined = std::numeric_limits<int>::max();

// A duplicate-free set of words of common length, stored sorted ascending
// so equal codes compare bytewise equal.
struct Code {
    int length = 0;
    std::vector<word_t> words;

    Code() = default;
    Code(int n, std::vector<word_t> ws);

    int size() const { return static_cast<int>(words.size()); }
    bool contains(word_t w) const;

    friend auto operator<=>(const Code&, const Code&) = default;
};

int min_distance(const Code& c);

// True when every pair is at distance >= d (vacuously for |c| <= 1).
bool min_distance_at_least(const Code& c, int d);

bool is_even_code(const Code& c);

// Codelist format: one codeword per line, exactly n chars of {0,1};
// blank lines and '#' comments ignored; n inferred from the first word.
Code read_codelist(std::istream& in);
Code read_codelist_file(const std::string& path);
void write_codelist(std::ostream& out, const Code& c);
void write_codelist_file(const std::string& path, const Code& c);

}  // namespace hcube
