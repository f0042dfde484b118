#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcube {

// A point of Z_2^n, n <= 32. Coordinate i (1-based, as printed) lives at
// bit position n-i, so numeric order of the raw bits equals the
// left-to-right lexicographic order of the printed words.
using word_t = std::uint32_t;

constexpr int kMaxLength = 32;

struct Word {
    word_t bits = 0;
    int length = 0;

    friend auto operator<=>(const Word&, const Word&) = default;
};

inline void check_length(int n) {
    if (n < 1 || n > kMaxLength)
        throw std::invalid_argument("word length out of range [1,32]: " + std::to_string(n));
}

inline int weight(word_t w) { return std::popcount(w); }
inline int weight(const Word& w) { return std::popcount(w.bits); }

inline int distance(word_t u, word_t v) { return std::popcount(u ^ v); }

inline int distance(const Word& u, const Word& v) {
    if (u.length != v.length)
        throw std::invalid_argument("distance: length mismatch");
    return std::popcount(u.bits ^ v.bits);
}

// All 2^(n-1) even-weight words of length n, increasing numeric order.
std::vector<word_t> enumerate_even_bits(int n);
std::vector<Word> enumerate_even(int n);

// Appends the parity bit making total weight even; maps Z_2^n onto E^(n+1).
inline Word add_parity(const Word& w) {
    check_length(w.length + 1);
    return Word{static_cast<word_t>((w.bits << 1) | (weight(w) & 1u)), w.length + 1};
}

// For even words: E^n -> {0 .. 2^(n-1)-1}. Exactly one of {2k, 2k+1} is even.
inline int even_index(word_t w) { return static_cast<int>(w >> 1); }

std::string format_word(word_t bits, int n);
word_t parse_word(const std::string& s, int n);

}  // namespace hcube
