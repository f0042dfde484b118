#include "hcube/word.hpp"

namespace hcube {

std::vector<word_t> enumerate_even_bits(int n) {
    check_length(n);
    std::vector<word_t> out;
    out.reserve(std::size_t(1) << (n - 1));
    const std::uint64_t top = std::uint64_t(1) << n;
    for (std::uint64_t w = 0; w < top; ++w)
        if ((std::popcount(w) & 1) == 0) out.push_back(static_cast<word_t>(w));
    return out;
}

std::vector<Word> enumerate_even(int n) {
    std::vector<Word> out;
    for (word_t w : enumerate_even_bits(n)) out.push_back(Word{w, n});
    return out;
}

std::string format_word(word_t bits, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> (n - 1 - i)) & 1u) s[i] = '1';
    return s;
}

word_t parse_word(const std::string& s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("word '" + s + "': expected " + std::to_string(n) + " characters");
    word_t w = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("word '" + s + "': invalid character");
        w = (w << 1) | word_t(ch - '0');
    }
    return w;
}

}  // namespace hcube
