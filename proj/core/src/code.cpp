#include "hcube/code.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hcube {

Code::Code(int n, std::vector<word_t> ws) : length(n), words(std::move(ws)) {
    check_length(n);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (word_t w : words)
        if (n < kMaxLength && (w >> n) != 0)
            throw std::invalid_argument("codeword exceeds length " + std::to_string(n));
}

bool Code::contains(word_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

int min_distance(const Code& c) {
    if (c.size() < 2) return kDistanceUndefined;
    int best = kDistanceUndefined;
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            best = std::min(best, distance(c.words[i], c.words[j]));
    return best;
}

bool min_distance_at_least(const Code& c, int d) {
    for (std::size_t i = 0; i < c.words.size(); ++i)
        for (std::size_t j = i + 1; j < c.words.size(); ++j)
            if (distance(c.words[i], c.words[j]) < d) return false;
    return true;
}

bool is_even_code(const Code& c) {
    for (word_t w : c.words)
        if (weight(w) & 1) return false;
    return true;
}

Code read_codelist(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw std::invalid_argument("codelist: no codewords");
    const int n = static_cast<int>(lines.front().size());
    check_length(n);
    std::vector<word_t> words;
    for (const auto& l : lines) words.push_back(parse_word(l, n));
    return Code(n, std::move(words));
}

Code read_codelist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_codelist(in);
}

void write_codelist(std::ostream& out, const Code& c) {
    for (word_t w : c.words) out << format_word(w, c.length) << '\n';
}

void write_codelist_file(const std::string& path, const Code& c) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_codelist(out, c);
}

}  // namespace hcube
