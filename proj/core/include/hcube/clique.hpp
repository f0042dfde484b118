#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hcube/code.hpp"
#include "hcube/word.hpp"

namespace hcube {

// Compatibility graph over words: edge iff Hamming distance >= d, so a
// clique is exactly a code of minimum distance >= d. Adjacency rows are
// bitsets so candidate intersection is word-parallel.
struct CompatGraph {
    int length = 0;  // word length
    int d = 0;
    std::vector<word_t> vertices;       // fixed order, as given
    std::vector<std::uint64_t> adj;     // nv rows of `wpr` 64-bit words
    int wpr = 0;

    int nv() const { return static_cast<int>(vertices.size()); }
    const std::uint64_t* row(int v) const { return adj.data() + std::size_t(v) * wpr; }
    bool edge(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
};

CompatGraph build_compat_graph(const std::vector<word_t>& words, int length, int d);

// Size of a maximum clique and one witness; branch and bound with a greedy
// coloring bound. 0 on an empty vertex set.
std::pair<int, Code> max_clique(const CompatGraph& g);

// Every clique of exactly size m (containing `anchor` when given), each
// once, in the deterministic order induced by vertex indices. The callback
// returns false to stop the enumeration.
void cliques_of_size(const CompatGraph& g, int m, std::optional<word_t> anchor,
                     const std::function<bool(const Code&)>& emit);

long long count_cliques_of_size(const CompatGraph& g, int m,
                                std::optional<word_t> anchor = std::nullopt);

}  // namespace hcube
