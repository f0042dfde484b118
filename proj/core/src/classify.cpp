#include "hcube/classify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "hcube/canon.hpp"
#include "hcube/clique.hpp"

namespace hcube {

namespace {

struct WordsHash {
    std::size_t operator()(const std::vector<word_t>& ws) const {
        std::uint64_t h = 1469598103934665603ull;
        for (word_t w : ws) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

void write_outputs(const ClassificationResult& r, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "class_%06zu.txt", i);
        write_codelist_file((fs::path(dir) / name).string(), r.representatives[i]);
    }
}

// Anchored engine. Every class has a member in normalized position: the
// zero word (translate any codeword to zero), a minimum-weight second word
// moved onto the first coordinates (coordinate permutation), and a
// key-minimal third word -- key = (weight, overlap with the second word's
// support) -- moved to its orbit representative under the stabilizer of
// the first two. Enumerating only such cliques still meets every class;
// duplicates collapse through the canonical form.
ClassificationResult classify_anchored(int n, int M, int d, const ClassifyOptions& opts) {
    ClassificationResult r;
    r.n = n;
    r.M = M;
    r.d = d;
    std::unordered_set<std::vector<word_t>, WordsHash> found;
    long long seen = 0;
    auto consider = [&](std::vector<word_t> ws) {
        ++seen;
        Code canon = canonical_form(Code(n, std::move(ws))).code;
        if (found.insert(canon.words).second) r.representatives.push_back(std::move(canon));
        if (opts.progress && (seen & 0xfff) == 0)
            opts.progress(seen, static_cast<long long>(r.representatives.size()));
    };
    const std::vector<word_t> even = enumerate_even_bits(n);
    if (M == 1) {
        consider({0});
    } else {
        std::vector<int> ws_weights;
        for (word_t v : even)
            if (weight(v) >= d) ws_weights.push_back(weight(v));
        std::sort(ws_weights.begin(), ws_weights.end());
        ws_weights.erase(std::unique(ws_weights.begin(), ws_weights.end()), ws_weights.end());
        for (int w : ws_weights) {
            const word_t rep = (word_t(1) << w) - 1;
            if (M == 2) {
                consider({0, rep});
                continue;
            }
            std::vector<word_t> sub;
            for (word_t x : even)
                if (x != 0 && x != rep && weight(x) >= w && weight(x) >= d &&
                    distance(x, rep) >= d)
                    sub.push_back(x);
            auto key = [&](word_t x) {
                return std::pair<int, int>(weight(x), weight(x & rep));
            };
            std::vector<std::pair<int, int>> keys;
            for (word_t x : sub) keys.push_back(key(x));
            std::sort(keys.begin(), keys.end());
            keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
            for (auto [q, j] : keys) {
                const word_t t =
                    ((word_t(1) << j) - 1) | (((word_t(1) << (q - j)) - 1) << w);
                std::vector<word_t> cand;
                for (word_t x : sub)
                    if (x != t && distance(x, t) >= d && key(x) >= std::pair<int, int>(q, j))
                        cand.push_back(x);
                if (M == 3) {
                    consider({0, rep, t});
                    continue;
                }
                if (static_cast<int>(cand.size()) < M - 3) continue;
                const CompatGraph g = build_compat_graph(cand, n, d);
                cliques_of_size(g, M - 3, std::nullopt, [&](const Code& c) {
                    std::vector<word_t> full = c.words;
                    full.push_back(0);
                    full.push_back(rep);
                    full.push_back(t);
                    consider(std::move(full));
                    return true;
                });
            }
        }
    }
    std::sort(r.representatives.begin(), r.representatives.end());
    for (const Code& c : r.representatives)
        r.aut_orders.push_back(automorphism_group(c).order());
    if (opts.progress) opts.progress(seen, static_cast<long long>(r.representatives.size()));
    return r;
}

ClassificationResult classify_augmentation(int n, int M, int d, const ClassifyOptions& opts) {
    ClassificationResult r;
    r.n = n;
    r.M = M;
    r.d = d;
    const std::vector<word_t> even = enumerate_even_bits(n);
    std::vector<Code> level{canonical_form(Code(n, {0})).code};
    for (int size = 1; size < M; ++size) {
        std::unordered_set<std::vector<word_t>, WordsHash> next_digests;
        std::vector<Code> next;
        long long seen = 0;
        for (const Code& c : level) {
            for (word_t w : even) {
                if (c.contains(w)) continue;
                bool ok = true;
                for (word_t u : c.words)
                    if (distance(u, w) < d) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<word_t> ws = c.words;
                ws.push_back(w);
                Code grown(n, std::move(ws));
                Code canon = canonical_form(grown).code;
                ++seen;
                if (next_digests.insert(canon.words).second) next.push_back(std::move(canon));
            }
            if (opts.progress)
                opts.progress(seen, static_cast<long long>(next.size()));
        }
        level = std::move(next);
        std::sort(level.begin(), level.end());
    }
    r.representatives = std::move(level);
    for (const Code& c : r.representatives) r.aut_orders.push_back(automorphism_group(c).order());
    return r;
}

}  // namespace

ClassificationResult classify_codes(int n, int M, int d, const ClassifyOptions& opts) {
    check_length(n);
    if (M < 1) throw std::invalid_argument("classify_codes: M must be positive");
    ClassificationResult r = opts.method == ClassifyMethod::AnchoredClique
                                 ? classify_anchored(n, M, d, opts)
                                 : classify_augmentation(n, M, d, opts);
    if (opts.out_dir) write_outputs(r, *opts.out_dir);
    return r;
}

bool is_maximal(const Code& c) {
    for (word_t w : enumerate_even_bits(c.length)) {
        if (c.contains(w)) continue;
        bool fits = true;
        for (word_t u : c.words)
            if (distance(u, w) < 4) {
                fits = false;
                break;
            }
        if (fits) return false;
    }
    return true;
}

Code doubly_extended_hamming() {
    // (7,16,3) Hamming code: words whose set-bit coordinate labels XOR to 0.
    std::vector<word_t> words;
    for (word_t w = 0; w < 128; ++w) {
        unsigned syn = 0;
        for (int i = 1; i <= 7; ++i)
            if ((w >> (7 - i)) & 1u) syn ^= unsigned(i);
        if (syn == 0) words.push_back(w);
    }
    std::vector<word_t> out;
    for (word_t w : words) {
        Word w8 = add_parity(Word{w, 7});
        Word w9 = add_parity(w8);
        out.push_back(w9.bits);
    }
    return Code(9, std::move(out));
}

}  // namespace hcube
