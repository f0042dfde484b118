#include "hcube/clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hcube {

namespace {

struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int n) : w((n + 63) / 64, 0) {}
    Bits(const std::uint64_t* src, int wpr) : w(src, src + wpr) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void clear(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    int count() const {
        int s = 0;
        for (auto x : w) s += std::popcount(x);
        return s;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    void and_with(const std::uint64_t* other) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
    }
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                f(int(i * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

}  // namespace

CompatGraph build_compat_graph(const std::vector<word_t>& words, int length, int d) {
    CompatGraph g;
    g.length = length;
    g.d = d;
    g.vertices = words;
    const int nv = g.nv();
    g.wpr = (nv + 63) / 64;
    g.adj.assign(std::size_t(nv) * g.wpr, 0);
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (distance(words[i], words[j]) >= d) {
                g.adj[std::size_t(i) * g.wpr + (j >> 6)] |= std::uint64_t(1) << (j & 63);
                g.adj[std::size_t(j) * g.wpr + (i >> 6)] |= std::uint64_t(1) << (i & 63);
            }
    return g;
}

namespace {

// Greedy coloring of the candidate set; returns vertices ordered by color
// with their color numbers (Tomita-style bound).
void color_sort(const CompatGraph& g, const Bits& cand, std::vector<int>& order,
                std::vector<int>& colors) {
    order.clear();
    colors.clear();
    Bits uncolored = cand;
    int color = 0;
    while (!uncolored.empty()) {
        ++color;
        Bits avail = uncolored;
        while (!avail.empty()) {
            int v = -1;
            for (std::size_t i = 0; i < avail.w.size() && v < 0; ++i)
                if (avail.w[i]) v = int(i * 64 + std::countr_zero(avail.w[i]));
            avail.clear(v);
            uncolored.clear(v);
            // remove neighbours from this color class
            for (std::size_t i = 0; i < avail.w.size(); ++i) avail.w[i] &= ~g.row(v)[i];
            order.push_back(v);
            colors.push_back(color);
        }
    }
}

// Vertex-order search: c[i] is the largest clique inside {v_i, ..., v_N-1},
// filled back to front; each step can raise the record by at most one, so a
// branch returns as soon as the record improves.
struct MaxCliqueSearch {
    const CompatGraph& g;
    std::vector<int> c;
    std::vector<int> best;
    std::vector<int> current;
    bool improved = false;

    explicit MaxCliqueSearch(const CompatGraph& gr) : g(gr), c(gr.nv() + 1, 0) {}

    void expand(Bits cand) {
        if (cand.empty()) {
            if (current.size() > best.size()) {
                best = current;
                improved = true;
            }
            return;
        }
        while (!cand.empty()) {
            if (current.size() + cand.count() <= best.size()) return;
            int v = -1;
            for (std::size_t i = 0; i < cand.w.size() && v < 0; ++i)
                if (cand.w[i]) v = int(i * 64 + std::countr_zero(cand.w[i]));
            if (current.size() + c[v] <= best.size()) return;
            cand.clear(v);
            current.push_back(v);
            Bits next = cand;
            next.and_with(g.row(v));
            expand(std::move(next));
            current.pop_back();
            if (improved) return;
        }
    }

    void run() {
        for (int i = g.nv() - 1; i >= 0; --i) {
            improved = false;
            Bits cand(g.nv());
            for (int j = i + 1; j < g.nv(); ++j)
                if (g.edge(i, j)) cand.set(j);
            current.push_back(i);
            expand(std::move(cand));
            current.pop_back();
            c[i] = improved ? c[i + 1] + 1 : c[i + 1];
        }
    }
};

// Plain branch and bound on an explicit word set.
std::vector<word_t> plain_max(const std::vector<word_t>& words, int length, int d) {
    if (words.empty()) return {};
    CompatGraph g = build_compat_graph(words, length, d);
    MaxCliqueSearch s(g);
    s.run();
    std::vector<word_t> ws;
    for (int v : s.best) ws.push_back(g.vertices[v]);
    return ws;
}

// True when the vertex set is a union of full weight classes that is also
// closed under xor. Then translations by vertices and all coordinate
// permutations are graph automorphisms (distance is invariant under both),
// so cliques can be normalized before searching.
bool is_symmetric_space(const CompatGraph& g) {
    const int nv = g.nv();
    if (nv == 0 || nv > 4096) return false;
    std::vector<word_t> sorted = g.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] != 0) return false;
    auto member = [&](word_t w) {
        return std::binary_search(sorted.begin(), sorted.end(), w);
    };
    std::vector<long> per_weight(g.length + 1, 0);
    for (word_t w : sorted) {
        if (w >> g.length) return false;
        ++per_weight[weight(w)];
    }
    for (int w = 0; w <= g.length; ++w) {
        if (per_weight[w] == 0) continue;
        long full = 1;
        for (int i = 0; i < w; ++i) full = full * (g.length - i) / (i + 1);
        if (per_weight[w] != full) return false;
    }
    for (word_t a : sorted)
        for (word_t b : sorted)
            if (!member(a ^ b)) return false;
    return true;
}

// Normalized search: anchor the clique at 0 (translate by any member), map
// its minimum-weight other word to the first weight-w word by a coordinate
// permutation, then map a key-minimal third word -- key = (weight, overlap
// with the second word's support) -- to its orbit representative under the
// stabilizer of the first two. Each level only shrinks the candidate set.
std::pair<int, Code> symmetric_max(const CompatGraph& g) {
    const int n = g.length, d = g.d;
    std::vector<word_t> best = {0};
    std::vector<int> weights;
    for (word_t v : g.vertices)
        if (weight(v) >= d && weight(v) > 0) weights.push_back(weight(v));
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    for (int w : weights) {
        const word_t rep = (word_t(1) << w) - 1;
        std::vector<word_t> sub;
        for (word_t x : g.vertices)
            if (x != 0 && x != rep && weight(x) >= w && weight(x) >= d &&
                distance(x, rep) >= d)
                sub.push_back(x);
        if (best.size() < 2) best = {0, rep};
        auto key = [&](word_t x) {
            return std::pair<int, int>(weight(x), weight(x & rep));
        };
        std::vector<std::pair<int, int>> keys;
        for (word_t x : sub) keys.push_back(key(x));
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (auto [q, j] : keys) {
            const word_t t = ((word_t(1) << j) - 1) | (((word_t(1) << (q - j)) - 1) << w);
            std::vector<word_t> cand;
            for (word_t x : sub)
                if (x != t && distance(x, t) >= d && key(x) >= std::pair<int, int>(q, j))
                    cand.push_back(x);
            if (cand.size() + 3 <= best.size()) continue;
            std::vector<word_t> inner = plain_max(cand, n, d);
            if (inner.size() + 3 > best.size()) {
                best = {0, rep, t};
                best.insert(best.end(), inner.begin(), inner.end());
            }
        }
    }
    return {int(best.size()), Code(n, std::move(best))};
}

}  // namespace

std::pair<int, Code> max_clique(const CompatGraph& g) {
    if (g.nv() == 0) return {0, Code(g.length, {})};
    if (is_symmetric_space(g)) return symmetric_max(g);
    MaxCliqueSearch s(g);
    s.run();
    std::vector<word_t> ws;
    for (int v : s.best) ws.push_back(g.vertices[v]);
    return {int(s.best.size()), Code(g.length, std::move(ws))};
}

namespace {

struct SizeEnum {
    const CompatGraph& g;
    int m;
    const std::function<bool(const Code&)>& emit;
    std::vector<int> current;
    bool stopped = false;

    bool color_bound_fails(const Bits& cand, int needed) {
        // cheap greedy-coloring upper bound on the largest clique in cand
        Bits uncolored = cand;
        int color = 0;
        while (!uncolored.empty() && color < needed) {
            ++color;
            Bits avail = uncolored;
            while (!avail.empty()) {
                int v = -1;
                for (std::size_t i = 0; i < avail.w.size() && v < 0; ++i)
                    if (avail.w[i]) v = int(i * 64 + std::countr_zero(avail.w[i]));
                avail.clear(v);
                uncolored.clear(v);
                for (std::size_t i = 0; i < avail.w.size(); ++i) avail.w[i] &= ~g.row(v)[i];
            }
        }
        return color < needed;
    }

    void dfs(const Bits& cand) {
        if (stopped) return;
        const int needed = m - int(current.size());
        if (needed == 0) {
            std::vector<word_t> ws;
            for (int v : current) ws.push_back(g.vertices[v]);
            if (!emit(Code(g.length, std::move(ws)))) stopped = true;
            return;
        }
        if (cand.count() < needed) return;
        if (needed > 2 && color_bound_fails(cand, needed)) return;
        // branch on vertices in index order; candidates after the branch
        // vertex only, so each clique appears once
        std::vector<int> vs;
        cand.for_each([&](int v) { vs.push_back(v); });
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (int(vs.size() - i) < needed) break;
            const int v = vs[i];
            current.push_back(v);
            Bits next = cand;
            for (std::size_t k = 0; k < next.w.size(); ++k) next.w[k] &= g.row(v)[k];
            // drop vertices with index <= v
            for (std::size_t j = 0; j <= i; ++j) next.clear(vs[j]);
            dfs(next);
            current.pop_back();
            if (stopped) return;
        }
    }
};

}  // namespace

void cliques_of_size(const CompatGraph& g, int m, std::optional<word_t> anchor,
                     const std::function<bool(const Code&)>& emit) {
    if (m < 1) throw std::invalid_argument("cliques_of_size: m must be >= 1");
    SizeEnum s{g, m, emit, {}, false};
    Bits cand(g.nv());
    if (anchor) {
        int av = -1;
        for (int v = 0; v < g.nv(); ++v)
            if (g.vertices[v] == *anchor) av = v;
        if (av < 0) throw std::invalid_argument("cliques_of_size: anchor is not a vertex");
        s.current.push_back(av);
        for (int v = 0; v < g.nv(); ++v)
            if (g.edge(av, v)) cand.set(v);
    } else {
        for (int v = 0; v < g.nv(); ++v) cand.set(v);
    }
    s.dfs(cand);
}

long long count_cliques_of_size(const CompatGraph& g, int m, std::optional<word_t> anchor) {
    long long count = 0;
    cliques_of_size(g, m, anchor, [&](const Code&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace hcube
