#include "hcube/extend.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hcube/cover.hpp"

namespace hcube {

std::vector<std::vector<int>> enumerate_size_tuples(int total, int k, int cap) {
    if (k < 1 || total < 0 || cap < 0)
        throw std::invalid_argument("enumerate_size_tuples: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int remaining) -> void {
        if (left == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int s = 0; s <= std::min(cap, remaining); ++s) {
            if (remaining - s > (left - 1) * cap) continue;
            cur.push_back(s);
            self(self, left - 1, remaining - s);
            cur.pop_back();
        }
    };
    rec(rec, k, total);
    return out;
}

namespace {

std::vector<word_t> odd_words(int n) {
    std::vector<word_t> out;
    for (word_t w = 0; w < (word_t(1) << n); ++w)
        if (weight(w) & 1) out.push_back(w);
    return out;
}

}  // namespace

std::vector<Code> candidate_codes(const Code& base, int M) {
    const int n = base.length;
    std::vector<word_t> pool;
    for (word_t w : odd_words(n)) {
        bool ok = true;
        for (word_t u : base.words)
            if (distance(u, w) < 3) {
                ok = false;
                break;
            }
        if (ok) pool.push_back(w);
    }
    std::vector<Code> out;
    if (M == 0) {
        out.emplace_back(n, std::vector<word_t>{});
        return out;
    }
    if (static_cast<int>(pool.size()) < M) return out;
    const CompatGraph g = build_compat_graph(pool, n, 4);
    cliques_of_size(g, M, std::nullopt, [&](const Code& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

ExtendResult extend_partition(const Partition& base, const ExtendOptions& opts) {
    const int n = base.length;
    check_length(n + 1);
    const int k = base.num_codes();
    const std::vector<word_t> odds = odd_words(n);
    const int n_odd = static_cast<int>(odds.size());
    std::map<word_t, int> odd_atom;
    for (int i = 0; i < n_odd; ++i) odd_atom[odds[i]] = k + i;

    ExtendResult res;
    // candidate size-M complements per (code, M), filled on demand
    std::map<std::pair<int, int>, std::vector<Code>> cache;
    auto candidates = [&](int ci, int M) -> const std::vector<Code>& {
        auto it = cache.find({ci, M});
        if (it == cache.end())
            it = cache.emplace(std::pair<int, int>{ci, M},
                               candidate_codes(base.codes[ci], M)).first;
        return it->second;
    };

    auto assemble = [&](const std::vector<std::pair<int, const Code*>>& picks) {
        std::vector<Code> cs;
        for (const auto& [ci, ext] : picks) {
            std::vector<word_t> ws;
            for (word_t w : base.codes[ci].words) ws.push_back(w);
            for (word_t w : ext->words) ws.push_back(w | (word_t(1) << n));
            cs.emplace_back(n + 1, std::move(ws));
        }
        Partition p(n + 1, std::move(cs));
        if (!is_admissible(p) || !covers_even_space(p))
            throw std::logic_error("extend_partition: assembled partition invalid");
        if (!res.extension) res.extension = std::move(p);
        ++res.extensions_found;
    };

    // Note: E^(n+1) = 0 E^n + 1 O^n, so the new halves must exactly cover
    // O^n; the cover universe is {code labels} + O^n so empty halves count.
    // Half sizes are capped by the largest distance->=4 code over O^n.
    const int cap = max_clique(build_compat_graph(odds, n, 4)).first;
    const auto tuples = enumerate_size_tuples(n_odd, k, cap);
    int tuple_idx = 0;
    for (const auto& tuple : tuples) {
        ++tuple_idx;
        ++res.tuples_tried;
        CoverInstance inst;
        inst.n_atoms = k + n_odd;
        std::vector<std::pair<int, const Code*>> row_src;  // row id -> (code, ext)
        bool feasible = true;
        for (int ci = 0; ci < k && feasible; ++ci) {
            const std::vector<Code>& cands = candidates(ci, tuple[ci]);
            if (cands.empty()) feasible = false;
            for (const Code& ext : cands) {
                CoverRow row;
                row.id = static_cast<int>(row_src.size());
                row.weight = 1;
                row.atoms.push_back(ci);
                for (word_t w : ext.words) row.atoms.push_back(odd_atom.at(w));
                row_src.emplace_back(ci, &ext);
                inst.rows.push_back(std::move(row));
            }
        }
        if (!feasible) continue;
        exact_cover(inst, [&](const std::vector<int>& sel) {
            std::vector<std::pair<int, const Code*>> picks;
            for (int id : sel) picks.push_back(row_src[id]);
            assemble(picks);
            return !(opts.first_only && res.extension);
        });
        if (opts.progress) opts.progress(tuple_idx, res.extensions_found);
        if (opts.first_only && res.extension) break;
    }
    return res;
}

}  // namespace hcube
