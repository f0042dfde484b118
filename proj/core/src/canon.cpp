#include "hcube/canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hcube {

namespace {

// Search for the minimal image of a code under G_n among images containing
// the zero word. Codes are ordered by the sequence, over k = 1..n, of
// their sorted multisets of k-coordinate prefixes; the k = n level pins
// the word set, so this is a total order. The DFS assigns output columns
// most significant first and only descends into columns achieving the
// greedy minimum, which visits exactly the minimal leaves.
struct CanonSearch {
    int n = 0;
    int M = 0;
    bool have_best = false;
    bool abort_on_better = false;
    bool found_better = false;
    std::vector<std::vector<word_t>> best;  // best[k] = sorted (k+1)-bit prefixes
    std::vector<std::pair<word_t, std::vector<std::uint8_t>>> certs;  // (translation, column order)

    std::vector<word_t> cur_words;  // translated input, fixed order
    word_t cur_translation = 0;
    std::vector<std::uint8_t> cols;

    void seed_best_from(const Code& c) {
        best.assign(n, {});
        for (int k = 0; k < n; ++k) {
            std::vector<word_t> pref;
            pref.reserve(c.words.size());
            for (word_t w : c.words) pref.push_back(w >> (n - 1 - k));
            std::sort(pref.begin(), pref.end());
            best[k] = std::move(pref);
        }
        have_best = true;
    }

    void run(const Code& c) {
        if (best.empty()) best.assign(n, {});
        for (word_t t : c.words) {
            cur_translation = t;
            cur_words.clear();
            for (word_t w : c.words) cur_words.push_back(w ^ t);
            cols.clear();
            std::vector<word_t> pref(M, 0);
            dfs(0, pref, have_best, (word_t(1) << n) - 1);
            if (found_better) return;
        }
    }

    void dfs(int depth, const std::vector<word_t>& pref, bool tied, word_t unused) {
        if (found_better) return;
        if (depth == n) {
            if (!tied) {
                have_best = true;
                certs.clear();
            }
            certs.emplace_back(cur_translation, cols);
            return;
        }
        // evaluate every unused column, keep the greedy minimum
        std::vector<word_t> min_sorted;
        std::vector<std::pair<int, std::vector<word_t>>> winners;  // (col, new prefixes, aligned)
        word_t rest = unused;
        while (rest) {
            const int b = std::countr_zero(rest);
            rest &= rest - 1;
            const int col = n - 1 - b;  // coordinate index, 0-based
            std::vector<word_t> np(M);
            for (int i = 0; i < M; ++i)
                np[i] = (pref[i] << 1) | ((cur_words[i] >> b) & 1u);
            std::vector<word_t> sorted = np;
            std::sort(sorted.begin(), sorted.end());
            if (winners.empty() || sorted < min_sorted) {
                min_sorted = std::move(sorted);
                winners.clear();
                winners.emplace_back(col, std::move(np));
            } else if (sorted == min_sorted) {
                winners.emplace_back(col, std::move(np));
            }
        }
        if (tied) {
            if (min_sorted > best[depth]) return;
            if (min_sorted < best[depth]) {
                if (abort_on_better) {
                    found_better = true;
                    return;
                }
                tied = false;
            }
        }
        if (!tied) best[depth] = min_sorted;
        for (auto& [col, np] : winners) {
            cols.push_back(static_cast<std::uint8_t>(col));
            dfs(depth + 1, np, tied, unused & ~(word_t(1) << (n - 1 - col)));
            cols.pop_back();
            if (found_better) return;
            // after a strictly-better subtree, siblings retie against it
            if (!tied) tied = true;
        }
    }

    Isometry make_cert(const std::pair<word_t, std::vector<std::uint8_t>>& c) const {
        std::vector<std::uint8_t> perm(n);
        word_t t = 0;
        for (int k = 0; k < n; ++k) {
            const int col = c.second[k];
            perm[col] = static_cast<std::uint8_t>(k);
            t |= ((c.first >> (n - 1 - col)) & 1u) << (n - 1 - k);
        }
        return Isometry(n, std::move(perm), t);
    }
};

void check_canon_input(const Code& c) {
    if (c.words.empty()) throw std::invalid_argument("canonical_form: empty code");
    if (!is_even_code(c)) throw std::invalid_argument("canonical_form: odd-weight codeword present");
}

}  // namespace

CanonicalForm canonical_form(const Code& c) {
    check_canon_input(c);
    CanonSearch s;
    s.n = c.length;
    s.M = c.size();
    s.run(c);
    CanonicalForm out;
    out.code = Code(c.length, s.best.back());
    out.certificate = s.make_cert(s.certs.front());
    return out;
}

bool is_canonical(const Code& c) {
    check_canon_input(c);
    CanonSearch s;
    s.n = c.length;
    s.M = c.size();
    s.seed_best_from(c);
    s.abort_on_better = true;
    s.run(c);
    if (s.found_better) return false;
    // no strictly smaller image; equality holds iff some image matches,
    // which requires c itself to contain the zero word
    return !s.certs.empty() && Code(c.length, s.best.back()) == c;
}

bool are_equivalent(const Code& c, const Code& d) {
    if (c.length != d.length) throw std::invalid_argument("are_equivalent: length mismatch");
    if (c.size() != d.size()) return false;
    return canonical_form(c).code == canonical_form(d).code;
}

Group automorphism_group(const Code& c) {
    check_canon_input(c);
    CanonSearch s;
    s.n = c.length;
    s.M = c.size();
    s.run(c);
    const Isometry g0inv = inverse(s.make_cert(s.certs.front()));
    Group aut;
    aut.n = c.length;
    aut.elems.reserve(s.certs.size());
    for (const auto& cert : s.certs) aut.elems.push_back(compose(g0inv, s.make_cert(cert)));
    std::sort(aut.elems.begin(), aut.elems.end());
    return aut;
}

namespace {

std::vector<IsoKey> group_keyset(const std::vector<Isometry>& elems) {
    std::vector<IsoKey> ks;
    ks.reserve(elems.size());
    for (const auto& g : elems) ks.push_back(iso_key(g));
    std::sort(ks.begin(), ks.end());
    return ks;
}

bool is_prime(int m) {
    if (m < 2) return false;
    for (int f = 2; f * f <= m; ++f)
        if (m % f == 0) return false;
    return true;
}

}  // namespace

std::vector<Group> subgroups_of_orders(const Group& G, const std::set<int>& orders) {
    for (int m : orders)
        if (!(m == 4 || is_prime(m)))
            throw std::invalid_argument("subgroups_of_orders: order must be 4 or prime, got " +
                                        std::to_string(m));
    std::vector<int> elem_order(G.elems.size());
    for (std::size_t i = 0; i < G.elems.size(); ++i) elem_order[i] = element_order(G.elems[i]);

    std::map<std::vector<IsoKey>, Group> found;
    auto add = [&](std::vector<Isometry> elems) {
        std::sort(elems.begin(), elems.end());
        auto ks = group_keyset(elems);
        if (!found.count(ks)) {
            Group H;
            H.n = G.n;
            H.elems = std::move(elems);
            found.emplace(std::move(ks), std::move(H));
        }
    };

    for (int m : orders) {
        if (is_prime(m) || m == 4) {
            for (std::size_t i = 0; i < G.elems.size(); ++i) {
                if (elem_order[i] != m) continue;
                std::vector<Isometry> elems{Isometry::identity(G.n)};
                Isometry cur = G.elems[i];
                for (int k = 1; k < m; ++k) {
                    elems.push_back(cur);
                    cur = compose(G.elems[i], cur);
                }
                add(std::move(elems));
            }
        }
        if (m == 4) {
            // Klein groups from commuting pairs of involutions
            std::vector<std::size_t> invs;
            for (std::size_t i = 0; i < G.elems.size(); ++i)
                if (elem_order[i] == 2) invs.push_back(i);
            for (std::size_t a = 0; a < invs.size(); ++a) {
                for (std::size_t b = a + 1; b < invs.size(); ++b) {
                    const Isometry& x = G.elems[invs[a]];
                    const Isometry& y = G.elems[invs[b]];
                    Isometry xy = compose(x, y);
                    if (xy != compose(y, x)) continue;
                    add({Isometry::identity(G.n), x, y, xy});
                }
            }
        }
    }
    std::vector<Group> out;
    out.reserve(found.size());
    for (auto& [ks, H] : found) out.push_back(std::move(H));
    return out;
}

std::vector<Subgroup> nonconjugate_subgroups(const Group& G, const std::set<int>& orders) {
    std::vector<Group> subs = subgroups_of_orders(G, orders);
    std::map<std::vector<IsoKey>, std::size_t> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index[group_keyset(subs[i].elems)] = i;

    std::vector<bool> visited(subs.size(), false);
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (visited[i]) continue;
        std::set<std::vector<IsoKey>> orbit_keys;
        for (const Isometry& g : G.elems) {
            const Isometry ginv = inverse(g);
            std::vector<Isometry> conj;
            conj.reserve(subs[i].elems.size());
            for (const Isometry& s : subs[i].elems) conj.push_back(compose(g, compose(s, ginv)));
            auto ks = group_keyset(conj);
            auto it = index.find(ks);
            if (it == index.end())
                throw std::logic_error("nonconjugate_subgroups: conjugate missing from enumeration");
            visited[it->second] = true;
            orbit_keys.insert(std::move(ks));
        }
        Subgroup rep;
        rep.elements = subs[i];
        rep.order = subs[i].order();
        rep.conjugates = static_cast<long>(orbit_keys.size());
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Code> orbit(const Code& c, const Group& H) {
    std::vector<Code> out;
    for (const Isometry& h : H.elems) out.push_back(apply_code(h, c));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hcube
