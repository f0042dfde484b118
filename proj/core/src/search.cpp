#include "hcube/search.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "hcube/cover.hpp"
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

}  // namespace

std::vector<std::vector<int>> enumerate_distributions(int space, int parts, int cap) {
    if (parts < 1 || cap < 1) throw std::invalid_argument("enumerate_distributions: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int prev, int left, int remaining) -> void {
        if (left == 0) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        for (int s = prev; s <= cap; ++s) {
            if (s > remaining) break;
            // nondecreasing continuation must be able to reach the target
            if (remaining - s > (left - 1) * cap) continue;
            if (left > 1 && remaining - s < (left - 1) * s) break;
            cur.push_back(s);
            self(self, s, left - 1, remaining - s);
            cur.pop_back();
        }
    };
    rec(rec, 1, parts, space);
    return out;
}

std::vector<SearchCase> search_cases() {
    // the six seed choices from the size-distribution case analysis
    std::vector<SearchCase> cs;
    cs.push_back({16, 0, std::nullopt, 12, 20, false});  // 16 + 12x20, seed 16
    cs.push_back({17, 1, 19, 11, 20, false});            // 17 + 19 + 11x20, seed 17
    cs.push_back({20, 2, 18, 10, 20, false});            // 2x18 + 11x20, seed 20
    cs.push_back({18, 2, 19, 10, 20, false});            // 18 + 2x19 + 10x20, seed 18
    cs.push_back({19, 3, 19, 9, 20, false});             // 4x19 + 9x20, seed 19
    cs.push_back({20, 4, 19, 8, 20, false});             // 4x19 + 9x20, seed 20
    return cs;
}

namespace {

// code as a bitmask over even-space indices; n <= 9 fits in four words
struct SpaceMask {
    std::array<std::uint64_t, 4> w{};
    bool intersects(const SpaceMask& o) const {
        for (int i = 0; i < 4; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    void add(const SpaceMask& o) {
        for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    }
};

SpaceMask mask_of(const std::vector<word_t>& words) {
    SpaceMask m;
    for (word_t wd : words) {
        const int idx = even_index(wd);
        m.w[idx >> 6] |= std::uint64_t(1) << (idx & 63);
    }
    return m;
}

}  // namespace

std::vector<OrbitSet> find_orbits(const Code& seed, int N, int M, const Group& H,
                                  const std::vector<Code>& class_reps) {
    const int n = seed.length;
    if (n > 9) throw std::invalid_argument("find_orbits: n > 9 unsupported");
    if (N == 0) return {};
    const SpaceMask seed_mask = mask_of(seed.words);

    // per-element word maps of H, shared across all candidates
    std::vector<std::vector<word_t>> htab;
    for (const Isometry& h : H.elems) {
        std::vector<word_t> t(std::size_t(1) << n);
        for (word_t w = 0; w < t.size(); ++w) t[w] = h.apply_bits(w);
        htab.push_back(std::move(t));
    }

    std::unordered_set<std::vector<word_t>, WordsHash> orbit_keys;
    std::vector<OrbitSet> out;
    const std::vector<word_t> evens = enumerate_even_bits(n);

    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t(0));
    std::vector<word_t> ptab(std::size_t(1) << n);
    do {
        // permutation word map, shared across translations
        for (word_t w = 0; w < ptab.size(); ++w) {
            word_t img = 0;
            word_t rest = w;
            while (rest) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                img |= word_t(1) << (n - 1 - p[n - 1 - b]);
            }
            ptab[w] = img;
        }
        for (const Code& rep : class_reps) {
            if (rep.size() != M) continue;
            std::vector<word_t> base;
            base.reserve(rep.words.size());
            for (word_t w : rep.words) base.push_back(ptab[w]);
            for (word_t t : evens) {
                std::vector<word_t> cand;
                cand.reserve(base.size());
                for (word_t w : base) cand.push_back(w ^ t);
                std::sort(cand.begin(), cand.end());
                const SpaceMask cm = mask_of(cand);
                if (cm.intersects(seed_mask)) continue;

                // build the H-orbit of the candidate
                std::vector<std::vector<word_t>> members{cand};
                std::unordered_set<std::vector<word_t>, WordsHash> memset{cand};
                bool ok = true;
                for (const auto& tab : htab) {
                    std::vector<word_t> img;
                    img.reserve(cand.size());
                    for (word_t w : cand) img.push_back(tab[w]);
                    std::sort(img.begin(), img.end());
                    if (memset.insert(img).second) {
                        if (static_cast<int>(members.size()) + 1 > N) {
                            ok = false;
                            break;
                        }
                        members.push_back(std::move(img));
                    }
                }
                if (!ok) continue;
                // members pairwise disjoint (all are disjoint from the seed
                // already because H stabilizes it)
                SpaceMask acc = mask_of(members[0]);
                for (std::size_t i = 1; ok && i < members.size(); ++i) {
                    const SpaceMask mi = mask_of(members[i]);
                    if (mi.intersects(acc) || mi.intersects(seed_mask))
                        ok = false;
                    else
                        acc.add(mi);
                }
                if (!ok) continue;
                std::sort(members.begin(), members.end());
                std::vector<word_t> key;
                for (const auto& m : members) {
                    key.push_back(word_t(m.size()));
                    key.insert(key.end(), m.begin(), m.end());
                }
                if (!orbit_keys.insert(std::move(key)).second) continue;
                OrbitSet os;
                for (auto& m : members) os.codes.emplace_back(n, std::move(m));
                std::sort(os.codes.begin(), os.codes.end());
                out.push_back(std::move(os));
            }
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

// codes of the least-frequent size; ties broken toward the smaller size
std::vector<const Code*> digest_bucket(const Partition& p) {
    std::map<int, std::vector<const Code*>> by_size;
    for (const Code& c : p.codes) by_size[c.size()].push_back(&c);
    const std::vector<const Code*>* best = nullptr;
    for (const auto& [sz, list] : by_size)
        if (!best || list.size() < best->size()) best = &list;
    return *best;
}

std::vector<word_t> flatten(const Partition& p) {
    std::vector<word_t> out;
    for (const Code& c : p.codes) {
        out.push_back(word_t(c.size()));
        out.insert(out.end(), c.words.begin(), c.words.end());
    }
    return out;
}

// every g with g * code == canonical_form(code)
std::vector<Isometry> canonical_maps(const Code& c) {
    const CanonicalForm cf = canonical_form(c);
    const Group aut = automorphism_group(c);
    std::vector<Isometry> out;
    out.reserve(aut.elems.size());
    for (const Isometry& a : aut.elems) out.push_back(compose(cf.certificate, a));
    return out;
}

}  // namespace

std::vector<word_t> partition_digest(const Partition& p) {
    std::vector<word_t> best;
    bool have = false;
    for (const Code* d : digest_bucket(p)) {
        for (const Isometry& g : canonical_maps(*d)) {
            std::vector<word_t> img = flatten(apply_partition(g, p));
            if (!have || img < best) {
                best = std::move(img);
                have = true;
            }
        }
    }
    return best;
}

Group partition_automorphisms(const Partition& p) {
    const std::vector<const Code*> bucket = digest_bucket(p);
    const Code& d1 = *bucket.front();
    const CanonicalForm cf1 = canonical_form(d1);
    const Group aut1 = automorphism_group(d1);
    Group out;
    out.n = p.length;
    for (const Code* dj : bucket) {
        const CanonicalForm cfj = canonical_form(*dj);
        if (cfj.code != cf1.code) continue;
        // transporter d1 -> dj
        const Isometry tau = compose(inverse(cfj.certificate), cf1.certificate);
        for (const Isometry& a : aut1.elems) {
            Isometry g = compose(tau, a);
            if (apply_partition(g, p) == p) out.elems.push_back(std::move(g));
        }
    }
    std::sort(out.elems.begin(), out.elems.end());
    return out;
}

std::vector<std::pair<Partition, long>> reject_isomorphs(const std::vector<Partition>& parts) {
    // digest-minimal member represents each class, so the result does not
    // depend on input order
    std::map<std::vector<word_t>, Partition> classes;
    for (const Partition& p : parts) {
        auto key = partition_digest(p);
        auto it = classes.find(key);
        if (it == classes.end())
            classes.emplace(std::move(key), p);
        else if (p < it->second)
            it->second = p;
    }
    std::vector<std::pair<Partition, long>> out;
    out.reserve(classes.size());
    for (auto& [key, p] : classes)
        out.emplace_back(p, partition_automorphisms(p).order());
    return out;
}

bool has_fixed_code_of_size(const Partition& p, const Group& H, int M) {
    for (const Code& c : p.codes) {
        if (c.size() != M) continue;
        bool fixed = true;
        for (const Isometry& h : H.elems)
            if (apply_code(h, c) != c) {
                fixed = false;
                break;
            }
        if (fixed) return true;
    }
    return false;
}

namespace {

struct ColorSearch {
    const CompatGraph& g;
    int k_colors;
    bool first_only;
    long long max_partitions;
    int clique_cap;
    std::vector<std::uint64_t> uncovered;  // bitset over vertices
    std::vector<Code> stack;
    std::vector<Partition> found;
    bool stopped = false;

    int first_uncovered() const {
        for (std::size_t i = 0; i < uncovered.size(); ++i)
            if (uncovered[i]) return int(i * 64 + std::countr_zero(uncovered[i]));
        return -1;
    }

    int count_uncovered() const {
        int s = 0;
        for (auto x : uncovered) s += std::popcount(x);
        return s;
    }

    void take(const std::vector<int>& verts) {
        std::vector<word_t> ws;
        for (int v : verts) {
            uncovered[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
            ws.push_back(g.vertices[v]);
        }
        stack.emplace_back(g.length, std::move(ws));
    }

    void untake(const std::vector<int>& verts) {
        stack.pop_back();
        for (int v : verts) uncovered[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    // all cliques containing v inside the uncovered set; maximal ones only
    // when `maximal` (sound for existence: classes can always be enlarged)
    void cliques_from(int v, bool maximal, const std::function<void(const std::vector<int>&)>& use) {
        std::vector<int> cur{v};
        std::vector<std::uint64_t> cand(uncovered.size());
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = uncovered[i] & g.row(v)[i];
        auto rec = [&](auto&& self, std::vector<std::uint64_t>& P, int minv) -> void {
            if (stopped) return;
            bool any = false;
            for (std::size_t i = 0; i < P.size(); ++i) {
                std::uint64_t x = P[i];
                while (x) {
                    const int u = int(i * 64 + std::countr_zero(x));
                    x &= x - 1;
                    any = true;
                    if (u <= minv) continue;
                    cur.push_back(u);
                    std::vector<std::uint64_t> next(P.size());
                    for (std::size_t j = 0; j < P.size(); ++j) next[j] = P[j] & g.row(u)[j];
                    self(self, next, u);
                    cur.pop_back();
                    if (stopped) return;
                }
            }
            if (!maximal || !any) use(cur);
        };
        rec(rec, cand, -1);
    }

    void dfs() {
        if (stopped) return;
        const int v = first_uncovered();
        if (v < 0) {
            found.emplace_back(g.length, stack);
            if (first_only || (max_partitions >= 0 &&
                               static_cast<long long>(found.size()) >= max_partitions))
                stopped = true;
            return;
        }
        const int colors_left = k_colors - int(stack.size());
        if (colors_left <= 0) return;
        if (static_cast<long long>(colors_left) * clique_cap < count_uncovered()) return;
        cliques_from(v, first_only, [&](const std::vector<int>& verts) {
            take(verts);
            dfs();
            untake(verts);
        });
    }
};

}  // namespace

std::vector<Partition> exhaustive_color(int n, int k_colors, const ExhaustiveOptions& opts) {
    const CompatGraph g = build_compat_graph(enumerate_even_bits(n), n, 4);
    ColorSearch s{g, k_colors, opts.first_only, opts.max_partitions, 0, {}, {}, {}, false};
    s.clique_cap = max_clique(g).first;
    s.uncovered.assign((g.nv() + 63) / 64, 0);
    for (int v = 0; v < g.nv(); ++v) s.uncovered[v >> 6] |= std::uint64_t(1) << (v & 63);
    s.dfs();
    return s.found;
}

std::vector<Partition> augment_nonmaximal(const Partition& p) {
    std::map<std::vector<word_t>, Partition> found;
    std::set<std::vector<word_t>> visited;
    const std::vector<word_t> self_digest = partition_digest(p);
    visited.insert(self_digest);

    auto rec = [&](auto&& self, const Partition& q) -> void {
        for (std::size_t ai = 0; ai < q.codes.size(); ++ai) {
            const Code& a = q.codes[ai];
            for (std::size_t bi = 0; bi < q.codes.size(); ++bi) {
                if (ai == bi) continue;
                const Code& b = q.codes[bi];
                // donors are codes no larger than the receiver, so the
                // ascending size multiset strictly decreases and the walk
                // terminates
                if (b.size() > a.size()) continue;
                for (word_t w : b.words) {
                    bool fits = true;
                    for (word_t u : a.words)
                        if (distance(u, w) < 4) {
                            fits = false;
                            break;
                        }
                    if (!fits) continue;
                    std::vector<Code> cs;
                    for (std::size_t i = 0; i < q.codes.size(); ++i) {
                        if (i == ai) {
                            std::vector<word_t> ws = a.words;
                            ws.push_back(w);
                            cs.emplace_back(q.length, std::move(ws));
                        } else if (i == bi) {
                            std::vector<word_t> ws;
                            for (word_t u : b.words)
                                if (u != w) ws.push_back(u);
                            if (!ws.empty()) cs.emplace_back(q.length, std::move(ws));
                        } else {
                            cs.push_back(q.codes[i]);
                        }
                    }
                    Partition next(q.length, std::move(cs));
                    auto dig = partition_digest(next);
                    if (!visited.insert(dig).second) continue;
                    if (dig != self_digest) found.emplace(dig, next);
                    self(self, next);
                }
            }
        }
    };
    rec(rec, p);
    std::vector<Partition> out;
    for (auto& [d, q] : found) out.push_back(std::move(q));
    return out;
}

namespace {

CoverInstance orbit_pack_instance(const std::vector<OrbitSet>& orbits) {
    CoverInstance inst;
    inst.n_atoms = 256;  // even-space indices for n <= 9
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        CoverRow row;
        row.id = int(i);
        row.weight = int(orbits[i].codes.size());
        for (const Code& c : orbits[i].codes)
            for (word_t w : c.words) row.atoms.push_back(even_index(w));
        std::sort(row.atoms.begin(), row.atoms.end());
        inst.rows.push_back(std::move(row));
    }
    return inst;
}

}  // namespace

std::vector<SearchRecord> run_case(const SearchCase& sc, int n,
                                   const std::function<ClassificationResult(int)>& classes_of_size,
                                   const RunCaseOptions& opts) {
    namespace fs = std::filesystem;
    std::set<int> orders = opts.orders;
    if (orders.empty())
        orders = sc.hamming_seed ? std::set<int>{2, 3, 5, 7} : std::set<int>{3, 4, 5, 7};

    const ClassificationResult seeds = classes_of_size(sc.M);
    const ClassificationResult reps2 = classes_of_size(sc.M2);
    ClassificationResult reps1;
    if (sc.N1 > 0) reps1 = sc.M1 == sc.M2 ? reps2 : classes_of_size(*sc.M1);

    const int space = 1 << (n - 1);
    auto log = [&](const std::string& m) {
        if (opts.log) opts.log(m);
    };

    std::vector<SearchRecord> records;
    for (std::size_t ci = 0; ci < seeds.representatives.size(); ++ci) {
        if (opts.seed_class && int(ci) != *opts.seed_class) continue;
        const Code& seed = seeds.representatives[ci];
        const Group aut = automorphism_group(seed);
        std::vector<Subgroup> subs = nonconjugate_subgroups(aut, orders);
        log("seed class " + std::to_string(ci) + ": |Aut| = " + std::to_string(aut.order()) +
            ", " + std::to_string(subs.size()) + " subgroup classes");
        for (std::size_t hi = 0; hi < subs.size(); ++hi) {
            const Subgroup& H = subs[hi];
            SearchRecord rec;
            rec.seed = seed;
            rec.subgroup = H;

            std::optional<std::string> ckfile;
            if (opts.checkpoint_dir) {
                fs::create_directories(*opts.checkpoint_dir);
                ckfile = (fs::path(*opts.checkpoint_dir) /
                          ("seed" + std::to_string(ci) + "_sub" + std::to_string(hi) + ".partitions"))
                             .string();
                if (fs::exists(*ckfile + ".done")) {
                    std::ifstream in(*ckfile);
                    while (in.peek() != EOF) {
                        try {
                            rec.found.push_back(read_partition(in).partition);
                        } catch (...) {
                            break;
                        }
                    }
                    rec.solutions = static_cast<long long>(rec.found.size());
                    records.push_back(std::move(rec));
                    log("  resumed seed " + std::to_string(ci) + " sub " + std::to_string(hi));
                    continue;
                }
            }

            std::vector<OrbitSet> s2 = find_orbits(seed, sc.N2, sc.M2, H.elements,
                                                   reps2.representatives);
            std::vector<OrbitSet> s1;
            if (sc.N1 > 0)
                s1 = find_orbits(seed, sc.N1, *sc.M1, H.elements, reps1.representatives);
            log("  sub " + std::to_string(hi) + " (order " + std::to_string(H.order) +
                "): " + std::to_string(s1.size()) + " / " + std::to_string(s2.size()) + " orbits");

            const CoverInstance pack_inst = orbit_pack_instance(s1);
            const CoverInstance exact_all = orbit_pack_instance(s2);
            std::vector<bool> residual0(256, false);
            for (int i = 0; i < space; ++i) residual0[i] = true;
            for (word_t w : seed.words) residual0[even_index(w)] = false;

            auto assemble = [&](const std::vector<int>& sel1, const std::vector<int>& sel2) {
                std::vector<Code> cs{seed};
                for (int i : sel1)
                    for (const Code& c : s1[i].codes) cs.push_back(c);
                for (int i : sel2)
                    for (const Code& c : s2[i].codes) cs.push_back(c);
                Partition part(n, std::move(cs));
                if (!is_admissible(part) || part.covered_size() != space)
                    throw std::logic_error("run_case: assembled partition invalid");
                rec.found.push_back(std::move(part));
                ++rec.solutions;
            };

            pack(pack_inst, sc.N1, [&](const std::vector<int>& sel1) {
                std::vector<bool> residual = residual0;
                for (int i : sel1)
                    for (int a : pack_inst.rows[i].atoms) residual[a] = false;
                CoverInstance exact_inst = restrict_rows(exact_all, residual);
                // atoms not in the residual are marked covered by keeping
                // only residual atoms in the universe
                CoverInstance shrunk;
                std::vector<int> remap(256, -1);
                int next_id = 0;
                for (int a = 0; a < 256; ++a)
                    if (residual[a]) remap[a] = next_id++;
                shrunk.n_atoms = next_id;
                for (const auto& r : exact_inst.rows) {
                    CoverRow nr;
                    nr.id = r.id;
                    nr.weight = r.weight;
                    for (int a : r.atoms) nr.atoms.push_back(remap[a]);
                    shrunk.rows.push_back(std::move(nr));
                }
                exact_cover(shrunk, [&](const std::vector<int>& sel2) {
                    assemble(sel1, sel2);
                    return true;
                });
                return true;
            });

            if (ckfile) {
                std::ofstream out(*ckfile);
                for (const Partition& part : rec.found)
                    write_partition(out, PartitionFile{part, {}, std::nullopt});
                out.close();
                std::ofstream done(*ckfile + ".done");
                done << rec.solutions << '\n';
            }
            log("  sub " + std::to_string(hi) + ": " + std::to_string(rec.solutions) +
                " partitions");
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace hcube
