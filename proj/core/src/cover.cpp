#include "hcube/cover.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hcube {

namespace {

struct AtomBits {
    std::vector<std::uint64_t> w;
    explicit AtomBits(int n) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool intersects(const AtomBits& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    void add(const AtomBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    void sub(const AtomBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
};

AtomBits row_bits(const CoverRow& r, int n_atoms) {
    AtomBits b(n_atoms);
    for (int a : r.atoms) {
        if (a < 0 || a >= n_atoms) throw std::invalid_argument("cover: atom out of range");
        b.set(a);
    }
    return b;
}

}  // namespace

void exact_cover(const CoverInstance& inst,
                 const std::function<bool(const std::vector<int>&)>& emit) {
    const int n = inst.n_atoms;
    std::vector<AtomBits> rb;
    rb.reserve(inst.rows.size());
    for (const auto& r : inst.rows) rb.push_back(row_bits(r, n));

    // per-atom candidate row indices, in input order
    std::vector<std::vector<int>> by_atom(n);
    for (std::size_t i = 0; i < inst.rows.size(); ++i)
        for (int a : inst.rows[i].atoms) by_atom[a].push_back(int(i));

    AtomBits covered(n);
    std::vector<int> chosen;
    bool stopped = false;

    auto rec = [&](auto&& self) -> void {
        if (stopped) return;
        // pick the uncovered atom with fewest available rows
        int pick = -1, pick_count = -1;
        for (int a = 0; a < n; ++a) {
            if (covered.test(a)) continue;
            int cnt = 0;
            for (int ri : by_atom[a])
                if (!rb[ri].intersects(covered)) ++cnt;
            if (pick < 0 || cnt < pick_count) {
                pick = a;
                pick_count = cnt;
                if (cnt == 0) break;
            }
        }
        if (pick < 0) {
            std::vector<int> ids;
            for (int ri : chosen) ids.push_back(inst.rows[ri].id);
            if (!emit(ids)) stopped = true;
            return;
        }
        if (pick_count == 0) return;
        for (int ri : by_atom[pick]) {
            if (rb[ri].intersects(covered)) continue;
            covered.add(rb[ri]);
            chosen.push_back(ri);
            self(self);
            chosen.pop_back();
            covered.sub(rb[ri]);
            if (stopped) return;
        }
    };
    rec(rec);
}

void pack(const CoverInstance& inst, int target_weight,
          const std::function<bool(const std::vector<int>&)>& emit) {
    if (target_weight < 0) throw std::invalid_argument("pack: negative target");
    const int n = inst.n_atoms;
    // order by weight then id for a deterministic stream
    std::vector<int> order(inst.rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (inst.rows[a].weight != inst.rows[b].weight)
            return inst.rows[a].weight < inst.rows[b].weight;
        return inst.rows[a].id < inst.rows[b].id;
    });
    std::vector<AtomBits> rb;
    rb.reserve(order.size());
    std::vector<int> weights(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rb.push_back(row_bits(inst.rows[order[i]], n));
        weights[i] = inst.rows[order[i]].weight;
    }
    // suffix weight sums for the remaining-weight prune
    std::vector<long long> suffix(order.size() + 1, 0);
    for (int i = int(order.size()) - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weights[i];

    AtomBits used(n);
    std::vector<int> chosen;
    bool stopped = false;

    auto rec = [&](auto&& self, std::size_t start, int acc) -> void {
        if (stopped) return;
        if (acc == target_weight) {
            std::vector<int> ids;
            for (int ri : chosen) ids.push_back(inst.rows[order[ri]].id);
            std::sort(ids.begin(), ids.end());
            if (!emit(ids)) stopped = true;
            return;
        }
        for (std::size_t i = start; i < order.size(); ++i) {
            if (acc + suffix[i] < target_weight) return;
            if (acc + weights[i] > target_weight) continue;
            if (rb[i].intersects(used)) continue;
            used.add(rb[i]);
            chosen.push_back(int(i));
            self(self, i + 1, acc + weights[i]);
            chosen.pop_back();
            used.sub(rb[i]);
            if (stopped) return;
        }
    };
    rec(rec, 0, 0);
}

long long count_exact_covers(const CoverInstance& inst) {
    long long c = 0;
    exact_cover(inst, [&](const std::vector<int>&) {
        ++c;
        return true;
    });
    return c;
}

long long count_packs(const CoverInstance& inst, int target_weight) {
    long long c = 0;
    pack(inst, target_weight, [&](const std::vector<int>&) {
        ++c;
        return true;
    });
    return c;
}

CoverInstance restrict_rows(const CoverInstance& inst, const std::vector<bool>& keep) {
    CoverInstance out;
    out.n_atoms = inst.n_atoms;
    for (const auto& r : inst.rows) {
        bool ok = true;
        for (int a : r.atoms)
            if (a < 0 || a >= inst.n_atoms || !keep[a]) {
                ok = false;
                break;
            }
        if (ok) out.rows.push_back(r);
    }
    return out;
}

}  // namespace hcube
