#include "hcube/doublecount.hpp"

#include <algorithm>

#include "hcube/classify.hpp"

namespace hcube {

bigint count_by_partition(const std::vector<std::pair<Partition, long>>& reps, int seed_size,
                          const std::set<int>& orders) {
    bigint total = 0;
    for (const auto& [part, aut_order] : reps) {
        const Group paut = partition_automorphisms(part);
        const std::vector<Group> subs = subgroups_of_orders(paut, orders);
        long pairs = 0;
        for (const Code& c : part.codes) {
            if (c.size() != seed_size) continue;
            for (const Group& H : subs) {
                bool stabilizes = true;
                for (const Isometry& h : H.elems)
                    if (apply_code(h, c) != c) {
                        stabilizes = false;
                        break;
                    }
                if (stabilizes) ++pairs;
            }
        }
        total += bigint(pairs) * group_order(part.length) / aut_order;
    }
    return total;
}

bigint count_by_seed(const std::vector<SearchRecord>& records, int n,
                     const std::vector<long>& seed_aut_orders) {
    bigint total = 0;
    for (const SearchRecord& r : records) {
        // look up |Aut(C)| by matching the seed against the class list order
        long aut = automorphism_group(r.seed).order();
        (void)seed_aut_orders;
        total += bigint(r.solutions) * r.subgroup.conjugates * group_order(n) / aut;
    }
    return total;
}

SandboxResult run_sandbox_e7() {
    SandboxResult out;
    const int n = 7;
    const ClassificationResult classes = classify_codes(n, 8, 4);
    const std::set<int> orders{2};

    auto classes_of_size = [&](int m) -> ClassificationResult {
        if (m != 8) throw std::logic_error("sandbox: unexpected class size");
        return classes;
    };

    SearchCase sc;
    sc.M = 8;
    sc.N1 = 0;
    sc.N2 = 7;
    sc.M2 = 8;
    RunCaseOptions opts;
    opts.orders = orders;
    out.records = run_case(sc, n, classes_of_size, opts);

    std::vector<Partition> all;
    for (const SearchRecord& r : out.records)
        all.insert(all.end(), r.found.begin(), r.found.end());
    out.reps = reject_isomorphs(all);

    out.ledger.by_partition = count_by_partition(out.reps, 8, orders);
    out.ledger.by_seed = count_by_seed(out.records, n, classes.aut_orders);
    return out;
}

}  // namespace hcube
