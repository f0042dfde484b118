#include "hcube/isometry.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace hcube {

Isometry::Isometry(int n_, std::vector<std::uint8_t> p, word_t t) : n(n_), perm(std::move(p)), trans(t) {
    check_length(n);
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("isometry: permutation size != n");
    std::vector<bool> seen(n, false);
    for (std::uint8_t v : perm) {
        if (v >= n || seen[v]) throw std::invalid_argument("isometry: not a permutation");
        seen[v] = true;
    }
    if (n < kMaxLength && (trans >> n) != 0)
        throw std::invalid_argument("isometry: translation exceeds length");
    if (weight(trans) & 1)
        throw std::invalid_argument("isometry: translation must have even weight");
}

Isometry Isometry::identity(int n) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t(0));
    return Isometry(n, std::move(p), 0);
}

bool Isometry::is_identity() const {
    if (trans != 0) return false;
    for (int j = 0; j < n; ++j)
        if (perm[j] != j) return false;
    return true;
}

word_t Isometry::apply_bits(word_t w) const {
    word_t out = 0;
    // coordinate j (0-based) sits at bit n-1-j
    word_t rest = w;
    while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        const int j = n - 1 - b;
        out |= word_t(1) << (n - 1 - perm[j]);
    }
    return out ^ trans;
}

Word apply(const Isometry& g, const Word& w) {
    if (g.n != w.length) throw std::invalid_argument("apply: dimension mismatch");
    return Word{g.apply_bits(w.bits), w.length};
}

Isometry compose(const Isometry& g, const Isometry& h) {
    if (g.n != h.n) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<std::uint8_t> p(g.n);
    for (int j = 0; j < g.n; ++j) p[j] = g.perm[h.perm[j]];
    return Isometry(g.n, std::move(p), g.apply_bits(h.trans));
}

Isometry inverse(const Isometry& g) {
    std::vector<std::uint8_t> inv(g.n);
    for (int j = 0; j < g.n; ++j) inv[g.perm[j]] = static_cast<std::uint8_t>(j);
    // translate by the inverse-permuted translation word
    word_t t = 0;
    word_t rest = g.trans;
    while (rest) {
        const int b = std::countr_zero(rest);
        rest &= rest - 1;
        const int j = g.n - 1 - b;
        t |= word_t(1) << (g.n - 1 - inv[j]);
    }
    return Isometry(g.n, std::move(inv), t);
}

Code apply_code(const Isometry& g, const Code& c) {
    if (g.n != c.length) throw std::invalid_argument("apply_code: dimension mismatch");
    std::vector<word_t> ws;
    ws.reserve(c.words.size());
    for (word_t w : c.words) ws.push_back(g.apply_bits(w));
    return Code(c.length, std::move(ws));
}

bigint group_order(int n) {
    if (n < 1) throw std::invalid_argument("group_order: n must be positive");
    bigint r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r << (n - 1);
}

IsoKey iso_key(const Isometry& g) {
    if (g.n > 12) throw std::invalid_argument("iso_key: n > 12 unsupported");
    std::uint64_t pk = 0;
    for (int j = 0; j < g.n; ++j) pk |= std::uint64_t(g.perm[j]) << (4 * j);
    return IsoKey{pk, g.trans};
}

bool Group::contains(const Isometry& g) const {
    return std::find(elems.begin(), elems.end(), g) != elems.end();
}

Group generate(int n, const std::vector<Isometry>& gens) {
    Group G;
    G.n = n;
    std::unordered_set<IsoKey, IsoKeyHash> seen;
    std::deque<Isometry> queue;
    const Isometry id = Isometry::identity(n);
    seen.insert(iso_key(id));
    G.elems.push_back(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Isometry cur = queue.front();
        queue.pop_front();
        for (const Isometry& g : gens) {
            Isometry nxt = compose(g, cur);
            if (seen.insert(iso_key(nxt)).second) {
                G.elems.push_back(nxt);
                queue.push_back(nxt);
            }
        }
    }
    std::sort(G.elems.begin(), G.elems.end());
    return G;
}

int element_order(const Isometry& g) {
    Isometry cur = g;
    int k = 1;
    while (!cur.is_identity()) {
        cur = compose(g, cur);
        ++k;
        if (k > 1000000) throw std::logic_error("element_order: runaway");
    }
    return k;
}

void for_each_element(int n, const std::function<bool(const Isometry&)>& f) {
    check_length(n);
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), std::uint8_t(0));
    const std::vector<word_t> evens = enumerate_even_bits(n);
    do {
        for (word_t t : evens) {
            Isometry g;
            g.n = n;
            g.perm = p;
            g.trans = t;
            if (!f(g)) return;
        }
    } while (std::next_permutation(p.begin(), p.end()));
}

std::string format_isometry(const Isometry& g) {
    std::ostringstream out;
    out << '(';
    std::vector<bool> done(g.n, false);
    bool any = false;
    for (int j = 0; j < g.n; ++j) {
        if (done[j] || g.perm[j] == j) continue;
        out << '(';
        int cur = j;
        bool first = true;
        while (!done[cur]) {
            done[cur] = true;
            if (!first) out << (g.n > 9 ? " " : "");
            out << (cur + 1);
            first = false;
            cur = g.perm[cur];
        }
        out << ')';
        any = true;
    }
    if (!any) out << "id";
    out << ", " << format_word(g.trans, g.n) << ')';
    return out.str();
}

namespace {

std::vector<int> parse_cycle_entries(const std::string& s, int n) {
    // digits within a cycle; multi-digit coordinates need separators
    std::vector<int> vals;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("isometry: bad cycle entry in '" + s + "'");
        if (n <= 9) {
            vals.push_back(s[i] - '0');
            ++i;
        } else {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            vals.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
        }
    }
    return vals;
}

}  // namespace

Isometry parse_isometry(const std::string& s, int n) {
    check_length(n);
    const std::size_t open = s.find('(');
    const std::size_t comma = s.rfind(',');
    const std::size_t close = s.rfind(')');
    if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
        !(open < comma && comma < close))
        throw std::invalid_argument("isometry: expected '(<cycles>, <word>)' in '" + s + "'");
    std::string cyc = s.substr(open + 1, comma - open - 1);
    std::string wstr = s.substr(comma + 1, close - comma - 1);
    while (!wstr.empty() && std::isspace(static_cast<unsigned char>(wstr.front()))) wstr.erase(wstr.begin());
    while (!wstr.empty() && std::isspace(static_cast<unsigned char>(wstr.back()))) wstr.pop_back();

    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint8_t(0));
    // strip whitespace around cycles
    std::size_t pos = 0;
    while (pos < cyc.size()) {
        if (std::isspace(static_cast<unsigned char>(cyc[pos]))) {
            ++pos;
            continue;
        }
        if (cyc.compare(pos, 2, "id") == 0) {
            pos += 2;
            continue;
        }
        if (cyc[pos] != '(')
            throw std::invalid_argument("isometry: bad cycles '" + cyc + "'");
        const std::size_t end = cyc.find(')', pos);
        if (end == std::string::npos) throw std::invalid_argument("isometry: unclosed cycle");
        std::vector<int> entries = parse_cycle_entries(cyc.substr(pos + 1, end - pos - 1), n);
        if (entries.size() < 2) throw std::invalid_argument("isometry: cycle too short");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const int a = entries[i] - 1;
            const int b = entries[(i + 1) % entries.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw std::invalid_argument("isometry: coordinate out of range");
            perm[a] = static_cast<std::uint8_t>(b);
        }
        pos = end + 1;
    }
    return Isometry(n, std::move(perm), parse_word(wstr, n));
}

}  // namespace hcube
