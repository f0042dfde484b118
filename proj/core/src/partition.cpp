#include "hcube/partition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace hcube {

Partition::Partition(int n, std::vector<Code> cs) : length(n), codes(std::move(cs)) {
    check_length(n);
    for (const Code& c : codes)
        if (c.length != n) throw std::invalid_argument("partition: code length mismatch");
    std::sort(codes.begin(), codes.end());
}

long Partition::covered_size() const {
    long s = 0;
    for (const Code& c : codes) s += c.size();
    return s;
}

Partition apply_partition(const Isometry& g, const Partition& p) {
    std::vector<Code> cs;
    cs.reserve(p.codes.size());
    for (const Code& c : p.codes) cs.push_back(apply_code(g, c));
    return Partition(p.length, std::move(cs));
}

bool codes_pairwise_disjoint(const Partition& p) {
    std::vector<word_t> all;
    for (const Code& c : p.codes) all.insert(all.end(), c.words.begin(), c.words.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool is_admissible(const Partition& p) {
    if (!codes_pairwise_disjoint(p)) return false;
    for (const Code& c : p.codes) {
        if (!is_even_code(c)) return false;
        if (!min_distance_at_least(c, 4)) return false;
    }
    return true;
}

bool covers_even_space(const Partition& p) {
    if (p.covered_size() != (long(1) << (p.length - 1))) return false;
    if (!codes_pairwise_disjoint(p)) return false;
    for (const Code& c : p.codes)
        if (!is_even_code(c)) return false;
    return true;
}

std::vector<int> size_distribution(const Partition& p) {
    std::vector<int> sizes;
    for (const Code& c : p.codes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string format_distribution(const std::vector<int>& sizes) {
    // ascending "16 + 12x20" style
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < sizes.size()) {
        std::size_t j = i;
        while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
        if (!first) out << " + ";
        if (j - i > 1) out << (j - i) << 'x';
        out << sizes[i];
        first = false;
        i = j;
    }
    return out.str();
}

PartitionFile read_partition(std::istream& in) {
    PartitionFile pf;
    int n = 0;
    std::vector<Code> codes;
    std::vector<std::string> pending_generators;
    std::vector<word_t> current;
    bool in_code = false;
    auto flush = [&]() {
        if (in_code) {
            codes.emplace_back(n, current);
            current.clear();
        }
    };
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("n ", 0) == 0) {
            n = std::stoi(line.substr(2));
            check_length(n);
        } else if (line.rfind("aut_order ", 0) == 0) {
            pf.aut_order = std::stol(line.substr(10));
        } else if (line.rfind("generator ", 0) == 0) {
            pending_generators.push_back(line.substr(10));
        } else if (line == "code") {
            if (n == 0) throw std::invalid_argument("partition file: 'code' before 'n'");
            flush();
            in_code = true;
        } else if (line == "end") {
            break;
        } else {
            if (!in_code) throw std::invalid_argument("partition file: unexpected line '" + line + "'");
            current.push_back(parse_word(line, n));
        }
    }
    flush();
    if (n == 0) throw std::invalid_argument("partition file: missing 'n'");
    for (const auto& gs : pending_generators) pf.generators.push_back(parse_isometry(gs, n));
    pf.partition = Partition(n, std::move(codes));
    return pf;
}

PartitionFile read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_partition(in);
}

void write_partition(std::ostream& out, const PartitionFile& pf) {
    out << "n " << pf.partition.length << '\n';
    if (pf.aut_order) out << "aut_order " << *pf.aut_order << '\n';
    for (const Isometry& g : pf.generators) out << "generator " << format_isometry(g) << '\n';
    for (const Code& c : pf.partition.codes) {
        out << "code\n";
        write_codelist(out, c);
    }
    out << "end\n";
}

void write_partition_file(const std::string& path, const PartitionFile& pf) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_partition(out, pf);
}

}  // namespace hcube
