#include "hcube/certificate.hpp"

#include <sstream>

#include "hcube/bounds.hpp"
#include "hcube/canon.hpp"
#include "hcube/search.hpp"

namespace hcube {

namespace {

Code make_code(std::initializer_list<const char*> words) {
    std::vector<word_t> ws;
    for (const char* s : words) ws.push_back(parse_word(s, 9));
    return Code(9, std::move(ws));
}

}  // namespace

Code certificate_c0() {
    return make_code({
        "000000000", "000011011", "100100101", "100111110",
        "101001010", "101010111", "001101001", "001110100",
        "110010001", "010011100", "110100010", "010101111",
        "011000110", "111001101", "011110011", "111111000",
    });
}

Code certificate_c1() {
    return make_code({
        "000000011", "100001101", "100011010", "100110100",
        "000111001", "101000110", "001010101", "101101000",
        "001101111", "101110011", "010010000", "110010111",
        "010100101", "110101011", "010111110", "111000001",
        "011001100", "011011011", "011100010", "111111101",
    });
}

Isometry certificate_g1() { return parse_isometry("((23)(47)(68),100100101)", 9); }

Isometry certificate_g2() { return parse_isometry("((1857)(29)(46),000011011)", 9); }

Partition certificate_partition() {
    const Group aut = generate(9, {certificate_g1(), certificate_g2()});
    std::vector<Code> codes = orbit(certificate_c1(), aut);
    codes.push_back(certificate_c0());
    return Partition(9, std::move(codes));
}

VerifyReport verify_partition(const Partition& p, const std::vector<Isometry>& generators) {
    VerifyReport r;
    r.admissible = is_admissible(p);
    r.covers_space = covers_even_space(p);
    r.distribution = size_distribution(p);
    r.num_codes = p.num_codes();

    r.generators_are_automorphisms = true;
    for (const Isometry& g : generators)
        if (apply_partition(g, p) != p) r.generators_are_automorphisms = false;

    if (r.admissible && r.covers_space) r.aut_order = partition_automorphisms(p).order();

    const int ncube = p.length - 1;  // partition of E^(n+1) colors the squared n-cube
    if (auto a = known_a_n3(ncube))
        r.lower_bound = static_cast<long>(chromatic_bounds(ncube, 2, *a).lower);
    r.chromatic_number_settled = r.admissible && r.covers_space && r.lower_bound == r.num_codes;

    std::ostringstream s;
    if (r.admissible && r.covers_space) {
        s << "partition of the even words of length " << p.length << " into " << r.num_codes
          << " codes of minimum distance >= 4 (" << format_distribution(r.distribution) << ")";
        if (r.chromatic_number_settled)
            s << "; matches the counting lower bound, so the squared " << (p.length - 1)
              << "-cube has chromatic number " << r.num_codes;
        else
            s << "; counting lower bound is " << r.lower_bound;
    } else {
        s << "not a valid partition (admissible=" << r.admissible
          << ", covers=" << r.covers_space << ")";
    }
    r.statement = s.str();
    return r;
}

std::string theorem_doubling_statement(int i) {
    if (i < 0) throw std::invalid_argument("theorem_doubling_statement: i must be >= 0");
    // doubling a coloring of the squared 8-cube i times
    const long long n = 9ll * (1ll << i) - 1;
    const long long k = 13ll * (1ll << i);
    std::ostringstream s;
    s << "the squared " << n << "-cube is colorable with " << k
      << " colors (doubling a 13-coloring of the squared 8-cube " << i << " time"
      << (i == 1 ? "" : "s") << ")";
    return s.str();
}

}  // namespace hcube
