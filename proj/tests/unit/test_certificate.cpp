#include <doctest.h>

#include <hcube/certificate.hpp>
#include <hcube/classify.hpp>
#include <hcube/search.hpp>

#include <sstream>

using namespace hcube;

TEST_SUITE_BEGIN("certificate");

TEST_CASE("embedded codes have the stated parameters") {
    Code c0 = certificate_c0();
    CHECK(c0.length == 9);
    CHECK(c0.size() == 16);
    CHECK(min_distance(c0) == 4);
    CHECK(is_even_code(c0));
    Code c1 = certificate_c1();
    CHECK(c1.size() == 20);
    CHECK(min_distance(c1) == 4);
    CHECK(is_even_code(c1));
}

TEST_CASE("the generators produce a group of order 48 and a 12-code orbit") {
    Group g = generate(9, {certificate_g1(), certificate_g2()});
    CHECK(g.order() == 48);
    auto orb = orbit(certificate_c1(), g);
    CHECK(orb.size() == 12);
}

TEST_CASE("the reconstructed partition verifies") {
    Partition p = certificate_partition();
    VerifyReport r = verify_partition(p, {certificate_g1(), certificate_g2()});
    CHECK(r.ok());
    CHECK(r.admissible);
    CHECK(r.covers_space);
    CHECK(r.generators_are_automorphisms);
    CHECK(r.num_codes == 13);
    CHECK(r.aut_order == 48);
    CHECK(format_distribution(r.distribution) == "16 + 12x20");
    CHECK(r.lower_bound == 13);
    CHECK(r.chromatic_number_settled);
}

TEST_CASE("verification results survive a file round trip") {
    PartitionFile pf{certificate_partition(), {certificate_g1(), certificate_g2()}, 48};
    std::ostringstream out;
    write_partition(out, pf);
    std::istringstream in(out.str());
    PartitionFile back = read_partition(in);
    VerifyReport r = verify_partition(back.partition, back.generators);
    CHECK(r.ok());
    CHECK(r.aut_order == 48);
}

TEST_CASE("a broken partition is rejected") {
    Partition p = certificate_partition();
    // swap one word between two codes: admissibility must break
    std::vector<Code> cs = p.codes;
    std::vector<word_t> a = cs[0].words, b = cs[1].words;
    std::swap(a[0], b[0]);
    cs[0] = Code(9, a);
    cs[1] = Code(9, b);
    VerifyReport r = verify_partition(Partition(9, cs), {});
    CHECK(!r.ok());
}

TEST_CASE("doubling statements") {
    CHECK(theorem_doubling_statement(1).find("17-cube") != std::string::npos);
    CHECK(theorem_doubling_statement(1).find("26") != std::string::npos);
    CHECK(theorem_doubling_statement(2).find("35-cube") != std::string::npos);
    CHECK(theorem_doubling_statement(2).find("52") != std::string::npos);
}

TEST_CASE("the size-16 code is not the doubly extended Hamming code") {
    CHECK(!are_equivalent(certificate_c0(), doubly_extended_hamming()));
}

TEST_SUITE_END();
