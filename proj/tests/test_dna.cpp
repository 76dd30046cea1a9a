#include <stdexcept>
#include "dnacyclic/dna.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "dnacyclic/reference_tables.hpp"

using namespace dnacyclic;

namespace {

CodeSpec reference_spec() {
    CodeSpec s;
    s.form = CodeForm::RCrt;
    s.n = 3;
    s.g1 = s.a1 = s.g1p = s.a1p = s.g2 = s.a2 = poly_from_bitstring("111");
    return s;
}

DnaStrand random_strand(std::mt19937& rng, int len) {
    static const char bases[] = "ACGT";
    std::uniform_int_distribution<int> d(0, 3);
    std::string s;
    for (int i = 0; i < len; ++i) s += bases[d(rng)];
    return DnaStrand(s);
}

}  // namespace

TEST_CASE("base map") {
    CHECK(nt(R1Elem(0)) == 'A');
    CHECK(nt(R1Elem(1)) == 'G');
    CHECK(nt(R1Elem(2)) == 'C');
    CHECK(nt(R1Elem(3)) == 'T');
    for (unsigned i = 0; i < 4; ++i) {
        CHECK(nt_inv(nt(R1Elem(i))) == R1Elem(i));
        // the algebraic complement matches base pairing
        CHECK(nt(complement(R1Elem(i))) == wcc_base(nt(R1Elem(i))));
    }
    CHECK_THROWS_AS(nt_inv('X'), std::invalid_argument);
}

TEST_CASE("codon map is a bijection compatible with the complement") {
    CHECK(theta(RElem::zero()) == "AAA");
    CHECK(theta(RElem::one()) == "GGG");
    CHECK(theta(r_parse_name("1+u+v+uv+v^2+uv^2")) == "TAA");
    std::set<std::string> codons;
    for (unsigned i = 0; i < 64; ++i) {
        const RElem x(i);
        codons.insert(theta(x));
        CHECK(theta_inv(theta(x)) == x);
        CHECK(gray_triple_inv(gray_triple(x)) == x);
        // complement at the element level equals base-pairing at the codon
        // level
        std::string wcc;
        for (char b : theta(x)) wcc += wcc_base(b);
        CHECK(theta(complement(x)) == wcc);
    }
    CHECK(codons.size() == 64);
    // Table 1 cross-check: the codons of v and of its complement pair up
    CHECK(theta(RElem::v()) == "AGA");
    CHECK(theta(complement(RElem::v())) == "TCT");
    CHECK(complement(RElem::v()) == r_parse_name("1+u+v"));
}

TEST_CASE("strand layouts") {
    const std::vector<RElem> zero(3, RElem::zero());
    CHECK(strand_block_layout(zero).str() == "AAAAAAAAA");
    const std::vector<RElem> us(3, RElem::u());
    CHECK(strand_block_layout(us).str() == "CCCCCCCCC");
    // constant words map to X^3 Y^3 Z^3 where XYZ is the codon
    for (unsigned i = 0; i < 64; ++i) {
        const RElem c(i);
        const std::string codon = theta(c);
        const std::string expect = std::string(3, codon[0]) + std::string(3, codon[1]) +
                                   std::string(3, codon[2]);
        CHECK(strand_block_layout({c, c, c}).str() == expect);
        // per-coordinate codons concatenate instead
        CHECK(strand_codon_layout({c, c, c}).str() == codon + codon + codon);
        // the two layouts agree at length 1
        CHECK(strand_block_layout({c}).str() == theta(c));
        CHECK(strand_codon_layout({c}).str() == theta(c));
    }
    // reversing the codeword reverses each block
    std::mt19937 rng(5);
    std::uniform_int_distribution<unsigned> dist(0, 63);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RElem> w(4);
        for (RElem& c : w) c = RElem(dist(rng));
        const std::string fwd = strand_block_layout(w).str();
        const std::vector<RElem> rev(w.rbegin(), w.rend());
        const std::string bwd = strand_block_layout(rev).str();
        for (int block = 0; block < 3; ++block) {
            const std::string fb = fwd.substr(static_cast<std::size_t>(block) * 4, 4);
            std::string rb = bwd.substr(static_cast<std::size_t>(block) * 4, 4);
            std::reverse(rb.begin(), rb.end());
            CHECK(fb == rb);
        }
    }
    // R1 codewords use one base per coordinate
    CHECK(strand_of_r1({R1Elem(0), R1Elem(1), R1Elem(2), R1Elem(3)}).str() == "AGCT");
}

TEST_CASE("strand transforms") {
    const DnaStrand s("GCATAG");
    CHECK(s.complemented().str() == "CGTATC");
    CHECK(s.reverse_complemented().str() == "CTATGC");
    CHECK(DnaStrand("AAA").reversed().str() == "AAA");
    CHECK(s.gc_content() == 3);
    CHECK(DnaStrand("AAA").gc_content() == 0);
    CHECK(DnaStrand("GGG").gc_content() == 3);
    CHECK_THROWS_AS(DnaStrand("ACGU"), std::invalid_argument);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const DnaStrand t = random_strand(rng, 1 + trial % 9);
        CHECK(wcc_transform(wcc_transform(t, StrandOp::Reverse), StrandOp::Reverse) == t);
        CHECK(wcc_transform(wcc_transform(t, StrandOp::Complement), StrandOp::Complement) == t);
        CHECK(wcc_transform(wcc_transform(t, StrandOp::ReverseComplement),
                            StrandOp::ReverseComplement) == t);
        CHECK(t.reversed().complemented() == t.complemented().reversed());
        CHECK(t.reverse_complemented() == t.reversed().complemented());
    }
}

TEST_CASE("constraint checks") {
    std::vector<DnaStrand> table3;
    for (const char* s : kTable3) table3.emplace_back(s);

    const auto hamming_only = check_constraints(table3, 3, kHamming);
    REQUIRE(hamming_only.size() == 1);
    CHECK(hamming_only.front().pass);

    const std::vector<DnaStrand> close{DnaStrand("AAA"), DnaStrand("AAT")};
    const auto fail = check_constraints(close, 3, kHamming);
    CHECK_FALSE(fail.front().pass);
    CHECK(fail.front().witness_a == "AAA");
    CHECK(fail.front().witness_b == "AAT");

    const auto gc = check_constraints({DnaStrand("AAA")}, 0, kGcContent);
    CHECK(gc.front().pass);
    // the reverse constraint compares a strand against its own reversal
    const auto rev = check_constraints({DnaStrand("AAA")}, 1, kReverse);
    CHECK_FALSE(rev.front().pass);

    CHECK_THROWS_AS(check_constraints({DnaStrand("AAA"), DnaStrand("AAAA")}, 1, kHamming),
                    std::invalid_argument);

    const auto all = check_constraints(table3, 3, kAllConstraints);
    REQUIRE(all.size() == 4);
    CHECK(all[0].pass);        // hamming
    CHECK_FALSE(all[3].pass);  // gc content varies across the table
}

TEST_CASE("DNA code predicate") {
    // the length-3 reference code is a DNA code
    const auto set = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(reference_spec())));
    CHECK(static_cast<bool>(is_dna_code(set)));

    // the zero code fails: the reverse-complement of 0 is outside
    CodeSpec zspec = reference_spec();
    zspec.g1 = zspec.a1 = zspec.g1p = zspec.a1p = zspec.g2 = zspec.a2 =
        poly_from_bitstring("1001");
    const auto zero = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(zspec)));
    const auto zcheck = is_dna_code(zero);
    CHECK_FALSE(zcheck.ok);
    CHECK(zcheck.reason.find("reverse-complement not in the code") != std::string::npos);

    // at odd length no word can equal its own reverse-complement (the middle
    // coordinate would have to be its own complement), so the full space
    // passes the definition
    CodeSpec fspec = reference_spec();
    fspec.g1 = fspec.a1 = fspec.g1p = fspec.a1p = fspec.g2 = fspec.a2 = poly_from_bitstring("1");
    const auto full = std::get<Codewords<RElem>>(enumerate(CyclicCode::build(fspec)));
    CHECK(is_dna_code(full).ok);

    // at even length it fails: (c, comp(c)) is fixed by the transform
    Codewords<RElem> full2;
    full2.n = 2;
    for (unsigned i = 0; i < 64; ++i)
        for (unsigned j = 0; j < 64; ++j) full2.words.push_back({RElem(i), RElem(j)});
    std::sort(full2.words.begin(), full2.words.end());
    const auto fcheck = is_dna_code(full2);
    CHECK_FALSE(fcheck.ok);
    CHECK(fcheck.reason.find("own reverse-complement") != std::string::npos);
}

TEST_CASE("ring-vector reverse-complement") {
    const std::vector<RElem> w{RElem::zero(), RElem::v(), RElem::one()};
    const std::vector<RElem> rc = reverse_complement_vec(w);
    CHECK(rc[0] == complement(RElem::one()));
    CHECK(rc[1] == complement(RElem::v()));
    CHECK(rc[2] == complement(RElem::zero()));
    CHECK(reverse_complement_vec(rc) == w);
}
