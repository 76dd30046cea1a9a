#ifndef DNACYCLIC_DNA_HPP
#define DNACYCLIC_DNA_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "dnacyclic/codes.hpp"
#include "dnacyclic/rings.hpp"

// Codon and strand maps between ring codewords and DNA sequences, the
// Watson-Crick transforms, and the four standard DNA code constraints.
//
// The base correspondence is 0 -> A, 1 -> G, u -> C, 1+u -> T on R1; the
// codon map theta sends x = a + v b + v^2 c in R to the triple
// (a, a+b, a+c) read through that correspondence.

namespace dnacyclic {

class DnaStrand {
  public:
    DnaStrand() = default;
    // Validates the alphabet {A, C, G, T}.
    explicit DnaStrand(std::string bases);

    const std::string& str() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    char operator[](std::size_t i) const { return bases_[i]; }

    DnaStrand reversed() const;
    DnaStrand complemented() const;
    DnaStrand reverse_complemented() const;
    int gc_content() const;  // count of G plus count of C

    friend bool operator==(const DnaStrand& x, const DnaStrand& y) { return x.bases_ == y.bases_; }
    friend bool operator<(const DnaStrand& x, const DnaStrand& y) { return x.bases_ < y.bases_; }

  private:
    std::string bases_;
};

char wcc_base(char b);  // A<->T, C<->G

enum class StrandOp { Reverse, Complement, ReverseComplement };
DnaStrand wcc_transform(const DnaStrand& s, StrandOp op);

// Base map and its inverse.
char nt(R1Elem x);
R1Elem nt_inv(char base);

// x = a + v b + v^2 c  ->  (a, a+b, a+c) over R1.
std::array<R1Elem, 3> gray_triple(RElem x);
RElem gray_triple_inv(const std::array<R1Elem, 3>& t);

// Codon map theta = nt o gray_triple; a bijection onto the 64 codons.
std::string theta(RElem x);
RElem theta_inv(std::string_view codon);

// Block strand layout: all first components, then all second, then all third
// (length 3n).  For n = 1 this coincides with theta.
DnaStrand strand_block_layout(const std::vector<RElem>& word);
// Per-coordinate codon layout: theta(c_0) theta(c_1) ... (length 3n).
DnaStrand strand_codon_layout(const std::vector<RElem>& word);
// One base per coordinate for R1 codewords (length n).
DnaStrand strand_of_r1(const std::vector<R1Elem>& word);

int hamming(const DnaStrand& x, const DnaStrand& y);

// Reverse-complement on ring vectors: coordinate reversal plus the
// elementwise +(1+u) complement.
template <class E>
std::vector<E> reverse_complement_vec(std::vector<E> w) {
    std::vector<E> out(w.rbegin(), w.rend());
    for (E& c : out) c = complement(c);
    return out;
}

struct ConstraintResult {
    std::string constraint;  // hamming | reverse | rc | gc
    bool pass = false;
    // first violating pair when !pass (for gc: the two strands with
    // differing GC counts)
    std::string witness_a, witness_b;
};

enum ConstraintMask : unsigned {
    kHamming = 1u << 0,
    kReverse = 1u << 1,
    kReverseComplement = 1u << 2,
    kGcContent = 1u << 3,
    kAllConstraints = kHamming | kReverse | kReverseComplement | kGcContent,
};

// Per-constraint pass/fail over a set of equal-length strands:
//   hamming : H(x, y) >= d for all x != y
//   reverse : H(x^r, y) >= d for every ordered pair, including y = x
//   rc      : H(x^rc, y) >= d for every ordered pair, including y = x
//   gc      : all strands share one GC count
// Throws std::invalid_argument on mixed strand lengths.
std::vector<ConstraintResult> check_constraints(const std::vector<DnaStrand>& strands, int d,
                                                unsigned which = kAllConstraints);

struct DnaCodeCheck {
    bool ok = false;
    std::string reason;  // which condition failed, with a witness
    explicit operator bool() const { return ok; }
};

// Definition of a DNA code over R, taken literally: the set is closed under
// the cyclic shift, and every codeword x satisfies x != x^rc and x^rc in C.
DnaCodeCheck is_dna_code(const Codewords<RElem>& set);

}  // namespace dnacyclic

#endif
