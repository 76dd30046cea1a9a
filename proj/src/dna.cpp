#include "dnacyclic/dna.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnacyclic {

DnaStrand::DnaStrand(std::string bases) : bases_(std::move(bases)) {
    for (char b : bases_)
        if (b != 'A' && b != 'C' && b != 'G' && b != 'T')
            throw std::invalid_argument("DNA strand may contain only A/C/G/T: '" + bases_ + "'");
}

char wcc_base(char b) {
    switch (b) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
        default: throw std::invalid_argument("not a DNA base");
    }
}

DnaStrand DnaStrand::reversed() const {
    return DnaStrand(std::string(bases_.rbegin(), bases_.rend()));
}

DnaStrand DnaStrand::complemented() const {
    std::string out = bases_;
    for (char& b : out) b = wcc_base(b);
    return DnaStrand(std::move(out));
}

DnaStrand DnaStrand::reverse_complemented() const { return reversed().complemented(); }

int DnaStrand::gc_content() const {
    return static_cast<int>(std::count_if(bases_.begin(), bases_.end(),
                                          [](char b) { return b == 'G' || b == 'C'; }));
}

DnaStrand wcc_transform(const DnaStrand& s, StrandOp op) {
    switch (op) {
        case StrandOp::Reverse: return s.reversed();
        case StrandOp::Complement: return s.complemented();
        case StrandOp::ReverseComplement: return s.reverse_complemented();
    }
    throw std::logic_error("unreachable");
}

char nt(R1Elem x) {
    switch (x.bits()) {
        case 0: return 'A';
        case 1: return 'G';
        case 2: return 'C';
        default: return 'T';
    }
}

R1Elem nt_inv(char base) {
    switch (base) {
        case 'A': return R1Elem(0);
        case 'G': return R1Elem(1);
        case 'C': return R1Elem(2);
        case 'T': return R1Elem(3);
        default: throw std::invalid_argument("not a DNA base");
    }
}

std::array<R1Elem, 3> gray_triple(RElem x) {
    const R1Elem a(x.bits() & 3u);
    const R1Elem b((x.bits() >> 2) & 3u);
    const R1Elem c((x.bits() >> 4) & 3u);
    return {a, a + b, a + c};
}

RElem gray_triple_inv(const std::array<R1Elem, 3>& t) {
    const R1Elem a = t[0];
    const R1Elem b = a + t[1];
    const R1Elem c = a + t[2];
    return RElem(a.bits() | (b.bits() << 2) | (c.bits() << 4));
}

std::string theta(RElem x) {
    const auto t = gray_triple(x);
    return {nt(t[0]), nt(t[1]), nt(t[2])};
}

RElem theta_inv(std::string_view codon) {
    if (codon.size() != 3) throw std::invalid_argument("a codon has exactly three bases");
    return gray_triple_inv({nt_inv(codon[0]), nt_inv(codon[1]), nt_inv(codon[2])});
}

DnaStrand strand_block_layout(const std::vector<RElem>& word) {
    std::string out;
    out.reserve(word.size() * 3);
    for (int slot = 0; slot < 3; ++slot)
        for (RElem c : word) out += theta(c)[static_cast<std::size_t>(slot)];
    return DnaStrand(std::move(out));
}

DnaStrand strand_codon_layout(const std::vector<RElem>& word) {
    std::string out;
    out.reserve(word.size() * 3);
    for (RElem c : word) out += theta(c);
    return DnaStrand(std::move(out));
}

DnaStrand strand_of_r1(const std::vector<R1Elem>& word) {
    std::string out;
    out.reserve(word.size());
    for (R1Elem c : word) out += nt(c);
    return DnaStrand(std::move(out));
}

int hamming(const DnaStrand& x, const DnaStrand& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: strand length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

std::vector<ConstraintResult> check_constraints(const std::vector<DnaStrand>& strands, int d,
                                                unsigned which) {
    if (d < 0) throw std::invalid_argument("check_constraints: d must be nonnegative");
    for (const DnaStrand& s : strands)
        if (s.size() != strands.front().size())
            throw std::invalid_argument("check_constraints: mixed strand lengths");

    std::vector<ConstraintResult> out;
    const auto pairwise = [&](const std::string& name, auto transform, bool skip_equal) {
        ConstraintResult r{name, true, "", ""};
        for (const DnaStrand& x : strands) {
            const DnaStrand tx = transform(x);
            for (const DnaStrand& y : strands) {
                if (skip_equal && x == y) continue;
                if (hamming(tx, y) < d) {
                    r.pass = false;
                    r.witness_a = x.str();
                    r.witness_b = y.str();
                    return r;
                }
            }
        }
        return r;
    };

    if (which & kHamming)
        out.push_back(pairwise("hamming", [](const DnaStrand& s) { return s; }, true));
    if (which & kReverse)
        out.push_back(pairwise("reverse", [](const DnaStrand& s) { return s.reversed(); }, false));
    if (which & kReverseComplement)
        out.push_back(pairwise(
            "rc", [](const DnaStrand& s) { return s.reverse_complemented(); }, false));
    if (which & kGcContent) {
        ConstraintResult r{"gc", true, "", ""};
        for (const DnaStrand& s : strands) {
            if (s.gc_content() != strands.front().gc_content()) {
                r.pass = false;
                r.witness_a = strands.front().str();
                r.witness_b = s.str();
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

DnaCodeCheck is_dna_code(const Codewords<RElem>& set) {
    if (!shift_closed(set)) return {false, "not closed under the cyclic shift"};
    for (const std::vector<RElem>& w : set.words) {
        const std::vector<RElem> rc = reverse_complement_vec(w);
        if (rc == w) {
            std::string ws;
            for (RElem c : w) ws += (ws.empty() ? "" : " ") + to_bitstring(c);
            return {false, "codeword equals its own reverse-complement: " + ws};
        }
        if (!std::binary_search(set.words.begin(), set.words.end(), rc)) {
            std::string ws;
            for (RElem c : w) ws += (ws.empty() ? "" : " ") + to_bitstring(c);
            return {false, "reverse-complement not in the code for codeword " + ws};
        }
    }
    return {true, ""};
}

}  // namespace dnacyclic
