#ifndef DNACYCLIC_VERIFY_HPP
#define DNACYCLIC_VERIFY_HPP

#include <string>
#include <vector>

#include "dnacyclic/codes.hpp"
#include "dnacyclic/dna.hpp"
#include "dnacyclic/rings.hpp"

// Executable forms of the reversibility / reverse-complement theorems, the
// exhaustive brute-force oracles they are checked against, and the errata
// suite that regenerates every published table and example claim.

namespace dnacyclic {

// --- theorem predicates (generator-polynomial conditions only) --------------

// Reversibility of an R1 code from its generators:
//   r1-odd             g and a self-reciprocal
//   r1-even-principal  g self-reciprocal and (x^i p* = p or g = x^i p* + p),
//                      i = deg g - deg p
//   r1-even-two-gen    g and a self-reciprocal and a | (x^i p* + p)
bool reversible_pred_r1(const CodeSpec& spec);

// Reversibility of an r-crt code: all six generators self-reciprocal and of
// equal degree.  Odd n only.
bool reversible_pred_r(const CodeSpec& spec);

// Reverse-complement for r-crt codes: reversible_pred_r plus membership of
// the all-(1+u) vector (the complement of zero).
bool rc_pred_r(const CodeSpec& spec, int cap_dim = kDefaultDimCap);

// Necessary/sufficient reverse-complement condition for R1 codes:
// (1+u)(x^n-1)/(x-1) is a codeword, and g and a are self-reciprocal.
bool rc_necessary_condition_r1(const CodeSpec& spec, int cap_dim = kDefaultDimCap);

// --- exhaustive oracles ------------------------------------------------------

template <class E>
bool exhaustive_reversible(const Codewords<E>& set);

// E must carry the +(1+u) complement (R1Elem or RElem).
template <class E>
bool exhaustive_rc(const Codewords<E>& set);

// --- named finite checks -----------------------------------------------------

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ring axioms over all of R (associativity, distributivity, commutativity,
// 64^3 triples), the complement identities, the Rw product law, the
// reciprocal product/sum identities, and the Gray map distance/linearity
// properties.
std::vector<CheckResult> run_lemma_checks();

// The shift-compatibility of the Gray map (on short exhaustive lengths plus
// seeded random length-3 words), quasi-cyclicity of the reference code's
// binary image, and the predicate-versus-oracle sweeps.
std::vector<CheckResult> run_theorem_checks();

// --- predicate/oracle sweeps -------------------------------------------------

struct SweepResult {
    int specs = 0;
    int pred_true = 0;
    int oracle_true = 0;
    int pred_true_oracle_false = 0;  // sufficiency failures
    int oracle_true_pred_false = 0;  // necessity failures
    int rc_checked = 0;              // rc equivalence checks attempted
    int rc_disagreements = 0;
    std::vector<std::string> notes;  // first few witnesses

    bool equivalence() const { return pred_true_oracle_false == 0 && oracle_true_pred_false == 0; }
    bool implication() const { return pred_true_oracle_false == 0; }
};

// Every (a, g) divisor pair of x^n - 1 as an r1-odd code; odd n.
SweepResult sweep_reversible_r1(int n);

// Every 6-generator r-crt spec at n = 3 built from the divisor-pair chains;
// also checks rc_pred_r against the exhaustive rc oracle on pred-reversible
// codes.
SweepResult sweep_reversible_rcrt_n3();

// --- errata ------------------------------------------------------------------

enum class Verdict { Match, Mismatch, PaperInternal };

std::string verdict_name(Verdict v);

struct Finding {
    std::string tag;       // e.g. "table1/v+uv+uv^2"
    std::string expected;  // printed value
    std::string computed;
    Verdict verdict = Verdict::Match;
    std::string note;
};

struct ErrataReport {
    std::vector<Finding> findings;

    int count(Verdict v) const;
    void append(ErrataReport other);
    // True when every Mismatch finding carries an allowlisted tag.
    bool clean(const std::vector<std::string>& allowlist) const;
    std::string to_tsv(bool header = true) const;
    std::string to_text() const;
};

enum class ErrataScope { Table1, Table2, Table3, Table4, Examples, Crt, All };

ErrataScope errata_scope_from_name(const std::string& name);

// Regenerates the requested tables/examples and compares them row by row
// against the printed values; deterministic finding order.
ErrataReport run_errata(ErrataScope scope);

// Tags of the documented discrepancies in the published tables; shipped as a
// data file and embedded here.
const std::vector<std::string>& default_errata_allowlist();

// Parse an allowlist file: one tag per line, '#' comments.
std::vector<std::string> load_allowlist(const std::string& path);

}  // namespace dnacyclic

#endif
