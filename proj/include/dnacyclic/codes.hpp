#ifndef DNACYCLIC_CODES_HPP
#define DNACYCLIC_CODES_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dnacyclic/crt.hpp"
#include "dnacyclic/poly.hpp"
#include "dnacyclic/rings.hpp"

// Construction and enumeration of cyclic codes over R1, Rw and R.
//
// A code is specified by F2 generator polynomials in one of five forms:
//
//   r1-odd             <g + (1+u)a>                        over R1, n odd
//   r1-even-principal  <g + (1+u)p>                        over R1, n even
//   r1-even-two-gen    <g + (1+u)p, (1+u)a>                over R1, n even
//   rw                 <(g1+(1+u)a1) + w(g1'+(1+u)a1')>    over Rw, n odd
//   r-crt              coefficientwise CRT combination of the r1-odd code
//                      (g2, a2) with the rw code (g1, a1, g1', a1')
//
// subject to the divisibility chains a|g|(x^n - 1) over F2 per component.

namespace dnacyclic {

enum class RingId { R1, Rw, R };
enum class CodeForm { R1Odd, R1EvenPrincipal, R1EvenTwoGen, Rw, RCrt };

std::string ring_id_name(RingId);
std::string code_form_name(CodeForm);
CodeForm code_form_from_name(const std::string& name);

class CodeSpecError : public std::runtime_error {
  public:
    explicit CodeSpecError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionCapExceeded : public std::runtime_error {
  public:
    DimensionCapExceeded(int dim, int cap)
        : std::runtime_error("code F2-dimension " + std::to_string(dim) +
                             " exceeds enumeration cap " + std::to_string(cap)),
          dimension(dim),
          cap(cap) {}
    int dimension;
    int cap;
};

struct CodeSpec {
    CodeForm form = CodeForm::R1Odd;
    int n = 0;
    PolyF2 g, a, p;           // r1 forms
    PolyF2 g1, a1, g1p, a1p;  // rw component
    PolyF2 g2, a2;            // r-crt second component

    RingId ring() const;
};

// Line-based key=value syntax (ring=, n=, form=, g=, a=, p=, g1=, a1=,
// g1p=, a1p=, g2=, a2=) with polynomials as coefficient bit strings.
CodeSpec parse_code_spec(std::istream& in);
CodeSpec parse_code_spec_file(const std::string& path);
std::string format_code_spec(const CodeSpec& spec);

// Validates the divisibility chains and degree conditions of the form.
// Throws CodeSpecError naming the failed chain; relax_chains demotes chain
// and degree violations to warnings so deliberately inconsistent published
// inputs can still be analyzed.
std::vector<std::string> validate(const CodeSpec& spec, bool relax_chains = false);

inline constexpr int kDefaultDimCap = 20;

// An enumerated code: an F2-basis in reduced row-echelon form (pivots chosen
// on lowest coordinate index, then lowest basis-monomial index) plus the
// materialized codewords in ascending coefficient-bit order.
template <class E>
struct Codewords {
    int n = 0;
    std::vector<std::vector<E>> basis;
    std::vector<std::vector<E>> words;

    int dimension() const { return static_cast<int>(basis.size()); }
    std::uint64_t size() const { return words.size(); }
    bool contains(const std::vector<E>& w) const;
};

using AnyCodewords = std::variant<Codewords<R1Elem>, Codewords<RwElem>, Codewords<RElem>>;

class CyclicCode {
  public:
    using Generators = std::variant<std::vector<PolyR1>, std::vector<PolyRw>, std::vector<PolyR>>;

    // Validates the CodeSpec and assembles the ring generators.
    static CyclicCode build(const CodeSpec& spec, bool relax_chains = false);

    const CodeSpec& spec() const { return spec_; }
    RingId ring() const { return spec_.ring(); }
    int n() const { return spec_.n; }
    const Generators& generators() const { return gens_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    // The assembled generator polynomial (first generator for the two
    // generator form), reduced mod x^n - 1.
    template <class E>
    const Poly<E>& generator() const {
        return std::get<std::vector<Poly<E>>>(gens_).front();
    }

  private:
    CodeSpec spec_;
    Generators gens_;
    std::vector<std::string> warnings_;
};

// F2-span of {b * x^k * gen} over all generators, ring basis monomials b and
// shifts 0 <= k < n; equals the ideal generated by the generators.
// Throws DimensionCapExceeded if the F2-dimension exceeds cap_dim.
template <class E>
Codewords<E> enumerate_span(const std::vector<Poly<E>>& gens, int n, int cap_dim = kDefaultDimCap);

AnyCodewords enumerate(const CyclicCode& code, int cap_dim = kDefaultDimCap);

// |<g, (1+u)a>| = 4^(n - deg g) * 2^(deg g - deg a) for a|g|(x^n - 1).
// Throws CodeSpecError when the chain fails.
std::uint64_t size_formula_r1(int n, const PolyF2& g, const PolyF2& a);

// Minimum nonzero Hamming weight (= minimum pairwise distance by linearity).
// Throws std::domain_error when the set has no nonzero word.
template <class E>
int min_hamming_distance(const Codewords<E>& set);

template <class E>
bool shift_closed(const Codewords<E>& set);

}  // namespace dnacyclic

#endif
