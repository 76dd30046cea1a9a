#ifndef DNACYCLIC_POLY_HPP
#define DNACYCLIC_POLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnacyclic/rings.hpp"

// Polynomials over F2 / R1 / Rw / R with coefficients stored in ascending
// degree and kept canonical (no trailing zero coefficient; the zero
// polynomial is the empty list and has degree() == -1, a sentinel standing
// in for "minus infinity").

namespace dnacyclic {

template <class E>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<E> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<E> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({E::one()}); }
    static Poly x() { return Poly({E::zero(), E::one()}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<E>& coeffs() const { return c_; }
    E coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : E::zero();
    }
    E leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<E> out(std::max(f.c_.size(), g.c_.size()), E::zero());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.coeff(int(i)) + g.coeff(int(i));
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::vector<E> out(f.c_.size() + g.c_.size() - 1, E::zero());
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j)
                out[i + j] = out[i + j] + f.c_[i] * g.c_[j];
        }
        return Poly(std::move(out));
    }

    Poly times(E s) const {
        std::vector<E> out(c_);
        for (E& c : out) c = c * s;
        return Poly(std::move(out));
    }

    // f * x^k
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<E> out(c_.size() + k, E::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<E> c_;
};

using PolyF2 = Poly<F2>;
using PolyR1 = Poly<R1Elem>;
using PolyRw = Poly<RwElem>;
using PolyR = Poly<RElem>;

// x^n = 1 reduction; result has degree < n.
template <class E>
Poly<E> reduce_mod_xn1(const Poly<E>& f, int n) {
    if (n < 1) throw std::invalid_argument("modulus x^n - 1 requires n >= 1");
    std::vector<E> out(static_cast<std::size_t>(n), E::zero());
    for (int i = 0; i <= f.degree(); ++i) out[i % n] = out[i % n] + f.coeff(i);
    return Poly<E>(std::move(out));
}

template <class E>
Poly<E> mul_mod_xn1(const Poly<E>& f, const Poly<E>& g, int n) {
    return reduce_mod_xn1(f * g, n);
}

// Reciprocal x^deg(f) * f(1/x): the coefficient list reversed, re-canonicalized.
template <class E>
Poly<E> reciprocal(const Poly<E>& f) {
    if (f.is_zero()) throw std::domain_error("reciprocal of the zero polynomial");
    std::vector<E> rev(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly<E>(std::move(rev));
}

// f* = m f for some unit m of the coefficient ring (over F2: f* = f).
template <class E>
bool is_self_reciprocal(const Poly<E>& f) {
    const Poly<E> r = reciprocal(f);
    for (E m : units<E>())
        if (f.times(m) == r) return true;
    return false;
}

// Embed an F2 polynomial coefficientwise into a larger ring.
template <class E>
Poly<E> lift(const PolyF2& f) {
    std::vector<E> out;
    out.reserve(f.coeffs().size());
    for (F2 c : f.coeffs()) out.push_back(c.is_zero() ? E::zero() : E::one());
    return Poly<E>(std::move(out));
}

// --- F2-specific operations -------------------------------------------------

PolyF2 xn_minus_one(int n);

// Long division over F2; quotient/remainder with divisor nonzero.
std::pair<PolyF2, PolyF2> divmod(const PolyF2& num, const PolyF2& den);

// a | b over F2 (a nonzero).
bool divides(const PolyF2& a, const PolyF2& b);

bool is_irreducible(const PolyF2& f);

// Factor x^n - 1 over F2 into irreducibles with multiplicity, 1 <= n <= 64.
// Sorted by (degree, coefficient bits); the product reproduces x^n - 1.
std::vector<PolyF2> factor_xn_minus_one(int n);

// All divisors of x^n - 1 over F2 (products of subsets of the factor
// multiset), deduplicated and sorted.
std::vector<PolyF2> divisors_of_xn_minus_one(int n);

// "(x+1)(x^2+x+1)^2" style rendering of a factor multiset.
std::string format_factorization(const std::vector<PolyF2>& factors);

// Long division over a coefficient ring; requires the divisor's leading
// coefficient to be a unit.
template <class E>
std::pair<Poly<E>, Poly<E>> divmod_unit_lead(const Poly<E>& num, const Poly<E>& den);

// Text forms. Bit-string shorthand: "1101" = 1 + x + x^3; general syntax is
// comma-separated coefficients in the element bit-string syntax.
PolyF2 poly_from_bitstring(std::string_view s);
std::string to_bitstring(const PolyF2& f);
std::string to_algebraic(const PolyF2& f);  // e.g. "x^2+x+1", "0"

template <class E>
Poly<E> poly_from_csv(std::string_view s);
template <class E>
std::string poly_to_csv(const Poly<E>& f);

template <class E>
std::string poly_to_algebraic(const Poly<E>& f);  // "(u+uv)x^2+(1)x+(1+u)" style

}  // namespace dnacyclic

#endif
