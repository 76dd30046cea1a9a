#include "dnacyclic/poly.hpp"

#include <algorithm>
#include <map>

namespace dnacyclic {

PolyF2 xn_minus_one(int n) {
    if (n < 1) throw std::invalid_argument("x^n - 1 requires n >= 1");
    std::vector<F2> c(static_cast<std::size_t>(n) + 1, F2::zero());
    c[0] = F2::one();
    c[n] = F2::one();
    return PolyF2(std::move(c));
}

std::pair<PolyF2, PolyF2> divmod(const PolyF2& num, const PolyF2& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<F2> rem(num.coeffs());
    const int dd = den.degree();
    if (num.degree() < dd) return {PolyF2(), num};
    std::vector<F2> quot(static_cast<std::size_t>(num.degree() - dd) + 1, F2::zero());
    for (int i = num.degree(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        quot[i - dd] = F2::one();
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] + den.coeff(j);
    }
    return {PolyF2(std::move(quot)), PolyF2(std::move(rem))};
}

bool divides(const PolyF2& a, const PolyF2& b) {
    if (a.is_zero()) throw std::domain_error("divisibility by the zero polynomial");
    return divmod(b, a).second.is_zero();
}

bool is_irreducible(const PolyF2& f) {
    const int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f.coeff(0).is_zero()) return false;  // divisible by x
    // trial division by every poly of degree <= d/2 with nonzero constant term
    for (int dd = 1; 2 * dd <= d; ++dd) {
        for (unsigned inner = 0; inner < (1u << (dd - 1)); ++inner) {
            std::vector<F2> c(static_cast<std::size_t>(dd) + 1, F2::zero());
            c[0] = F2::one();
            c[dd] = F2::one();
            for (int i = 1; i < dd; ++i)
                if ((inner >> (i - 1)) & 1u) c[i] = F2::one();
            if (divides(PolyF2(std::move(c)), f)) return false;
        }
    }
    return true;
}

std::vector<PolyF2> factor_xn_minus_one(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("factor_xn_minus_one supports 1 <= n <= 64");
    PolyF2 rem = xn_minus_one(n);
    std::vector<PolyF2> factors;
    // Trial division by candidates of increasing degree; every divisor found
    // this way is irreducible because all smaller degrees were stripped first.
    // Divisors of x^n - 1 have nonzero constant term, so candidates are monic
    // with constant term 1.
    for (int d = 1; 2 * d <= rem.degree(); ++d) {
        for (unsigned inner = 0; inner < (1u << (d - 1)); ++inner) {
            std::vector<F2> c(static_cast<std::size_t>(d) + 1, F2::zero());
            c[0] = F2::one();
            c[d] = F2::one();
            for (int i = 1; i < d; ++i)
                if ((inner >> (i - 1)) & 1u) c[i] = F2::one();
            PolyF2 cand(std::move(c));
            while (rem.degree() >= d && divides(cand, rem)) {
                factors.push_back(cand);
                rem = divmod(rem, cand).first;
            }
        }
    }
    if (rem.degree() >= 1) factors.push_back(rem);
    std::sort(factors.begin(), factors.end(), [](const PolyF2& a, const PolyF2& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return to_bitstring(a) < to_bitstring(b);
    });
    return factors;
}

std::vector<PolyF2> divisors_of_xn_minus_one(int n) {
    const std::vector<PolyF2> factors = factor_xn_minus_one(n);
    std::map<std::string, PolyF2> divisors;
    divisors.emplace(to_bitstring(PolyF2::one()), PolyF2::one());
    for (const PolyF2& f : factors) {
        std::map<std::string, PolyF2> next = divisors;
        for (const auto& [_, d] : divisors) {
            PolyF2 m = d * f;
            next.emplace(to_bitstring(m), m);
        }
        divisors = std::move(next);
    }
    std::vector<PolyF2> out;
    out.reserve(divisors.size());
    for (auto& [_, d] : divisors) out.push_back(std::move(d));
    std::sort(out.begin(), out.end(), [](const PolyF2& a, const PolyF2& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return to_bitstring(a) < to_bitstring(b);
    });
    return out;
}

std::string format_factorization(const std::vector<PolyF2>& factors) {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size();) {
        std::size_t j = i;
        while (j < factors.size() && factors[j] == factors[i]) ++j;
        out += "(" + to_algebraic(factors[i]) + ")";
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

template <class E>
std::pair<Poly<E>, Poly<E>> divmod_unit_lead(const Poly<E>& num, const Poly<E>& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const E lead = den.leading();
    E inv = E::zero();
    bool unit = false;
    for (E cand : all_elements<E>()) {
        if (lead * cand == E::one()) {
            inv = cand;
            unit = true;
            break;
        }
    }
    if (!unit) throw std::domain_error("division requires a unit leading coefficient");
    std::vector<E> rem(num.coeffs());
    const int dd = den.degree();
    if (num.degree() < dd) return {Poly<E>(), num};
    std::vector<E> quot(static_cast<std::size_t>(num.degree() - dd) + 1, E::zero());
    for (int i = num.degree(); i >= dd; --i) {
        if (rem[i].is_zero()) continue;
        const E q = rem[i] * inv;
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] + q * den.coeff(j);
    }
    return {Poly<E>(std::move(quot)), Poly<E>(std::move(rem))};
}

template std::pair<PolyR1, PolyR1> divmod_unit_lead<R1Elem>(const PolyR1&, const PolyR1&);
template std::pair<PolyRw, PolyRw> divmod_unit_lead<RwElem>(const PolyRw&, const PolyRw&);
template std::pair<PolyR, PolyR> divmod_unit_lead<RElem>(const PolyR&, const PolyR&);

PolyF2 poly_from_bitstring(std::string_view s) {
    std::vector<F2> c;
    c.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("polynomial bit string may contain only 0/1: '" +
                                        std::string(s) + "'");
        c.push_back(F2(ch == '1'));
    }
    return PolyF2(std::move(c));
}

std::string to_bitstring(const PolyF2& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) s += f.coeff(i).is_zero() ? '0' : '1';
    return s;
}

std::string to_algebraic(const PolyF2& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        if (f.coeff(i).is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

template <class E>
Poly<E> poly_from_csv(std::string_view s) {
    std::vector<E> c;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(',', pos);
        const std::string_view tok =
            s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        c.push_back(elem_from_bitstring<E>(tok));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return Poly<E>(std::move(c));
}

template Poly<F2> poly_from_csv<F2>(std::string_view);
template Poly<R1Elem> poly_from_csv<R1Elem>(std::string_view);
template Poly<RwElem> poly_from_csv<RwElem>(std::string_view);
template Poly<RElem> poly_from_csv<RElem>(std::string_view);

template <class E>
std::string poly_to_csv(const Poly<E>& f) {
    if (f.is_zero()) return to_bitstring(E::zero());
    std::string out;
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) out += ',';
        out += to_bitstring(f.coeff(i));
    }
    return out;
}

template std::string poly_to_csv<F2>(const Poly<F2>&);
template std::string poly_to_csv<R1Elem>(const Poly<R1Elem>&);
template std::string poly_to_csv<RwElem>(const Poly<RwElem>&);
template std::string poly_to_csv<RElem>(const Poly<RElem>&);

namespace {

std::string coeff_name(R1Elem c) { return r1_name(c); }
std::string coeff_name(RElem c) { return r_name(c); }
std::string coeff_name(RwElem c) {
    if (c.is_zero()) return "0";
    std::string out;
    if (!c.r.is_zero()) out = r1_name(c.r);
    if (!c.s.is_zero()) {
        if (!out.empty()) out += '+';
        out += c.s == R1Elem::one() ? "w" : "(" + r1_name(c.s) + ")w";
    }
    return out;
}

}  // namespace

template <class E>
std::string poly_to_algebraic(const Poly<E>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const E c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += "(" + coeff_name(c) + ")";
        } else {
            out += "(" + coeff_name(c) + ")";
            out += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

template std::string poly_to_algebraic<R1Elem>(const Poly<R1Elem>&);
template std::string poly_to_algebraic<RwElem>(const Poly<RwElem>&);
template std::string poly_to_algebraic<RElem>(const Poly<RElem>&);

}  // namespace dnacyclic
