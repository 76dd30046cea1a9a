#ifndef DNACYCLIC_RINGS_HPP
#define DNACYCLIC_RINGS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic in the four coefficient rings used throughout:
//
//   F2   : the binary field
//   R1   : F2 + u F2 with u^2 = 1          (4 elements,  2 bits)
//   Rw   : R1 + w R1 with w^2 = 0          (16 elements, 4 bits)
//   R    : F2-span of {1, u, v, uv, v^2, uv^2} with u^2 = 1, v^3 = v
//          (64 elements, 6 bits)
//
// Every element is a value type identified by its coefficient bits over the
// fixed basis order above; all operations are pure functions.

namespace dnacyclic {

struct F2 {
    std::uint8_t v = 0;

    constexpr F2() = default;
    constexpr explicit F2(unsigned bit) : v(static_cast<std::uint8_t>(bit & 1u)) {}

    static constexpr int kBits = 1;
    static constexpr int kCount = 2;

    constexpr unsigned bits() const { return v; }
    static constexpr F2 from_bits(unsigned b) { return F2(b); }
    static constexpr F2 zero() { return F2(); }
    static constexpr F2 one() { return F2(1); }
    bool is_zero() const { return v == 0; }

    friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.v ^ b.v); }
    friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.v & b.v); }
    friend constexpr bool operator==(F2 a, F2 b) { return a.v == b.v; }
    friend constexpr bool operator<(F2 a, F2 b) { return a.v < b.v; }
};

// Element of the chain ring R1 = F2 + u F2, u^2 = 1.
// bit 0 = coefficient of 1, bit 1 = coefficient of u.
struct R1Elem {
    std::uint8_t b = 0;

    constexpr R1Elem() = default;
    constexpr explicit R1Elem(unsigned bits) : b(static_cast<std::uint8_t>(bits & 3u)) {}

    static constexpr int kBits = 2;
    static constexpr int kCount = 4;

    constexpr unsigned bits() const { return b; }
    static constexpr R1Elem from_bits(unsigned bits) { return R1Elem(bits); }
    static constexpr R1Elem zero() { return R1Elem(); }
    static constexpr R1Elem one() { return R1Elem(1); }
    static constexpr R1Elem u() { return R1Elem(2); }
    static constexpr R1Elem one_plus_u() { return R1Elem(3); }
    bool is_zero() const { return b == 0; }

    friend constexpr R1Elem operator+(R1Elem x, R1Elem y) { return R1Elem(x.b ^ y.b); }
    friend constexpr R1Elem operator*(R1Elem x, R1Elem y) {
        const unsigned a1 = x.b & 1u, a2 = (x.b >> 1) & 1u;
        const unsigned b1 = y.b & 1u, b2 = (y.b >> 1) & 1u;
        // (a1 + u a2)(b1 + u b2) with u^2 = 1
        return R1Elem(((a1 & b1) ^ (a2 & b2)) | (((a1 & b2) ^ (a2 & b1)) << 1));
    }
    friend constexpr bool operator==(R1Elem x, R1Elem y) { return x.b == y.b; }
    friend constexpr bool operator<(R1Elem x, R1Elem y) { return x.b < y.b; }
};

// Element of Rw = R1 + w R1 with w^2 = 0 (the image of R modulo 1 + v^2,
// where w = v + v^2).
struct RwElem {
    R1Elem r;  // coefficient of 1
    R1Elem s;  // coefficient of w

    constexpr RwElem() = default;
    constexpr RwElem(R1Elem r_, R1Elem s_) : r(r_), s(s_) {}

    static constexpr int kBits = 4;
    static constexpr int kCount = 16;

    constexpr unsigned bits() const { return r.bits() | (s.bits() << 2); }
    static constexpr RwElem from_bits(unsigned bits) {
        return RwElem(R1Elem(bits & 3u), R1Elem((bits >> 2) & 3u));
    }
    static constexpr RwElem zero() { return RwElem(); }
    static constexpr RwElem one() { return RwElem(R1Elem(1), R1Elem(0)); }
    static constexpr RwElem w() { return RwElem(R1Elem(0), R1Elem(1)); }
    bool is_zero() const { return r.is_zero() && s.is_zero(); }

    friend constexpr RwElem operator+(RwElem x, RwElem y) { return {x.r + y.r, x.s + y.s}; }
    friend constexpr RwElem operator*(RwElem x, RwElem y) {
        // (r1 + w s1)(r2 + w s2) = r1 r2 + w (r1 s2 + s1 r2), w^2 = 0
        return {x.r * y.r, x.r * y.s + x.s * y.r};
    }
    friend constexpr bool operator==(RwElem x, RwElem y) { return x.r == y.r && x.s == y.s; }
    friend constexpr bool operator<(RwElem x, RwElem y) { return x.bits() < y.bits(); }
};

// Element of R; bit i is the coefficient of the i-th basis monomial in the
// order 1, u, v, uv, v^2, uv^2.
struct RElem {
    std::uint8_t b = 0;

    constexpr RElem() = default;
    constexpr explicit RElem(unsigned bits) : b(static_cast<std::uint8_t>(bits & 63u)) {}

    static constexpr int kBits = 6;
    static constexpr int kCount = 64;

    constexpr unsigned bits() const { return b; }
    static constexpr RElem from_bits(unsigned bits) { return RElem(bits); }
    static constexpr RElem zero() { return RElem(); }
    static constexpr RElem one() { return RElem(1); }
    static constexpr RElem u() { return RElem(2); }
    static constexpr RElem v() { return RElem(4); }
    static constexpr RElem one_plus_u() { return RElem(3); }
    bool is_zero() const { return b == 0; }

    friend constexpr RElem operator+(RElem x, RElem y) { return RElem(x.b ^ y.b); }
    friend RElem operator*(RElem x, RElem y);
    friend constexpr bool operator==(RElem x, RElem y) { return x.b == y.b; }
    friend constexpr bool operator<(RElem x, RElem y) { return x.b < y.b; }
};

// Product of two R elements by symbolic reduction of basis monomials
// (u^i v^j with u^2 -> 1, v^3 -> v). operator* serves results from a table
// built once from this function.
RElem mul_reduce(RElem x, RElem y);

// Watson-Crick complement on ring elements: x + (1 + u).  Involutive and
// fixed-point free.  Defined on R and on its subring R1 only.
constexpr RElem complement(RElem x) { return RElem(x.b ^ 3u); }
constexpr R1Elem complement(R1Elem x) { return R1Elem(x.b ^ 3u); }

// Ring homomorphism R1 -> R along the basis inclusion {1, u}.
constexpr RElem embed_r1(R1Elem x) { return RElem(x.b); }

template <class E>
const std::array<E, E::kCount>& all_elements() {
    static const std::array<E, E::kCount> table = [] {
        std::array<E, E::kCount> t{};
        for (unsigned i = 0; i < E::kCount; ++i) t[i] = E::from_bits(i);
        return t;
    }();
    return table;
}

// Units of the ring, found once by table scan.
template <class E>
const std::vector<E>& units() {
    static const std::vector<E> table = [] {
        std::vector<E> t;
        for (unsigned i = 0; i < E::kCount; ++i) {
            const E x = E::from_bits(i);
            for (unsigned j = 0; j < E::kCount; ++j) {
                if (x * E::from_bits(j) == E::one()) {
                    t.push_back(x);
                    break;
                }
            }
        }
        return t;
    }();
    return table;
}

// F2-basis monomials of the ring, in coefficient-bit order.
template <class E>
std::array<E, E::kBits> scalar_basis() {
    std::array<E, E::kBits> t{};
    for (int i = 0; i < E::kBits; ++i) t[i] = E::from_bits(1u << i);
    return t;
}

// Coefficient-bit-string syntax: "a1a2...": e.g. "110000" = 1+u in R,
// "11" = 1+u in R1.
template <class E>
std::string to_bitstring(E x) {
    std::string s(E::kBits, '0');
    for (int i = 0; i < E::kBits; ++i)
        if ((x.bits() >> i) & 1u) s[i] = '1';
    return s;
}

template <class E>
E elem_from_bitstring(std::string_view s);

// Algebraic names over the printed basis, e.g. "v+uv+v^2+uv^2"; "0" for zero.
std::string r_name(RElem x);
RElem r_parse_name(std::string_view name);
std::string r1_name(R1Elem x);
R1Elem r1_parse_name(std::string_view name);

}  // namespace dnacyclic

#endif
