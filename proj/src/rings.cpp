#include "dnacyclic/rings.hpp"

#include <stdexcept>

namespace dnacyclic {

RElem mul_reduce(RElem x, RElem y) {
    // basis index m = 2j + i encodes u^i v^j
    unsigned out = 0;
    for (unsigned m = 0; m < 6; ++m) {
        if (!((x.b >> m) & 1u)) continue;
        const unsigned i1 = m & 1u, j1 = m >> 1;
        for (unsigned k = 0; k < 6; ++k) {
            if (!((y.b >> k) & 1u)) continue;
            const unsigned i2 = k & 1u, j2 = k >> 1;
            const unsigned i = (i1 + i2) & 1u;  // u^2 = 1
            unsigned j = j1 + j2;
            while (j >= 3) j -= 2;  // v^3 = v
            out ^= 1u << (2 * j + i);
        }
    }
    return RElem(out);
}

RElem operator*(RElem x, RElem y) {
    static const auto table = [] {
        std::array<std::array<std::uint8_t, 64>, 64> t{};
        for (unsigned i = 0; i < 64; ++i)
            for (unsigned j = 0; j < 64; ++j) t[i][j] = mul_reduce(RElem(i), RElem(j)).b;
        return t;
    }();
    return RElem(table[x.b][y.b]);
}

template <class E>
E elem_from_bitstring(std::string_view s) {
    if (s.size() != static_cast<std::size_t>(E::kBits))
        throw std::invalid_argument("element bit string must have length " +
                                    std::to_string(E::kBits) + ": '" + std::string(s) + "'");
    unsigned bits = 0;
    for (int i = 0; i < E::kBits; ++i) {
        if (s[i] == '1')
            bits |= 1u << i;
        else if (s[i] != '0')
            throw std::invalid_argument("element bit string may contain only 0/1: '" +
                                        std::string(s) + "'");
    }
    return E::from_bits(bits);
}

template F2 elem_from_bitstring<F2>(std::string_view);
template R1Elem elem_from_bitstring<R1Elem>(std::string_view);
template RwElem elem_from_bitstring<RwElem>(std::string_view);
template RElem elem_from_bitstring<RElem>(std::string_view);

namespace {
constexpr const char* kRTerms[6] = {"1", "u", "v", "uv", "v^2", "uv^2"};
}

std::string r_name(RElem x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (int i = 0; i < 6; ++i) {
        if ((x.bits() >> i) & 1u) {
            if (!out.empty()) out += '+';
            out += kRTerms[i];
        }
    }
    return out;
}

RElem r_parse_name(std::string_view name) {
    if (name == "0") return RElem::zero();
    unsigned bits = 0;
    std::size_t pos = 0;
    while (pos <= name.size()) {
        const std::size_t next = name.find('+', pos);
        const std::string_view term =
            name.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        bool matched = false;
        for (int i = 0; i < 6; ++i) {
            if (term == kRTerms[i]) {
                bits |= 1u << i;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("unknown ring term '" + std::string(term) + "' in '" +
                                        std::string(name) + "'");
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return RElem(bits);
}

std::string r1_name(R1Elem x) {
    switch (x.bits()) {
        case 0: return "0";
        case 1: return "1";
        case 2: return "u";
        default: return "1+u";
    }
}

R1Elem r1_parse_name(std::string_view name) {
    if (name == "0") return R1Elem(0);
    if (name == "1") return R1Elem(1);
    if (name == "u") return R1Elem(2);
    if (name == "1+u") return R1Elem(3);
    throw std::invalid_argument("unknown R1 element '" + std::string(name) + "'");
}

}  // namespace dnacyclic
