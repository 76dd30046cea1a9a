#include "dnacyclic/crt.hpp"

#include <stdexcept>

namespace dnacyclic {

namespace {

// x = a + b v + c v^2 over R1: a = bits 0-1, b = bits 2-3, c = bits 4-5.
struct R1Parts {
    R1Elem a, b, c;
};

R1Parts parts(RElem x) {
    return {R1Elem(x.bits() & 3u), R1Elem((x.bits() >> 2) & 3u), R1Elem((x.bits() >> 4) & 3u)};
}

}  // namespace

CrtPair crt_split(RElem x) {
    const auto [a, b, c] = parts(x);
    return {a, RwElem(a + b + c, b)};
}

RElem crt_combine(const CrtPair& p) {
    const R1Elem a = p.first;
    const R1Elem A = p.second.r;
    const R1Elem B = p.second.s;
    return RElem(a.bits() | (B.bits() << 2) | ((a + A + B).bits() << 4));
}

std::pair<std::vector<R1Elem>, std::vector<RwElem>> crt_split_vector(const std::vector<RElem>& c) {
    std::vector<R1Elem> first;
    std::vector<RwElem> second;
    first.reserve(c.size());
    second.reserve(c.size());
    for (RElem x : c) {
        const CrtPair p = crt_split(x);
        first.push_back(p.first);
        second.push_back(p.second);
    }
    return {std::move(first), std::move(second)};
}

std::vector<RElem> crt_combine_vector(const std::vector<R1Elem>& first,
                                      const std::vector<RwElem>& second) {
    if (first.size() != second.size())
        throw std::invalid_argument("crt_combine_vector: component length mismatch");
    std::vector<RElem> out;
    out.reserve(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out.push_back(crt_combine({first[i], second[i]}));
    return out;
}

std::pair<PolyR1, PolyRw> crt_split_poly(const PolyR& f) {
    std::vector<R1Elem> first;
    std::vector<RwElem> second;
    for (int i = 0; i <= f.degree(); ++i) {
        const CrtPair p = crt_split(f.coeff(i));
        first.push_back(p.first);
        second.push_back(p.second);
    }
    return {PolyR1(std::move(first)), PolyRw(std::move(second))};
}

PolyR crt_combine_poly(const PolyR1& first, const PolyRw& second) {
    const int len = std::max(first.degree(), second.degree()) + 1;
    std::vector<RElem> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        out.push_back(crt_combine({first.coeff(i), second.coeff(i)}));
    return PolyR(std::move(out));
}

}  // namespace dnacyclic
