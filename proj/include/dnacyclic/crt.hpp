#ifndef DNACYCLIC_CRT_HPP
#define DNACYCLIC_CRT_HPP

#include <utility>
#include <vector>

#include "dnacyclic/poly.hpp"
#include "dnacyclic/rings.hpp"

// The decomposition R = R1[v]/<v(1+v^2)> ~ R1 x Rw induced by the coprime
// ideals <v> and <1+v^2>, with w = v + v^2.  Writing x = a + b v + c v^2
// (a, b, c in R1):
//
//   split(x)   = (a, (a+b+c) + b w)
//   combine(p) = a + B v + (a+A+B) v^2     for p = (a, A + B w)
//
// split is a ring isomorphism onto the product; combine is its two-sided
// inverse (exhaustively checked in the test suite).

namespace dnacyclic {

struct CrtPair {
    R1Elem first;   // image in R1[v]/<v>
    RwElem second;  // image in R1[v]/<1+v^2>, written A + B w

    friend bool operator==(const CrtPair& x, const CrtPair& y) {
        return x.first == y.first && x.second == y.second;
    }
};

CrtPair crt_split(RElem x);
RElem crt_combine(const CrtPair& p);

std::pair<std::vector<R1Elem>, std::vector<RwElem>> crt_split_vector(const std::vector<RElem>& c);
// Throws std::invalid_argument on length mismatch.
std::vector<RElem> crt_combine_vector(const std::vector<R1Elem>& first,
                                      const std::vector<RwElem>& second);

std::pair<PolyR1, PolyRw> crt_split_poly(const PolyR& f);
PolyR crt_combine_poly(const PolyR1& first, const PolyRw& second);

}  // namespace dnacyclic

#endif
