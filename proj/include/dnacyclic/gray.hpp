#ifndef DNACYCLIC_GRAY_HPP
#define DNACYCLIC_GRAY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dnacyclic/codes.hpp"
#include "dnacyclic/rings.hpp"

// The binary Gray map phi : R -> F2^6,
//
//   phi(a1 + u a2 + v a3 + uv a4 + v^2 a5 + uv^2 a6)
//       = (a1, a2, a1+a3, a2+a4, a1+a5, a2+a6),
//
// extended per coordinate to codewords (6n bits), plus Lee weight/distance
// and the shift operators sigma (one coordinate) and nu (six bits).

namespace dnacyclic {

using BinaryWord = std::vector<std::uint8_t>;  // entries 0/1

BinaryWord phi(RElem x);
BinaryWord phi_word(const std::vector<RElem>& word);

// Lee weight: the coefficient sum over the fixed basis of R.
int lee_weight(RElem x);
int lee_distance(RElem x, RElem y);

int hamming(const BinaryWord& x, const BinaryWord& y);

// Right rotation by one coordinate.
template <class E>
std::vector<E> sigma(const std::vector<E>& c) {
    std::vector<E> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[(i + 1) % c.size()] = c[i];
    return out;
}

// Right rotation by six bits; the word length must be a multiple of 6.
BinaryWord nu(const BinaryWord& b);

// Elementwise phi image of all codewords, sorted; the image is F2-linear and
// closed under nu.
std::vector<BinaryWord> binary_image(const Codewords<RElem>& set);

// "010101" or grouped "010101 110000 ..." in blocks of six.
std::string to_string(const BinaryWord& b, bool grouped = true);

}  // namespace dnacyclic

#endif
