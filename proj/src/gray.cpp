#include "dnacyclic/gray.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dnacyclic {

BinaryWord phi(RElem x) {
    const unsigned a = x.bits();
    const auto bit = [a](int i) { return static_cast<std::uint8_t>((a >> (i - 1)) & 1u); };
    return {bit(1),
            bit(2),
            static_cast<std::uint8_t>(bit(1) ^ bit(3)),
            static_cast<std::uint8_t>(bit(2) ^ bit(4)),
            static_cast<std::uint8_t>(bit(1) ^ bit(5)),
            static_cast<std::uint8_t>(bit(2) ^ bit(6))};
}

BinaryWord phi_word(const std::vector<RElem>& word) {
    BinaryWord out;
    out.reserve(word.size() * 6);
    for (RElem c : word) {
        const BinaryWord b = phi(c);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

int lee_weight(RElem x) { return std::popcount(x.bits()); }

int lee_distance(RElem x, RElem y) { return lee_weight(x + y); }

int hamming(const BinaryWord& x, const BinaryWord& y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: word length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

BinaryWord nu(const BinaryWord& b) {
    if (b.size() % 6 != 0)
        throw std::invalid_argument("nu requires a word length divisible by 6");
    BinaryWord out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[(i + 6) % b.size()] = b[i];
    return out;
}

std::vector<BinaryWord> binary_image(const Codewords<RElem>& set) {
    std::vector<BinaryWord> out;
    out.reserve(set.words.size());
    for (const std::vector<RElem>& w : set.words) out.push_back(phi_word(w));
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(const BinaryWord& b, bool grouped) {
    std::string out;
    out.reserve(b.size() + (grouped ? b.size() / 6 : 0));
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (grouped && i > 0 && i % 6 == 0) out += ' ';
        out += b[i] ? '1' : '0';
    }
    return out;
}

}  // namespace dnacyclic
