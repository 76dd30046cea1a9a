#include "dnacyclic/reference_tables.hpp"

namespace dnacyclic {

// Printed rows of the published reference tables (transcribed verbatim).

const std::array<Table1Row, 64> kTable1{{
    {"0", "0", "0", "0", "AAA"},
    {"v^2", "0", "0", "1", "AAG"},
    {"uv^2", "0", "0", "u", "AAC"},
    {"v^2+uv^2", "0", "0", "1+u", "AAT"},
    {"v", "0", "1", "0", "AGA"},
    {"v+v^2", "0", "1", "1", "AGG"},
    {"v+uv^2", "0", "1", "u", "AGC"},
    {"v+v^2+uv^2", "0", "1", "1+u", "AGT"},
    {"uv", "0", "u", "0", "ACA"},
    {"uv+v^2", "0", "u", "1", "ACG"},
    {"uv+uv^2", "0", "u", "u", "ACC"},
    {"uv+v^2+uv^2", "0", "u", "1+u", "ACT"},
    {"v+uv", "0", "1+u", "0", "ATA"},
    {"v+uv+v^2", "0", "1+u", "1", "ATG"},
    {"v+uv+uv^2", "0", "u", "u", "ATC"},
    {"v+uv+v^2+uv^2", "0", "u", "1+u", "ATT"},
    {"u", "u", "u", "u", "CCC"},
    {"u+v^2", "u", "u", "1+u", "CCT"},
    {"u+uv^2", "u", "u", "0", "CCA"},
    {"u+v^2+uv^2", "u", "u", "1", "CCG"},
    {"u+v", "u", "1+u", "u", "CTC"},
    {"u+v+v^2", "u", "1+u", "1+u", "CTT"},
    {"u+v+uv^2", "u", "1+u", "0", "CTA"},
    {"u+v+v^2+uv^2", "u", "1+u", "1", "CTG"},
    {"u+uv", "u", "0", "u", "CAC"},
    {"u+uv+v^2", "u", "0", "1+u", "CAT"},
    {"u+uv+uv^2", "u", "0", "0", "CAA"},
    {"u+uv+v^2+uv^2", "u", "0", "1", "CAG"},
    {"u+v+uv", "u", "1", "u", "CGC"},
    {"u+v+uv+v^2", "u", "1", "1+u", "CGT"},
    {"u+v+uv+uv^2", "u", "1", "0", "CGA"},
    {"u+v+uv+v^2+uv^2", "u", "1", "1", "CGG"},
    {"1", "1", "1", "1", "GGG"},
    {"1+v^2", "1", "1", "0", "GGA"},
    {"1+uv^2", "1", "1", "1+u", "GGT"},
    {"1+v^2+uv^2", "1", "1", "u", "GGC"},
    {"1+v", "1", "0", "1", "GAG"},
    {"1+v+v^2", "1", "0", "0", "GAA"},
    {"1+v+uv^2", "1", "0", "1+u", "GAT"},
    {"1+v+v^2+uv^2", "1", "0", "u", "GAC"},
    {"1+uv", "1", "1+u", "1", "GTG"},
    {"1+uv+v^2", "1", "1+u", "0", "GTA"},
    {"1+uv+uv^2", "1", "1+u", "1+u", "GTT"},
    {"1+uv+v^2+uv^2", "1", "1+u", "u", "GTC"},
    {"1+v+uv", "1", "u", "1", "GCG"},
    {"1+v+uv+v^2", "1", "u", "0", "GCA"},
    {"1+v+uv+uv^2", "1", "u", "1+u", "GCT"},
    {"1+v+uv+v^2+uv^2", "1", "u", "u", "GCC"},
    {"1+u", "1+u", "1+u", "1+u", "TTT"},
    {"1+u+v^2", "1+u", "1+u", "u", "TTC"},
    {"1+u+uv^2", "1+u", "1+u", "1", "TTG"},
    {"1+u+v^2+uv^2", "1+u", "1+u", "0", "TTA"},
    {"1+u+v", "1+u", "u", "1+u", "TCT"},
    {"1+u+v+v^2", "1+u", "u", "u", "TCC"},
    {"1+u+v+uv^2", "1+u", "u", "1", "TCG"},
    {"1+u+v+v^2+uv^2", "1+u", "u", "0", "TCA"},
    {"1+u+uv", "1+u", "1", "1+u", "TGT"},
    {"1+u+uv+v^2", "1+u", "1", "u", "TGC"},
    {"1+u+uv+uv^2", "1+u", "1", "1", "TGG"},
    {"1+u+uv+v^2+uv^2", "1+u", "1", "0", "TGA"},
    {"1+u+v+uv", "1+u", "0", "1+u", "TAT"},
    {"1+u+v+uv+v^2", "1+u", "0", "u", "TAC"},
    {"1+u+v+uv+uv^2", "1+u", "0", "1", "TAG"},
    {"1+u+v+uv+v^2+uv^2", "1+u", "0", "0", "TAA"},
}};

const std::array<Table2Row, 64> kTable2{{
    {"AAA", "000000"},
    {"AAG", "000010"},
    {"AAC", "000001"},
    {"AAT", "000011"},
    {"AGA", "001000"},
    {"AGG", "001010"},
    {"AGC", "001001"},
    {"AGT", "001011"},
    {"ACA", "000100"},
    {"ACG", "000110"},
    {"ACC", "000101"},
    {"ACT", "000111"},
    {"ATA", "001100"},
    {"ATG", "001110"},
    {"ATC", "001101"},
    {"ATT", "001111"},
    {"CCC", "010101"},
    {"CCT", "010111"},
    {"CCA", "010100"},
    {"CCG", "010110"},
    {"CTC", "011101"},
    {"CTT", "011111"},
    {"CTA", "011100"},
    {"CTG", "011110"},
    {"CAC", "010001"},
    {"CAT", "010011"},
    {"CAA", "010000"},
    {"CAG", "010010"},
    {"CGC", "011001"},
    {"CGT", "011011"},
    {"CGC", "011000"},
    {"CGG", "011010"},
    {"GGG", "101010"},
    {"GGA", "101000"},
    {"GGT", "101011"},
    {"GGC", "101001"},
    {"GAG", "100010"},
    {"GAA", "100000"},
    {"GAT", "100011"},
    {"GAC", "100001"},
    {"GTG", "101110"},
    {"GTA", "101100"},
    {"GTT", "101111"},
    {"GTC", "101101"},
    {"GCG", "100110"},
    {"GCA", "100100"},
    {"GCT", "100111"},
    {"GCC", "100101"},
    {"TTT", "111111"},
    {"TTC", "111101"},
    {"TTG", "111110"},
    {"TTA", "111100"},
    {"TCT", "110111"},
    {"TCC", "110101"},
    {"TCG", "110110"},
    {"TCA", "110100"},
    {"TGT", "111011"},
    {"TGC", "111001"},
    {"TGG", "111010"},
    {"TGA", "111000"},
    {"TAT", "110011"},
    {"TAC", "110001"},
    {"TAG", "110010"},
    {"TAA", "110000"},
}};

const std::array<const char*, 64> kTable3{{
    "AAAAAAAAA", "TTTTTTTTT", "CCCCCCCCC", "GGGGGGGGG",
    "AAAAAAGGG", "TTTTTTCCC", "CCCCCCTTT", "GGGGGGAAA",
    "AAAAAACCC", "TTTTTTGGG", "CCCCCCAAA", "GGGGGGTTT",
    "AAAAAATTT", "TTTTTTAAA", "CCCCCCGGG", "GGGGGGCCC",
    "AAAGGGAAA", "TTTCCCTTT", "CCCTTTCCC", "GGGAAAGGG",
    "AAAGGGGGG", "TTTCCCCCC", "CCCTTTTTT", "GGGAAAAAA",
    "AAAGGGCCC", "TTTCCCGGG", "CCCTTTAAA", "GGGAAATTT",
    "AAAGGGTTT", "TTTCCCAAA", "CCCTTTGGG", "GGGAAACCC",
    "AAACCCAAA", "TTTGGGTTT", "CCCAAACCC", "GGGTTTGGG",
    "AAACCCGGG", "TTTGGGCCC", "CCCAAATTT", "GGGTTTAAA",
    "AAACCCCCC", "TTTGGGGGG", "CCCAAAAAA", "GGGTTTTTT",
    "AAACCCTTT", "TTTGGGAAA", "CCCAAAGGG", "GGGTTTCCC",
    "AAATTTAAA", "TTTAAATTT", "CCCGGGCCC", "GGGCCCGGG",
    "AAATTTGGG", "TTTAAACCC", "CCCGGGTTT", "GGGCCCAAA",
    "AAATTTCCC", "TTTAAAGGG", "CCCGGGAAA", "GGGCCCTTT",
    "AAATTTTTT", "TTTAAAAAA", "CCCGGGGGG", "GGGCCCCCC",
}};

const std::array<const char*, 8> kTable4{{
    "AAAAAA", "TTTTTT", "ATATAT", "TATATA", "GGGGGG", "CCCCCC", "GCGCGC", "CGCGCG",
}};

std::vector<RElem> table_element_order() {
    std::vector<RElem> out;
    out.reserve(64);
    for (unsigned a : {0u, 2u, 1u, 3u})
        for (unsigned b = 0; b < 4; ++b)
            for (unsigned c = 0; c < 4; ++c) out.push_back(RElem(a | (b << 2) | (c << 4)));
    return out;
}

}  // namespace dnacyclic
