#ifndef DNACYCLIC_REFERENCE_TABLES_HPP
#define DNACYCLIC_REFERENCE_TABLES_HPP

#include <array>
#include <vector>

#include "dnacyclic/rings.hpp"

// The published reference tables, transcribed row by row exactly as printed
// (known misprints included).  The errata suite regenerates each table and
// compares against these.

namespace dnacyclic {

// Table 1: element of R, its triple over R1, and its codon.
struct Table1Row {
    const char* element;
    const char* g1;
    const char* g2;
    const char* g3;
    const char* codon;
};
extern const std::array<Table1Row, 64> kTable1;

// Table 2: codon and its 6-bit binary image, flattened to the same element
// order as Table 1 (the printed layout is 16 rows by 4 codon/bits columns).
struct Table2Row {
    const char* codon;
    const char* bits;
};
extern const std::array<Table2Row, 64> kTable2;

// Table 3: the 64 strands of the length-3 code generated by
// (u+uv+uv^2)(1+x+x^2), flattened row-major from the printed 16x4 layout.
extern const std::array<const char*, 64> kTable3;

// Table 4: the eight printed strands of the length-6 code over R1.
extern const std::array<const char*, 8> kTable4;

// The 64 elements of R in the printed table order: blocks by the constant
// R1 part a in {0, u, 1, 1+u}, then b, then c (each in bit order), for
// x = a + v b + v^2 c.
std::vector<RElem> table_element_order();

}  // namespace dnacyclic

#endif
