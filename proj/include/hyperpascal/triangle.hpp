#ifndef hyperpascal_triangle_hpp
#define hyperpascal_triangle_hpp

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hyperpascal/rational.hpp"

namespace hyperpascal {

// Rows of the Pascal triangle attached to the square mosaic {4,q}. Cells on
// a row are typed: the two wingers carry value 1, interior cells are either
// type A (two ascendants, value = their sum) or type B (one ascendant, value
// copied). q = 4 degenerates to the classical Pascal triangle.
enum class CellKind : uint8_t { Winger, A, B };

struct TriangleRow {
    unsigned n = 0;
    unsigned q = 5;
    std::vector<CellKind> kinds;
    std::vector<Int> values;

    size_t size() const { return values.size(); }
};

// Row growth: a winger emits the next winger plus one A shared with its
// neighbour; an A emits two shared A and q-4 own B; a B emits two shared A
// and q-3 own B. Shared cells get the sum of their two ascendants.
TriangleRow next_row(const TriangleRow& row, unsigned q);

// Rows grow roughly like 2.6^n for q = 5; the cap keeps memory use
// predictable.
inline constexpr unsigned kTriangleRowCap = 40;

TriangleRow triangle_row(unsigned q, unsigned n);

// k-th value in row n.
Int binomh(unsigned q, unsigned n, size_t k);

struct RowCensus {
    size_t wingers = 0;
    size_t count_a = 0;
    size_t count_b = 0;
};

RowCensus row_census(unsigned q, unsigned n);

char cell_kind_letter(CellKind k);

// CSV columns: index,kind,value.
void write_row_csv(std::ostream& out, const TriangleRow& row);

}  // namespace hyperpascal

#endif
