#include "hyperpascal/triangle.hpp"

#include <ostream>
#include <stdexcept>

namespace hyperpascal {

TriangleRow next_row(const TriangleRow& row, unsigned q) {
    if (q < 4) throw std::invalid_argument("next_row: q must be at least 4");
    TriangleRow out;
    out.n = row.n + 1;
    out.q = q;
    out.kinds.push_back(CellKind::Winger);
    out.values.push_back(1);
    for (size_t i = 0; i + 1 < row.size(); ++i) {
        // the shared A between neighbours i and i+1
        out.kinds.push_back(CellKind::A);
        out.values.push_back(row.values[i] + row.values[i + 1]);
        if (i + 2 < row.size()) {
            // own B children of the interior cell i+1
            unsigned copies = row.kinds[i + 1] == CellKind::A ? q - 4 : q - 3;
            for (unsigned c = 0; c < copies; ++c) {
                out.kinds.push_back(CellKind::B);
                out.values.push_back(row.values[i + 1]);
            }
        }
    }
    out.kinds.push_back(CellKind::Winger);
    out.values.push_back(1);
    return out;
}

TriangleRow triangle_row(unsigned q, unsigned n) {
    if (q < 4) throw std::invalid_argument("triangle_row: q must be at least 4");
    if (n > kTriangleRowCap) {
        throw std::invalid_argument("triangle_row: row " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kTriangleRowCap));
    }
    TriangleRow row;
    row.n = 0;
    row.q = q;
    row.kinds = {CellKind::Winger};
    row.values = {Int(1)};
    for (unsigned i = 0; i < n; ++i) row = next_row(row, q);
    return row;
}

Int binomh(unsigned q, unsigned n, size_t k) {
    TriangleRow row = triangle_row(q, n);
    if (k >= row.size()) {
        throw std::out_of_range("binomh: index " + std::to_string(k) + " out of range for row of size " +
                                std::to_string(row.size()));
    }
    return row.values[k];
}

RowCensus row_census(unsigned q, unsigned n) {
    TriangleRow row = triangle_row(q, n);
    RowCensus census;
    for (CellKind k : row.kinds) {
        switch (k) {
            case CellKind::Winger: ++census.wingers; break;
            case CellKind::A: ++census.count_a; break;
            case CellKind::B: ++census.count_b; break;
        }
    }
    return census;
}

char cell_kind_letter(CellKind k) {
    switch (k) {
        case CellKind::Winger: return '1';
        case CellKind::A: return 'A';
        case CellKind::B: return 'B';
    }
    return '?';
}

void write_row_csv(std::ostream& out, const TriangleRow& row) {
    out << "index,kind,value\n";
    for (size_t i = 0; i < row.size(); ++i) {
        out << i << ',' << cell_kind_letter(row.kinds[i]) << ',' << row.values[i].get_str() << '\n';
    }
}

}  // namespace hyperpascal
