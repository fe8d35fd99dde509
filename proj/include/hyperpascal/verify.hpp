#ifndef hyperpascal_verify_hpp
#define hyperpascal_verify_hpp

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperpascal/pyramid.hpp"

namespace hyperpascal {

// Cross-engine equivalence and structural audits. Checks report rather than
// throw; an empty failure list means success.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // first failing index and expected/actual values
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    size_t failure_count() const;
    void write_json(std::ostream& out) const;
    void write_text(std::ostream& out) const;
};

// Frozen expected per-level censuses and value sums, levels 0..10. These are
// the ground truth both engines must reproduce cell for cell.
using TableFixture = std::array<std::array<long, 11>, 6>;  // rows a,b,c,d,e,s

const TableFixture& expected_counts_table();
const TableFixture& expected_sums_table();

// Recurrence and closed-form engines against the frozen tables, plus the
// Euclidean degeneration against its closed form.
VerificationReport verify_tables();
VerificationReport verify_tables_against(const TableFixture& counts, const TableFixture& sums);

// (i) graph census == recurrence output up to min(n_max, graph_cap),
// (ii) recurrences == closed forms up to n_max, (iii) every sequence
// satisfies its scalar recurrence, (iv) the polynomial certificates.
VerificationReport cross_check(unsigned n_max, unsigned graph_cap = 8);

// Every structural invariant of the built graph: degrees by type, level
// separation of edges, value propagation, interior-child typing, face rows
// against the triangle engine, divisibility of the face censuses.
VerificationReport structural_audit(const PyramidGraph& graph);

}  // namespace hyperpascal

#endif
