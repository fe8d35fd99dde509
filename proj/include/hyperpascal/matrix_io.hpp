#ifndef hyperpascal_matrix_io_hpp
#define hyperpascal_matrix_io_hpp

#include <iosfwd>
#include <string>

#include "hyperpascal/matrix.hpp"
#include "hyperpascal/polynomial.hpp"
#include "hyperpascal/recurrence.hpp"

namespace hyperpascal {

// JSON schema shared with the command-line `recur` command. Entries are
// [numerator, denominator] pairs of decimal strings so values of any size
// round-trip exactly:
//   { "rows": 3, "cols": 3,
//     "entries": [[["1","1"],["1","1"],["1","1"]], ...] }
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);
Matrix matrix_from_json_file(const std::string& path);

// { "coefficients": [["-1","1"], ...] } ascending degree.
std::string polynomial_to_json(const Polynomial& p);

// Machine-readable payload of the recur command: characteristic and minimal
// polynomials plus the scalar recurrence in the chosen mode, coefficients as
// [numerator, denominator] decimal strings.
std::string recurrence_report_json(const Matrix& m, RecurrenceMode mode);

}  // namespace hyperpascal

#endif
