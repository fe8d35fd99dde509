#ifndef hyperpascal_recurrence_hpp
#define hyperpascal_recurrence_hpp

#include <string>
#include <vector>

#include "hyperpascal/matrix.hpp"
#include "hyperpascal/polynomial.hpp"

namespace hyperpascal {

// Homogeneous linear recurrence r_i = sum_j coeffs[j-1] * r_{i-j}.
struct RecurrenceSpec {
    std::vector<Rat> coeffs;
    // Set when the defining matrix is rank-deficient in characteristic mode:
    // the trailing coefficient vanishes and the order-k guarantee at the
    // lowest index does not apply.
    bool degenerate = false;

    size_t order() const { return coeffs.size(); }
    std::string to_string() const;
    bool operator==(const RecurrenceSpec& o) const { return coeffs == o.coeffs; }
};

// Characteristic polynomial by the Berkowitz algorithm (division-free, exact).
Polynomial charpoly(const Matrix& m);

// Least-degree monic annihilator, found by incremental linear-dependence
// search over I, M, M^2, ...
Polynomial minpoly(const Matrix& m);

enum class RecurrenceMode { Characteristic, Minimal };

// Reads the scalar recurrence off the chosen polynomial of the system
// matrix: p(x) = x^k - sum_j beta_j x^{k-j} gives the beta vector. Any
// sequence r_i = alpha^T M^{i-1} a0 satisfies it from index >= order.
RecurrenceSpec scalar_recurrence(const Matrix& m, RecurrenceMode mode);

// Exact check that seq[i] = sum_j coeffs[j-1] * seq[i-j] for all
// from_index <= i < seq.size(). Requires from_index >= order and at least
// one checkable index.
bool verify_recurrence(const std::vector<Rat>& seq, const RecurrenceSpec& spec, size_t from_index);

}  // namespace hyperpascal

#endif
