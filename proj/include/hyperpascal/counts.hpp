#ifndef hyperpascal_counts_hpp
#define hyperpascal_counts_hpp

#include <iosfwd>
#include <vector>

#include "hyperpascal/matrix.hpp"
#include "hyperpascal/rational.hpp"
#include "hyperpascal/real.hpp"
#include "hyperpascal/roots.hpp"

namespace hyperpascal {

// Per-level census of the pyramid by vertex type. a,b live on the faces;
// c,d,e are interior; ones counts the lateral-edge vertices (3 from level 1
// on, 1 at level 0 for the apex).
struct CountVector {
    unsigned n = 0;
    Int a, b, c, d, e;
    Int ones;
    Int s;
};

// Per-level sums of vertex values by type, same layout.
struct SumVector {
    unsigned n = 0;
    Int a, b, c, d, e;
    Int ones;
    Int s;
};

// System matrices of the two recurrence systems, in (a, b, c, d, e, v)
// order, and their face-only (a, b, v) sub-systems.
Matrix counts_matrix();
Matrix counts_ab_matrix();
Matrix sums_matrix();
Matrix sums_ab_matrix();

// Iterates the census system exactly from zero initial values. Intermediate
// arithmetic is rational; integrality is asserted at every step.
std::vector<CountVector> count_vectors(unsigned n_max);

// Iterates the value-sum system exactly from zero initial values.
std::vector<SumVector> sum_vectors(unsigned n_max);

enum class CountKind { A, B, C, D, E, S };

// Closed form of a census entry, evaluated exactly over Q(sqrt 5) and
// Q(sqrt 15); the radical parts must cancel and the result must be an
// integer. Valid for n >= 1 (the s form also holds at n = 0).
Int explicit_count(CountKind kind, unsigned n);

// Closed form of the face value sums (kinds A and B only), exact over
// Q(sqrt 2) with conjugate coefficient pairs. Valid for n >= 1.
Int explicit_sum_ab(CountKind kind, unsigned n);

// Numerical model for the interior part of the value-sum closed form: the
// three roots of x^3 - 13x^2 + 28x - 6 with rigorous brackets, and the
// coefficients recovered from the first three exact sums.
struct SumExplicitModel {
    RootInterval root4, root5, root6;  // ascending
    Real alpha4, alpha5, alpha6;
    Real delta4, delta5, delta6;
    unsigned precision_bits = 0;
};

SumExplicitModel build_sum_model(unsigned precision_bits);

// Total value sum at level n: exact quadratic part plus the cubic-root tail
// from the model. precision_bits >= 128.
Real explicit_sum_total(unsigned n, unsigned precision_bits);

enum class RatioKind { Counts, Sums, EuclideanCounts };

// s_{n}/s_{n-1} (or the value-sum analogue) rendered at the requested
// precision; n >= 2. Converges to 4 + sqrt(15) for counts and to the
// dominant cubic root for sums; the Euclidean census ratio tends to 1.
Real growth_ratio(RatioKind kind, unsigned n, unsigned precision_bits);

// Euclidean degeneration of the census system: no B, D, E vertices; the
// level census collapses to a_{n+1} = a_n + 3, c_{n+1} = a_n/3 + c_n and
// s_n = (n+1)(n+2)/2.
std::vector<CountVector> euclidean_counts(unsigned n_max);

// CSV table emission, columns n,a,b,c,d,e,s (hatted names for sums).
void write_counts_csv(std::ostream& out, const std::vector<CountVector>& rows);
void write_sums_csv(std::ostream& out, const std::vector<SumVector>& rows);

}  // namespace hyperpascal

#endif
