#ifndef hyperpascal_roots_hpp
#define hyperpascal_roots_hpp

#include <vector>

#include "hyperpascal/polynomial.hpp"
#include "hyperpascal/real.hpp"

namespace hyperpascal {

// One real root bracketed by exact rational endpoints. lo == hi marks an
// exact rational root.
struct RootInterval {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    Real midpoint(unsigned prec_bits) const;
};

// All real roots of p, each in its own interval, sorted ascending. Isolation
// uses Sturm chains with exact sign evaluation, so the brackets are rigorous.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p);

// Shrinks the bracket by bisection until width <= 2^-bits. Signs are
// evaluated exactly at rational points.
RootInterval refine_root(const Polynomial& p, RootInterval interval, unsigned bits);

}  // namespace hyperpascal

#endif
