#ifndef hyperpascal_real_hpp
#define hyperpascal_real_hpp

#include <gmpxx.h>

#include <string>

#include "hyperpascal/rational.hpp"

namespace hyperpascal {

// High-precision binary floats (mpf) are used only where an exact answer is
// impossible: cubic roots and the coefficients attached to them. Precision
// is always passed explicitly; never rely on the gmp default.
using Real = mpf_class;

inline Real real_from_rat(const Rat& r, unsigned prec_bits) {
    return Real(r, prec_bits);
}

// 10^e at the given precision, e may be negative.
Real real_pow10(long e, unsigned prec_bits);

Real real_sqrt_ui(unsigned long v, unsigned prec_bits);

Real real_abs(const Real& x);

// Plain decimal rendering with the requested number of significant digits.
std::string real_to_string(const Real& x, size_t digits);

}  // namespace hyperpascal

#endif
