#ifndef hyperpascal_rational_hpp
#define hyperpascal_rational_hpp

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hyperpascal {

// Exact arithmetic substrate. mpq_class keeps values canonical (reduced,
// positive denominator) through every operation, which is what the rest of
// the library relies on for equality and hashing.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den = Int(1)) {
    if (den == 0) {
        throw std::invalid_argument("make_rat: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) {
    return r.get_den() == 1;
}

// Whole-number extraction; throws when the value has a fractional part.
inline Int to_integer_exact(const Rat& r) {
    if (!is_integer(r)) {
        throw std::domain_error("to_integer_exact: value " + r.get_str() + " is not an integer");
    }
    return r.get_num();
}

inline int sign(const Rat& r) {
    return sgn(r);
}

inline std::string to_string(const Int& v) {
    return v.get_str();
}

inline std::string to_string(const Rat& v) {
    return v.get_str();
}

inline Int int_from_string(const std::string& s) {
    return Int(s);
}

inline Rat rat_from_parts(const std::string& num, const std::string& den) {
    return make_rat(Int(num), Int(den));
}

inline Int pow10(unsigned k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

inline Int pow2(unsigned k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    return p;
}

}  // namespace hyperpascal

#endif
