#ifndef hyperpascal_quadratic_hpp
#define hyperpascal_quadratic_hpp

#include <string>

#include "hyperpascal/rational.hpp"

namespace hyperpascal {

// Exact element a + b*sqrt(d) of a real quadratic field. The radicand must
// be a square-free positive integer; d == 1 collapses to the rationals and
// is normalized away so that equality stays componentwise. Values with
// b == 0 are radicand-agnostic and combine with any field.
class QuadraticNumber {
public:
    QuadraticNumber() : d_(1), a_(0), b_(0) {}
    QuadraticNumber(long d, Rat rational_part, Rat radical_part);

    static QuadraticNumber rational(const Rat& value) { return QuadraticNumber(1, value, Rat(0)); }

    long radicand() const { return d_; }
    const Rat& rational_part() const { return a_; }
    const Rat& radical_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    QuadraticNumber conjugate() const { return QuadraticNumber(d_, a_, -b_); }

    QuadraticNumber operator-() const { return QuadraticNumber(d_, -a_, -b_); }
    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;

    bool operator==(const QuadraticNumber& o) const;
    bool operator!=(const QuadraticNumber& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    // Shared radicand of two operands; throws when both are irrational over
    // distinct fields.
    static long merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y);

    long d_;
    Rat a_;
    Rat b_;
};

// Exact n-th power by binary exponentiation.
QuadraticNumber quad_pow(const QuadraticNumber& x, unsigned long n);

}  // namespace hyperpascal

#endif
