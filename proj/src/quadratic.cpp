#include "hyperpascal/quadratic.hpp"

#include <sstream>

namespace hyperpascal {

namespace {

bool square_free_positive(long d) {
    if (d <= 0) return false;
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

}  // namespace

QuadraticNumber::QuadraticNumber(long d, Rat rational_part, Rat radical_part)
    : d_(d), a_(std::move(rational_part)), b_(std::move(radical_part)) {
    if (!square_free_positive(d_)) {
        throw std::invalid_argument("QuadraticNumber: radicand must be a square-free positive integer, got " +
                                    std::to_string(d));
    }
    if (d_ == 1) {
        // sqrt(1) = 1, fold into the rational part
        a_ += b_;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

long QuadraticNumber::merge_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.is_rational()) return y.d_;
    if (y.is_rational()) return x.d_;
    if (x.d_ != y.d_) {
        throw std::invalid_argument("QuadraticNumber: mixing radicands " + std::to_string(x.d_) + " and " +
                                    std::to_string(y.d_));
    }
    return x.d_;
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    long d = merge_radicand(*this, o);
    return QuadraticNumber(d, a_ + o.a_, b_ + o.b_);
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const {
    long d = merge_radicand(*this, o);
    return QuadraticNumber(d, a_ - o.a_, b_ - o.b_);
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const {
    long d = merge_radicand(*this, o);
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    return QuadraticNumber(d, a, b);
}

bool QuadraticNumber::operator==(const QuadraticNumber& o) const {
    if (a_ != o.a_ || b_ != o.b_) return false;
    return is_rational() || d_ == o.d_;
}

std::string QuadraticNumber::to_string() const {
    std::ostringstream out;
    out << a_.get_str();
    if (b_ != 0) {
        out << (sgn(b_) < 0 ? " - " : " + ");
        Rat ab = abs(b_);
        if (ab != 1) out << ab.get_str() << "*";
        out << "sqrt(" << d_ << ")";
    }
    return out.str();
}

QuadraticNumber quad_pow(const QuadraticNumber& x, unsigned long n) {
    QuadraticNumber result = QuadraticNumber::rational(Rat(1));
    QuadraticNumber base = x;
    while (n > 0) {
        if (n & 1) result = result * base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

}  // namespace hyperpascal
