#ifndef hyperpascal_polynomial_hpp
#define hyperpascal_polynomial_hpp

#include <string>
#include <utility>
#include <vector>

#include "hyperpascal/rational.hpp"

namespace hyperpascal {

// Univariate polynomial over the rationals, coefficients stored in ascending
// degree with no trailing zeros. The zero polynomial has an empty
// coefficient vector and degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> ascending_coeffs);

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rat& c);
    static Polynomial x();  // the monomial x

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const Rat& leading() const;
    Rat coeff(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rat& s) const;
    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Rat eval(const Rat& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;

    // Exact Euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    bool divides(const Polynomial& dividend) const;

    // Display form with descending powers, e.g. "x^5 - 12x^4 + 37x^3 - 37x^2 + 12x - 1".
    std::string to_display_string(const std::string& var = "x") const;

private:
    void strip();
    std::vector<Rat> coeffs_;
};

// Monic gcd by the Euclidean algorithm.
Polynomial poly_gcd(Polynomial a, Polynomial b);

}  // namespace hyperpascal

#endif
