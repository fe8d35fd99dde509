#include "hyperpascal/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperpascal {

Polynomial::Polynomial(std::vector<Rat> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    strip();
}

Polynomial Polynomial::constant(const Rat& c) {
    if (c == 0) return Polynomial();
    return Polynomial({c});
}

Polynomial Polynomial::x() {
    return Polynomial({Rat(0), Rat(1)});
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& Polynomial::leading() const {
    if (coeffs_.empty()) {
        throw std::domain_error("Polynomial::leading on zero polynomial");
    }
    return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rat> out(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator-() const {
    std::vector<Rat> out = coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& s) const {
    std::vector<Rat> out = coeffs_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

Rat Polynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    Rat inv = Rat(1) / leading();
    return *this * inv;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) {
        throw std::invalid_argument("Polynomial::divmod by zero polynomial");
    }
    std::vector<Rat> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rat> quot(static_cast<size_t>(degree() - dd) + 1, Rat(0));
    for (int k = degree(); k >= dd; --k) {
        Rat factor = rem[static_cast<size_t>(k)] / divisor.leading();
        if (factor == 0) continue;
        quot[static_cast<size_t>(k - dd)] = factor;
        for (int j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(k - dd + j)] -= factor * divisor.coeff(static_cast<size_t>(j));
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool Polynomial::divides(const Polynomial& dividend) const {
    if (is_zero()) return dividend.is_zero();
    return dividend.divmod(*this).second.is_zero();
}

std::string Polynomial::to_display_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(static_cast<size_t>(k));
        if (c == 0) continue;
        if (first) {
            if (sgn(c) < 0) out << "-";
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        Rat a = abs(c);
        if (a != 1 || k == 0) out << a.get_str();
        if (k > 0) {
            out << var;
            if (k > 1) out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace hyperpascal
