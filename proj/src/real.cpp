#include "hyperpascal/real.hpp"

#include <sstream>

namespace hyperpascal {

Real real_pow10(long e, unsigned prec_bits) {
    Int p = pow10(static_cast<unsigned>(e < 0 ? -e : e));
    Real out(0, prec_bits);
    if (e >= 0) {
        out = Real(p, prec_bits);
    } else {
        out = 1;
        out /= Real(p, prec_bits);
    }
    return out;
}

Real real_sqrt_ui(unsigned long v, unsigned prec_bits) {
    Real x(v, prec_bits);
    Real out(0, prec_bits);
    out = sqrt(x);
    return out;
}

Real real_abs(const Real& x) {
    Real out(0, x.get_prec());
    out = abs(x);
    return out;
}

std::string real_to_string(const Real& x, size_t digits) {
    mp_exp_t exp10 = 0;
    std::string mant = x.get_str(exp10, 10, digits);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    if (d.empty()) return "0";
    std::string out;
    if (exp10 > 0 && static_cast<size_t>(exp10) <= d.size()) {
        out = d.substr(0, static_cast<size_t>(exp10));
        std::string frac = d.substr(static_cast<size_t>(exp10));
        if (!frac.empty()) out += "." + frac;
    } else if (exp10 <= 0 && static_cast<size_t>(-exp10) <= 6) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + d;
    } else if (exp10 > 0 && static_cast<size_t>(exp10) <= d.size() + 6) {
        out = d + std::string(static_cast<size_t>(exp10) - d.size(), '0');
    } else {
        // scientific fallback
        out = d.substr(0, 1);
        if (d.size() > 1) out += "." + d.substr(1);
        out += "e" + std::to_string(exp10 - 1);
    }
    return neg ? "-" + out : out;
}

}  // namespace hyperpascal
