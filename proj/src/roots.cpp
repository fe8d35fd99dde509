#include "hyperpascal/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperpascal {

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        Polynomial rem = a.divmod(b).second;
        chain.push_back(-rem);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

size_t sign_variations(const std::vector<Polynomial>& chain, const Rat& x) {
    size_t variations = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

Rat cauchy_bound(const Polynomial& p) {
    Rat bound(1);
    Rat lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        Rat c = abs(p.coeff(static_cast<size_t>(k))) / lead;
        if (c > bound) bound = c;
    }
    return bound + 1;
}

// A split point strictly inside (lo, hi) that is not a root of p.
Rat nonroot_split(const Polynomial& p, const Rat& lo, const Rat& hi) {
    Rat mid = (lo + hi) / 2;
    Rat step = (hi - lo) / 16;
    for (int tries = 0; tries < 8; ++tries) {
        if (p.eval(mid) != 0) return mid;
        mid += step;
        if (mid >= hi) mid = lo + step / (tries + 2);
    }
    throw std::logic_error("nonroot_split: could not avoid roots");
}

}  // namespace

Real RootInterval::midpoint(unsigned prec_bits) const {
    Rat m = (lo + hi) / 2;
    return real_from_rat(m, prec_bits);
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p) {
    if (p.degree() <= 0) return {};
    // square-free part so root counts are multiplicity-blind
    Polynomial sf = p.divmod(poly_gcd(p, p.derivative())).first;
    std::vector<Polynomial> chain = sturm_chain(sf);

    Rat bound = cauchy_bound(sf);
    std::vector<RootInterval> out;
    // roots counted in half-open intervals (lo, hi]
    struct Span {
        Rat lo, hi;
        size_t roots;
    };
    size_t total = sign_variations(chain, -bound) - sign_variations(chain, bound);
    std::vector<Span> stack;
    stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.roots == 0) continue;
        if (s.roots == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = nonroot_split(sf, s.lo, s.hi);
        size_t left = sign_variations(chain, s.lo) - sign_variations(chain, mid);
        stack.push_back({s.lo, mid, left});
        stack.push_back({mid, s.hi, s.roots - left});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const Polynomial& p, RootInterval interval, unsigned bits) {
    if (interval.lo == interval.hi) return interval;
    Rat target = make_rat(Int(1), pow2(bits));
    int lo_sign = sgn(p.eval(interval.lo));
    int hi_sign = sgn(p.eval(interval.hi));
    if (lo_sign == 0 || hi_sign == 0 || lo_sign == hi_sign) {
        throw std::invalid_argument("refine_root: bracket must have a sign change with non-root endpoints");
    }
    while (interval.width() > target) {
        Rat mid = (interval.lo + interval.hi) / 2;
        int s = sgn(p.eval(mid));
        if (s == 0) {
            return {mid, mid};
        }
        if (s == lo_sign) {
            interval.lo = mid;
        } else {
            interval.hi = mid;
        }
    }
    return interval;
}

}  // namespace hyperpascal
