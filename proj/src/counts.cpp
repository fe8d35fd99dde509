#include "hyperpascal/counts.hpp"

#include <ostream>
#include <stdexcept>

#include "hyperpascal/quadratic.hpp"

namespace hyperpascal {

namespace {

Rat r(long num, long den = 1) { return make_rat(num, den); }

// coeff * root^n + conjugate(coeff) * conjugate(root)^n = 2 * rational part
Rat conjugate_pair_value(const QuadraticNumber& coeff, const QuadraticNumber& root, unsigned n) {
    QuadraticNumber term = coeff * quad_pow(root, n);
    return Rat(2) * term.rational_part();
}

const QuadraticNumber kAlpha1{5, r(3, 2), r(1, 2)};   // (3 + sqrt 5)/2
const QuadraticNumber kAlpha3{15, r(4), r(1)};        // 4 + sqrt 15
const QuadraticNumber kSumBase{2, r(2), r(1)};        // 2 + sqrt 2

struct CountForm {
    QuadraticNumber coeff5;
    QuadraticNumber coeff15;  // zero for a, b
    Rat constant;
};

const CountForm& count_form(CountKind kind) {
    static const CountForm forms[] = {
        /* A */ {{5, r(-9, 2), r(21, 10)}, {15, r(0), r(0)}, r(3)},
        /* B */ {{5, r(3), r(-6, 5)}, {15, r(0), r(0)}, r(-3)},
        /* C */ {{5, r(-33, 10), r(3, 2)}, {15, r(122, 15), r(-21, 10)}, r(1, 3)},
        /* D */ {{5, r(27, 5), r(-12, 5)}, {15, r(-213, 20), r(11, 4)}, r(-3, 2)},
        /* E */ {{5, r(-21, 10), r(9, 10)}, {15, r(31, 10), r(-4, 5)}, r(1)},
        /* S */ {{5, r(-3, 2), r(9, 10)}, {15, r(7, 12), r(-3, 20)}, r(17, 6)},
    };
    return forms[static_cast<size_t>(kind)];
}

}  // namespace

Matrix counts_matrix() {
    return Matrix{{r(1), r(1), r(0), r(0), r(0), r(1)},
                  {r(1), r(2), r(0), r(0), r(0), r(0)},
                  {r(1, 3), r(0), r(1), r(2, 3), r(0), r(0)},
                  {r(0), r(1, 2), r(3, 2), r(2), r(5, 2), r(0)},
                  {r(0), r(0), r(3), r(4), r(6), r(0)},
                  {r(0), r(0), r(0), r(0), r(0), r(1)}};
}

Matrix counts_ab_matrix() {
    return Matrix{{r(1), r(1), r(1)}, {r(1), r(2), r(0)}, {r(0), r(0), r(1)}};
}

Matrix sums_matrix() {
    return Matrix{{r(2), r(2), r(0), r(0), r(0), r(2)},
                  {r(1), r(2), r(0), r(0), r(0), r(0)},
                  {r(1), r(0), r(3), r(2), r(0), r(0)},
                  {r(0), r(1), r(3), r(4), r(5), r(0)},
                  {r(0), r(0), r(3), r(4), r(6), r(0)},
                  {r(0), r(0), r(0), r(0), r(0), r(1)}};
}

Matrix sums_ab_matrix() {
    return Matrix{{r(2), r(2), r(2)}, {r(1), r(2), r(0)}, {r(0), r(0), r(1)}};
}

std::vector<CountVector> count_vectors(unsigned n_max) {
    std::vector<CountVector> out;
    out.reserve(n_max + 1);
    Rat a(0), b(0), c(0), d(0), e(0);
    for (unsigned n = 0; n <= n_max; ++n) {
        CountVector v;
        v.n = n;
        v.a = to_integer_exact(a);
        v.b = to_integer_exact(b);
        v.c = to_integer_exact(c);
        v.d = to_integer_exact(d);
        v.e = to_integer_exact(e);
        v.ones = n == 0 ? 1 : 3;
        v.s = v.a + v.b + v.c + v.d + v.e + v.ones;
        out.push_back(std::move(v));
        if (n == 0) continue;  // the system governs n >= 1; level 1 is all zeros
        Rat na = a + b + 3;
        Rat nb = a + 2 * b;
        Rat nc = a / 3 + c + Rat(2) * d / 3;
        Rat nd = b / 2 + Rat(3) * c / 2 + 2 * d + Rat(5) * e / 2;
        Rat ne = 3 * c + 4 * d + 6 * e;
        a = na;
        b = nb;
        c = nc;
        d = nd;
        e = ne;
    }
    return out;
}

std::vector<SumVector> sum_vectors(unsigned n_max) {
    std::vector<SumVector> out;
    out.reserve(n_max + 1);
    Int a(0), b(0), c(0), d(0), e(0);
    for (unsigned n = 0; n <= n_max; ++n) {
        SumVector v;
        v.n = n;
        v.a = a;
        v.b = b;
        v.c = c;
        v.d = d;
        v.e = e;
        v.ones = n == 0 ? 1 : 3;
        v.s = a + b + c + d + e + v.ones;
        out.push_back(std::move(v));
        if (n == 0) continue;
        Int na = 2 * a + 2 * b + 6;
        Int nb = a + 2 * b;
        Int nc = a + 3 * c + 2 * d;
        Int nd = b + 3 * c + 4 * d + 5 * e;
        Int ne = 3 * c + 4 * d + 6 * e;
        a = na;
        b = nb;
        c = nc;
        d = nd;
        e = ne;
    }
    return out;
}

Int explicit_count(CountKind kind, unsigned n) {
    const CountForm& form = count_form(kind);
    Rat value = form.constant;
    value += conjugate_pair_value(form.coeff5, kAlpha1, n);
    if (!form.coeff15.is_rational() || form.coeff15.rational_part() != 0) {
        value += conjugate_pair_value(form.coeff15, kAlpha3, n);
    }
    return to_integer_exact(value);
}

Int explicit_sum_ab(CountKind kind, unsigned n) {
    if (n == 0) throw std::invalid_argument("explicit_sum_ab: valid from n = 1");
    QuadraticNumber coeff{2, r(0), r(0)};
    Rat constant;
    if (kind == CountKind::A) {
        coeff = QuadraticNumber{2, r(-6), r(9, 2)};  // (9/2) sqrt2 - 6
        constant = r(6);
    } else if (kind == CountKind::B) {
        coeff = QuadraticNumber{2, r(9, 2), r(-3)};  // 9/2 - 3 sqrt2
        constant = r(-6);
    } else {
        throw std::invalid_argument("explicit_sum_ab: only the face kinds A and B have exact closed forms");
    }
    Rat value = conjugate_pair_value(coeff, kSumBase, n) + constant;
    return to_integer_exact(value);
}

SumExplicitModel build_sum_model(unsigned precision_bits) {
    if (precision_bits < 128) throw std::invalid_argument("build_sum_model: precision_bits must be >= 128");
    unsigned work_bits = precision_bits + 64;
    SumExplicitModel model;
    model.precision_bits = precision_bits;

    // interior characteristic factor
    Polynomial cubic({r(-6), r(28), r(-13), r(1)});
    auto intervals = isolate_real_roots(cubic);
    if (intervals.size() != 3) throw std::logic_error("build_sum_model: expected three real cubic roots");
    model.root4 = refine_root(cubic, intervals[0], precision_bits + 16);
    model.root5 = refine_root(cubic, intervals[1], precision_bits + 16);
    model.root6 = refine_root(cubic, intervals[2], precision_bits + 16);
    model.alpha4 = model.root4.midpoint(work_bits);
    model.alpha5 = model.root5.midpoint(work_bits);
    model.alpha6 = model.root6.midpoint(work_bits);

    // Exact residuals r_n = s_n - 3 - (quadratic-field part), n = 1..3, then
    // solve the 3x3 power system for the deltas.
    auto sums = sum_vectors(3);
    QuadraticNumber quad_coeff{2, r(-3, 2), r(3, 2)};  // (3/2)(sqrt2 - 1)
    Real rhs[3];
    for (unsigned n = 1; n <= 3; ++n) {
        Rat exact_part = Rat(3) + conjugate_pair_value(quad_coeff, kSumBase, n);
        Rat residual = Rat(sums[n].s) - exact_part;
        rhs[n - 1] = real_from_rat(residual, work_bits);
    }
    Real roots[3] = {model.alpha4, model.alpha5, model.alpha6};
    // Gaussian elimination on the 3x3 power system [roots[j]^(i+1)].
    Real a[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Real p(1, work_bits);
            for (int e = 0; e < i + 1; ++e) p *= roots[j];
            a[i][j] = p;
        }
        a[i][3] = rhs[i];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row) {
            if (real_abs(a[row][col]) > real_abs(a[pivot][col])) pivot = row;
        }
        for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[pivot][c]);
        for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            Real f(0, work_bits);
            f = a[row][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[row][c] -= f * a[col][c];
        }
    }
    Real deltas[3];
    for (int i = 0; i < 3; ++i) {
        deltas[i] = Real(0, work_bits);
        deltas[i] = a[i][3] / a[i][i];
    }
    model.delta4 = deltas[0];
    model.delta5 = deltas[1];
    model.delta6 = deltas[2];
    return model;
}

Real explicit_sum_total(unsigned n, unsigned precision_bits) {
    if (n == 0) throw std::invalid_argument("explicit_sum_total: valid from n = 1");
    SumExplicitModel model = build_sum_model(precision_bits);
    unsigned work_bits = precision_bits + 64;
    QuadraticNumber quad_coeff{2, r(-3, 2), r(3, 2)};
    Rat exact_part = Rat(3) + conjugate_pair_value(quad_coeff, kSumBase, n);
    Real total(0, work_bits);
    total = real_from_rat(exact_part, work_bits);
    Real p4(1, work_bits), p5(1, work_bits), p6(1, work_bits);
    for (unsigned i = 0; i < n; ++i) {
        p4 *= model.alpha4;
        p5 *= model.alpha5;
        p6 *= model.alpha6;
    }
    total += model.delta4 * p4 + model.delta5 * p5 + model.delta6 * p6;
    return total;
}

Real growth_ratio(RatioKind kind, unsigned n, unsigned precision_bits) {
    if (n < 2) throw std::invalid_argument("growth_ratio: n must be at least 2");
    Rat ratio;
    switch (kind) {
        case RatioKind::Counts: {
            auto rows = count_vectors(n);
            ratio = make_rat(rows[n].s, rows[n - 1].s);
            break;
        }
        case RatioKind::Sums: {
            auto rows = sum_vectors(n);
            ratio = make_rat(rows[n].s, rows[n - 1].s);
            break;
        }
        case RatioKind::EuclideanCounts: {
            auto rows = euclidean_counts(n);
            ratio = make_rat(rows[n].s, rows[n - 1].s);
            break;
        }
    }
    return real_from_rat(ratio, precision_bits);
}

std::vector<CountVector> euclidean_counts(unsigned n_max) {
    std::vector<CountVector> out;
    out.reserve(n_max + 1);
    Rat a(0), c(0);
    for (unsigned n = 0; n <= n_max; ++n) {
        CountVector v;
        v.n = n;
        v.a = to_integer_exact(a);
        v.b = 0;
        v.c = to_integer_exact(c);
        v.d = 0;
        v.e = 0;
        v.ones = n == 0 ? 1 : 3;
        v.s = v.a + v.c + v.ones;
        out.push_back(std::move(v));
        if (n == 0) continue;
        Rat na = a + 3;
        Rat nc = a / 3 + c;
        a = na;
        c = nc;
    }
    return out;
}

void write_counts_csv(std::ostream& out, const std::vector<CountVector>& rows) {
    out << "n,a,b,c,d,e,s\n";
    for (const auto& v : rows) {
        out << v.n << ',' << v.a.get_str() << ',' << v.b.get_str() << ',' << v.c.get_str() << ',' << v.d.get_str()
            << ',' << v.e.get_str() << ',' << v.s.get_str() << '\n';
    }
}

void write_sums_csv(std::ostream& out, const std::vector<SumVector>& rows) {
    out << "n,a_hat,b_hat,c_hat,d_hat,e_hat,s_hat\n";
    for (const auto& v : rows) {
        out << v.n << ',' << v.a.get_str() << ',' << v.b.get_str() << ',' << v.c.get_str() << ',' << v.d.get_str()
            << ',' << v.e.get_str() << ',' << v.s.get_str() << '\n';
    }
}

}  // namespace hyperpascal
