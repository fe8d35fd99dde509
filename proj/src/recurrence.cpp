#include "hyperpascal/recurrence.hpp"

#include <sstream>
#include <stdexcept>

namespace hyperpascal {

std::string RecurrenceSpec::to_string() const {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ", ";
        out << coeffs[i].get_str();
    }
    out << ")";
    return out.str();
}

Polynomial charpoly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
    size_t n = m.rows();
    // c holds descending coefficients of the characteristic polynomial of the
    // leading principal r x r block; starts with the empty matrix (poly 1).
    std::vector<Rat> c{Rat(1)};
    for (size_t r = 1; r <= n; ++r) {
        // Toeplitz column t for the r-th Berkowitz step.
        std::vector<Rat> t(r + 1, Rat(0));
        t[0] = 1;
        t[1] = -m.at(r - 1, r - 1);
        if (r >= 2) {
            std::vector<Rat> vec(r - 1);
            for (size_t i = 0; i + 1 < r; ++i) vec[i] = m.at(i, r - 1);  // column above the diagonal
            for (size_t k = 2; k <= r; ++k) {
                Rat acc(0);
                for (size_t i = 0; i + 1 < r; ++i) acc += m.at(r - 1, i) * vec[i];
                t[k] = -acc;
                if (k < r) {
                    // vec <- (leading principal block) * vec
                    std::vector<Rat> next(r - 1, Rat(0));
                    for (size_t i = 0; i + 1 < r; ++i) {
                        for (size_t j = 0; j + 1 < r; ++j) {
                            if (m.at(i, j) != 0) next[i] += m.at(i, j) * vec[j];
                        }
                    }
                    vec = std::move(next);
                }
            }
        }
        std::vector<Rat> next(r + 1, Rat(0));
        for (size_t i = 0; i <= r; ++i) {
            for (size_t j = 0; j < c.size() && j <= i; ++j) {
                next[i] += t[i - j] * c[j];
            }
        }
        c = std::move(next);
    }
    std::vector<Rat> ascending(c.rbegin(), c.rend());
    return Polynomial(std::move(ascending));
}

Polynomial minpoly(const Matrix& m) {
    if (!m.is_square()) throw std::invalid_argument("minpoly: matrix is not square");
    size_t n = m.rows();
    if (n == 0) return Polynomial({Rat(1)});
    size_t dim = n * n;
    auto flatten = [&](const Matrix& a) {
        std::vector<Rat> v(dim);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    std::vector<std::vector<Rat>> powers;  // vec(M^0), vec(M^1), ...
    Matrix mk = Matrix::identity(n);
    for (size_t k = 0;; ++k) {
        std::vector<Rat> target = flatten(mk);
        if (k > 0) {
            Matrix basis(dim, k);
            for (size_t j = 0; j < k; ++j)
                for (size_t i = 0; i < dim; ++i) basis.at(i, j) = powers[j][i];
            auto combo = solve_linear(basis, target);
            if (combo) {
                // M^k = sum combo_j M^j  ->  x^k - sum combo_j x^j
                std::vector<Rat> coeffs(k + 1, Rat(0));
                for (size_t j = 0; j < k; ++j) coeffs[j] = -(*combo)[j];
                coeffs[k] = 1;
                return Polynomial(std::move(coeffs));
            }
        }
        powers.push_back(std::move(target));
        mk = mk * m;
        if (k > n) throw std::logic_error("minpoly: no annihilator found below dimension bound");
    }
}

RecurrenceSpec scalar_recurrence(const Matrix& m, RecurrenceMode mode) {
    Polynomial p = mode == RecurrenceMode::Characteristic ? charpoly(m) : minpoly(m);
    size_t k = static_cast<size_t>(p.degree());
    RecurrenceSpec spec;
    spec.coeffs.resize(k);
    for (size_t j = 1; j <= k; ++j) spec.coeffs[j - 1] = -p.coeff(k - j);
    if (k > 0 && spec.coeffs[k - 1] == 0) {
        spec.degenerate = true;  // rank-deficient system, no full-order guarantee at the lowest index
    }
    return spec;
}

bool verify_recurrence(const std::vector<Rat>& seq, const RecurrenceSpec& spec, size_t from_index) {
    if (from_index < spec.order()) {
        throw std::invalid_argument("verify_recurrence: from_index below recurrence order");
    }
    if (seq.size() <= from_index) {
        throw std::invalid_argument("verify_recurrence: sequence too short, no index to check");
    }
    for (size_t i = from_index; i < seq.size(); ++i) {
        Rat acc(0);
        for (size_t j = 1; j <= spec.order(); ++j) {
            acc += spec.coeffs[j - 1] * seq[i - j];
        }
        if (acc != seq[i]) return false;
    }
    return true;
}

}  // namespace hyperpascal
