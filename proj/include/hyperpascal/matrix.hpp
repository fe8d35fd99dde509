#ifndef hyperpascal_matrix_hpp
#define hyperpascal_matrix_hpp

#include <initializer_list>
#include <optional>
#include <vector>

#include "hyperpascal/polynomial.hpp"
#include "hyperpascal/rational.hpp"

namespace hyperpascal {

// Dense rational matrix; every operation is exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const Rat& s) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // M v
    bool is_zero() const;

    size_t rank() const;

    // p(M) by Horner's scheme.
    Matrix eval_polynomial(const Polynomial& p) const;

private:
    void require_square(const char* op) const;
    size_t rows_;
    size_t cols_;
    std::vector<Rat> data_;
};

// Solves A x = b exactly; nullopt when inconsistent. When the system is
// underdetermined an arbitrary consistent solution is returned.
std::optional<std::vector<Rat>> solve_linear(const Matrix& a, const std::vector<Rat>& b);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace hyperpascal

#endif
