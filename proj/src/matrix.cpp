#include "hyperpascal/matrix.hpp"

#include <stdexcept>

namespace hyperpascal {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void Matrix::require_square(const char* op) const {
    if (!is_square()) {
        throw std::invalid_argument(std::string(op) + ": matrix is not square (" + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + ")");
    }
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator+: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix::operator-: shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
    Matrix out(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator*(const Rat& s) const {
    Matrix out = *this;
    for (auto& v : out.data_) v *= s;
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_) {
        if (v != 0) return false;
    }
    return true;
}

size_t Matrix::rank() const {
    std::vector<Rat> work = data_;
    auto entry = [&](size_t r, size_t c) -> Rat& { return work[r * cols_ + c]; };
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && entry(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        for (size_t c = 0; c < cols_; ++c) std::swap(entry(rank, c), entry(pivot, c));
        Rat inv = Rat(1) / entry(rank, col);
        for (size_t c = col; c < cols_; ++c) entry(rank, c) *= inv;
        for (size_t r = 0; r < rows_; ++r) {
            if (r == rank || entry(r, col) == 0) continue;
            Rat f = entry(r, col);
            for (size_t c = col; c < cols_; ++c) entry(r, c) -= f * entry(rank, c);
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::eval_polynomial(const Polynomial& p) const {
    require_square("Matrix::eval_polynomial");
    Matrix acc(rows_, cols_);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * *this;
        Rat c = p.coeff(static_cast<size_t>(k));
        if (c != 0) {
            for (size_t i = 0; i < rows_; ++i) acc.at(i, i) += c;
        }
    }
    return acc;
}

std::optional<std::vector<Rat>> solve_linear(const Matrix& a, const std::vector<Rat>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
    size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
        aug[i][n] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && aug[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[row], aug[p]);
        Rat inv = Rat(1) / aug[row][col];
        for (size_t c = col; c <= n; ++c) aug[row][c] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (size_t c = col; c <= n; ++c) aug[r][c] -= f * aug[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t r = row; r < m; ++r) {
        if (aug[r][n] != 0) return std::nullopt;  // inconsistent
    }
    std::vector<Rat> x(n, Rat(0));
    for (size_t r = 0; r < pivot_col.size(); ++r) {
        x[pivot_col[r]] = aug[r][n];
    }
    return x;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace hyperpascal
