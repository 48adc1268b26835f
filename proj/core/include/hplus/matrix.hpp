#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hplus/polynomial.hpp"
#include "hplus/rational.hpp"

namespace hplus {

/// Dense row-major matrix. The 0x0 matrix is the designated empty matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if ((rows == 0) != (cols == 0)) throw std::invalid_argument("Matrix: only 0x0 may be empty");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    T trace() const {
        T acc = T(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
        return acc;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
        if (a.empty() || b.empty()) return Matrix();
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const T& x = a(i, l);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
            }
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: dimension mismatch in sum");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: dimension mismatch in difference");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend Matrix operator*(const T& s, Matrix m) {
        for (auto& x : m.data_) x = s * x;
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using PolynomialMatrix = Matrix<RationalPolynomial>;

/// Raised by exact elimination when no nonzero pivot exists in a column.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t stage, std::size_t dimension)
        : std::runtime_error("singular matrix: rank deficiency detected at pivot stage " + std::to_string(stage) +
                             " of " + std::to_string(dimension)),
          stage_(stage) {}

    /// Zero-based column at which elimination found no pivot.
    std::size_t stage() const { return stage_; }

private:
    std::size_t stage_;
};

/// Exact inverse by fraction-free (Bareiss) Gauss-Jordan elimination.
/// Throws SingularMatrixError or std::invalid_argument for non-square input.
RationalMatrix inverse(const RationalMatrix& m);

/// Exact rank over Q.
std::size_t rank(const RationalMatrix& m);

/// Exact determinant (square input).
Rational determinant(const RationalMatrix& m);

/// Searches for a permutation `perm` with a(i, j) == b(perm[i], perm[j]) for all i, j.
/// Returns nullopt when none exists. Backtracking with diagonal pruning.
std::optional<std::vector<std::size_t>> find_simultaneous_permutation(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace hplus
