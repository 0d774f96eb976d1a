#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gnnbench {

/// Dense row-major matrix of doubles. Small sizes only (n <= a few hundred).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static Matrix identity(std::size_t n);
    static Matrix ones(std::size_t rows, std::size_t cols);
    /// Builds an n x n diagonal matrix from an n x 1 column.
    static Matrix diag(const Matrix& column);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    Matrix transpose() const;
    double trace() const;
    double sum() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric(double tol = 0.0) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double scalar);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
    friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
/// Column-wise concatenation [a | b].
Matrix hconcat(const Matrix& a, const Matrix& b);
/// Sum of each row, as a column vector.
Matrix row_sums(const Matrix& m);
Matrix power(const Matrix& m, unsigned k);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs(const Matrix& m);

std::string to_string(const Matrix& m, int precision = 4);

}  // namespace gnnbench
