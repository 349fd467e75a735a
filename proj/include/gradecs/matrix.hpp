#pragma once

#include "gradecs/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gradecs {

// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> column(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }

    friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }
    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
        return a * std::span<const T>(v);
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(T s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
std::optional<IntMatrix> to_int(const RatMatrix& m);
IntMatrix power(const IntMatrix& m, std::int64_t e);

Rat determinant(const RatMatrix& m);
std::int64_t determinant(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// Basis of {x : m x = 0}, in reduced echelon form.
std::vector<RatVec> nullspace(const RatMatrix& m);
// Some solution of m x = b, if consistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

// p(M) for an integer polynomial p given lowest degree first.
IntMatrix evaluate_poly(const IntVec& coeffs, const IntMatrix& m);

// U * A * V = diag(d) with U, V unimodular; d_1 | d_2 | ... (zeros last).
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inv;
    IntVec diagonal;
};
SmithForm smith_normal_form(const IntMatrix& a);

std::string to_string(const IntMatrix& m);

} // namespace gradecs
