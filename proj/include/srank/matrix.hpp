#pragma once

#include "srank/rational.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace srank {

/// Dense row-major matrix over a ring of exact scalars. Vectors are 1×n rows;
/// group and x-actions are applied on the right (v ↦ v·M).
template <class T> class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("matrix data length != rows*cols");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto &r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>> &rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("row length mismatch");
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }
    [[nodiscard]] bool square() const { return rows_ == cols_; }

    T &operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T &operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    [[nodiscard]] std::span<const T> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    [[nodiscard]] std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    [[nodiscard]] std::vector<T> row_vector(std::size_t i) const {
        auto r = row(i);
        return {r.begin(), r.end()};
    }
    [[nodiscard]] const std::vector<T> &data() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        for (const auto &x : data_)
            if (x != 0)
                return false;
        return true;
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Rows [first, first+count).
    [[nodiscard]] Matrix row_block(std::size_t first, std::size_t count) const {
        Matrix m(count, cols_);
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(i, j) = (*this)(first + i, j);
        return m;
    }

    friend bool operator==(const Matrix &a, const Matrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Matrix operator+(const Matrix &a, const Matrix &b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] += b.data_[k];
        return c;
    }
    friend Matrix operator-(const Matrix &a, const Matrix &b) {
        check_same_shape(a, b);
        Matrix c = a;
        for (std::size_t k = 0; k < c.data_.size(); ++k)
            c.data_[k] -= b.data_[k];
        return c;
    }
    friend Matrix operator*(const T &s, const Matrix &a) {
        Matrix c = a;
        for (auto &x : c.data_)
            x *= s;
        return c;
    }
    friend Matrix operator*(const Matrix &a, const Matrix &b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix product dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        T tmp;
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T &aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T &bkj = b(k, j);
                    if (bkj == 0)
                        continue;
                    tmp = aik * bkj;
                    c(i, j) += tmp;
                }
            }
        return c;
    }

private:
    static void check_same_shape(const Matrix &a, const Matrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;
using QVector = std::vector<Rational>;
using ZVector = std::vector<Integer>;

/// Row vector times matrix.
template <class T>
std::vector<T> vec_mul(std::span<const T> v, const Matrix<T> &m) {
    if (v.size() != m.rows())
        throw std::invalid_argument("vector/matrix dimension mismatch");
    std::vector<T> out(m.cols(), T(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(k, j) != 0)
                out[j] += v[k] * m(k, j);
    }
    return out;
}

template <class T> bool is_zero_vector(std::span<const T> v) {
    for (const auto &x : v)
        if (x != 0)
            return false;
    return true;
}

/// Vertical concatenation; an empty (0-row) operand is allowed with any width.
template <class T> Matrix<T> vstack(const Matrix<T> &a, const Matrix<T> &b) {
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack width mismatch");
    std::vector<T> data = a.data();
    data.insert(data.end(), b.data().begin(), b.data().end());
    return Matrix<T>(a.rows() + b.rows(), a.cols(), std::move(data));
}

template <class T> Matrix<T> block_diagonal(const Matrix<T> &a, const Matrix<T> &b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

inline QMatrix to_rational(const ZMatrix &z) {
    std::vector<Rational> data;
    data.reserve(z.data().size());
    for (const auto &x : z.data())
        data.emplace_back(x);
    return QMatrix(z.rows(), z.cols(), std::move(data));
}

/// Exact conversion; throws if an entry is not an integer.
inline ZMatrix to_integer(const QMatrix &q) {
    std::vector<Integer> data;
    data.reserve(q.data().size());
    for (const auto &x : q.data()) {
        if (!is_integral(x))
            throw std::invalid_argument("non-integral entry " + to_string(x));
        data.emplace_back(x.get_num());
    }
    return ZMatrix(q.rows(), q.cols(), std::move(data));
}

inline QMatrix row_matrix(const QVector &v) { return QMatrix(1, v.size(), v); }

} // namespace srank
