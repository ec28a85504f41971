#pragma once

#include "srank/matrix.hpp"

#include <optional>
#include <vector>

namespace srank {

struct RrefResult {
    QMatrix form;                     // same shape as the input
    std::vector<std::size_t> pivots;  // pivot column of row i, for i < rank
    [[nodiscard]] std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(QMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rational f;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        if (m(r, c) != 1) {
            Rational inv = 1 / m(r, c);
            for (std::size_t j = c; j < cols; ++j)
                m(r, j) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j) {
                if (m(r, j) == 0)
                    continue;
                f = factor * m(r, j);
                m(i, j) -= f;
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix &m) { return rref(m).rank(); }

/// Nonzero rows of the RREF: a canonical basis of the row space.
inline QMatrix row_basis(const QMatrix &m) {
    auto r = rref(m);
    return r.form.row_block(0, r.rank());
}

/// Basis (as rows) of {v : m·v = 0}.
inline QMatrix kernel(const QMatrix &m) {
    auto r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    QMatrix basis(n - r.rank(), n);
    std::size_t k = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        basis(k, free) = 1;
        for (std::size_t i = 0; i < r.rank(); ++i)
            basis(k, r.pivots[i]) = -r.form(i, free);
        ++k;
    }
    return basis;
}

/// Basis (as rows) of {v : v·m = 0}.
inline QMatrix left_kernel(const QMatrix &m) { return kernel(m.transpose()); }

/// Some x with a·x = b, or nullopt if the system is inconsistent.
inline std::optional<QMatrix> solve_right(const QMatrix &a, const QMatrix &b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve_right: row count mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    QMatrix aug(a.rows(), n + k);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < k; ++j)
            aug(i, n + j) = b(i, j);
    }
    auto r = rref(std::move(aug));
    for (auto p : r.pivots)
        if (p >= n)
            return std::nullopt;
    QMatrix x(n, k);
    for (std::size_t i = 0; i < r.rank(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            x(r.pivots[i], j) = r.form(i, n + j);
    return x;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<QMatrix> inverse(const QMatrix &m) {
    if (!m.square())
        throw std::invalid_argument("inverse: non-square matrix");
    // m·x = I is solvable exactly when m is invertible.
    return solve_right(m, QMatrix::identity(m.rows()));
}

/// Incrementally built row-echelon basis. Each stored row has a leading 1 at its
/// pivot and zeros at the pivots of earlier rows, so reducing against rows in
/// insertion order eliminates every pivot coordinate.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return rows_.size(); }

    /// Residue of v modulo the span.
    [[nodiscard]] QVector reduce(QVector v) const {
        Rational f;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = v[pivots_[r]];
            if (c == 0)
                continue;
            const auto &row = rows_[r];
            for (std::size_t j = 0; j < dim_; ++j) {
                if (row[j] == 0)
                    continue;
                f = c * row[j];
                v[j] -= f;
            }
        }
        return v;
    }

    [[nodiscard]] bool contains(const QVector &v) const { return is_zero_vector<Rational>(reduce(v)); }

    /// Adds v if independent; returns whether the span grew.
    bool add(const QVector &v) {
        QVector w = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && w[p] == 0)
            ++p;
        if (p == dim_)
            return false;
        Rational inv = 1 / w[p];
        for (auto &x : w)
            x *= inv;
        rows_.push_back(std::move(w));
        pivots_.push_back(p);
        return true;
    }

    [[nodiscard]] const std::vector<QVector> &rows() const { return rows_; }

    /// Canonical RREF basis of the span.
    [[nodiscard]] QMatrix to_rref() const {
        QMatrix m(rows_.size(), dim_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                m(i, j) = rows_[i][j];
        return row_basis(m);
    }

private:
    std::size_t dim_;
    std::vector<QVector> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace srank
