#pragma once

#include "srank/matrix.hpp"

#include <utility>

namespace srank {

namespace detail {
inline Integer floor_div(const Integer &a, const Integer &b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline void axpy_row(ZMatrix &m, std::size_t dst, const Integer &q, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(src, j) != 0)
            m(dst, j) -= q * m(src, j);
}
} // namespace detail

/// Row Hermite normal form. Zero rows are dropped, so the result has
/// rank(m) rows; pivots are positive and the entries above each pivot lie in
/// [0, pivot).
inline ZMatrix hnf(ZMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r..end.
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a(i, c) != 0 && (best == rows || abs(a(i, c)) < abs(a(best, c))))
                    best = i;
            if (best == rows)
                break;
            if (best != r)
                for (std::size_t j = 0; j < cols; ++j)
                    std::swap(a(best, j), a(r, j));
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a(i, c) == 0)
                    continue;
                detail::axpy_row(a, i, detail::floor_div(a(i, c), a(r, c)), r);
                if (a(i, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (a(r, c) == 0)
            continue;
        if (a(r, c) < 0)
            for (std::size_t j = 0; j < cols; ++j)
                a(r, j) = -a(r, j);
        for (std::size_t i = 0; i < r; ++i)
            if (a(i, c) != 0)
                detail::axpy_row(a, i, detail::floor_div(a(i, c), a(r, c)), r);
        ++r;
    }
    return a.row_block(0, r);
}

} // namespace srank
