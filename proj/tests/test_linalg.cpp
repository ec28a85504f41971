#include "oracles.hpp"

#include "srank/factor.hpp"
#include "srank/hnf.hpp"
#include "srank/linalg.hpp"

#include <gtest/gtest.h>

using namespace srank;

namespace {

QMatrix q(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto row : rows) {
        r.emplace_back();
        for (long x : row)
            r.back().emplace_back(x);
    }
    return QMatrix::from_rows(r, r.empty() ? 0 : r[0].size());
}

QPolynomial poly(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return QPolynomial(v);
}

bool lowest_terms(const QMatrix &m) {
    for (const auto &x : m.data()) {
        Rational y = x;
        y.canonicalize();
        if (y.get_num() != x.get_num() || y.get_den() != x.get_den() || x.get_den() <= 0)
            return false;
    }
    return true;
}

} // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("4/6"), make_rational(2, 3));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_EQ(to_string(make_rational(-2, 4)), "-1/2");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
    EXPECT_THROW(parse_rational(""), ParseError);
    EXPECT_THROW(parse_rational("3/-4"), ParseError);
}

TEST(Rref, Identity) {
    auto r = rref(QMatrix::identity(2));
    EXPECT_EQ(r.form, QMatrix::identity(2));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, RankOne) {
    auto r = rref(q({{1, 2}, {2, 4}}));
    EXPECT_EQ(r.form, q({{1, 2}, {0, 0}}));
    EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
}

TEST(Rref, RandomAgainstNaiveElimination) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 40; ++t) {
        QMatrix m = oracle::random_qmatrix(5, 5, rng);
        if (t % 3 == 0) // force dependencies
            for (std::size_t j = 0; j < 5; ++j)
                m(4, j) = m(0, j) - 2 * m(1, j);
        auto r = rref(m);
        EXPECT_EQ(r.rank(), oracle::naive_rank(m));
        EXPECT_TRUE(oracle::same_row_space(r.form, m));
        EXPECT_EQ(rref(r.form).form, r.form) << "rref must be idempotent";
        EXPECT_TRUE(lowest_terms(r.form));
    }
}

TEST(Kernel, Basics) {
    EXPECT_EQ(kernel(QMatrix::identity(3)).rows(), 0u);
    EXPECT_EQ(kernel(QMatrix(3, 3)).rows(), 3u);
}

TEST(Kernel, RankNullityRandom) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
        QMatrix m = oracle::random_qmatrix(r, c, rng, 2);
        QMatrix k = kernel(m);
        EXPECT_EQ(k.rows() + rank(m), c);
        EXPECT_EQ(oracle::naive_rank(k), k.rows());
        EXPECT_TRUE((m * k.transpose()).is_zero());
        QMatrix lk = left_kernel(m);
        EXPECT_TRUE((lk * m).is_zero());
        EXPECT_EQ(lk.rows() + rank(m), r);
    }
}

TEST(Solve, Cases) {
    QMatrix b = q({{1, 2}, {3, 4}});
    EXPECT_EQ(*solve_right(QMatrix::identity(2), b), b);
    EXPECT_FALSE(solve_right(q({{1}, {1}}), q({{0}, {1}})).has_value());
    EXPECT_THROW(solve_right(QMatrix::identity(2), QMatrix(3, 1)), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        QMatrix a = oracle::random_qmatrix(4, 3, rng);
        QMatrix x0 = oracle::random_qmatrix(3, 2, rng);
        QMatrix rhs = a * x0;
        auto x = solve_right(a, rhs);
        ASSERT_TRUE(x.has_value());
        EXPECT_TRUE((a * *x - rhs).is_zero());
    }
}

TEST(MinimalPolynomial, Basics) {
    EXPECT_EQ(minimal_polynomial(QMatrix::identity(3)), poly({-1, 1}));
    EXPECT_EQ(minimal_polynomial(q({{0, 1}, {0, 0}})), poly({0, 0, 1}));
    EXPECT_THROW(minimal_polynomial(QMatrix(2, 3)), std::invalid_argument);
}

TEST(MinimalPolynomial, RandomAgainstKrylov) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
        QMatrix m = oracle::random_qmatrix(6, 6, rng, 2);
        if (t % 2 == 0) // repeated block to lower the degree
            m = block_diagonal(oracle::random_qmatrix(3, 3, rng, 2), QMatrix::identity(3));
        auto p = minimal_polynomial(m);
        EXPECT_TRUE(evaluate(p, m).is_zero());
        EXPECT_TRUE(p.is_monic());
        EXPECT_EQ(p, oracle::krylov_minpoly(m));
        EXPECT_TRUE((characteristic_polynomial(m) % p).is_zero());
    }
}

TEST(Factor, Small) {
    auto f = factor_rational(poly({-1, 0, 1}));
    ASSERT_EQ(f.factors.size(), 2u);
    EXPECT_EQ(f.factors[0].first, poly({-1, 1}));
    EXPECT_EQ(f.factors[1].first, poly({1, 1}));
    EXPECT_TRUE(is_irreducible(poly({1, 0, 1})));
    EXPECT_FALSE(is_irreducible(poly({-1, 0, 1})));
    EXPECT_THROW(factor_rational(QPolynomial()), std::invalid_argument);
}

TEST(Factor, RoundTrip) {
    QPolynomial p = poly({1, 1, 1}) * poly({-3, 1});
    auto f = factor_rational(p);
    EXPECT_EQ(f.expand(), p);
    ASSERT_EQ(f.factors.size(), 2u);
}

TEST(Factor, RandomRoundTrips) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        QPolynomial p = QPolynomial::constant(make_rational(static_cast<long>(rng() % 7) + 1, 3));
        const int count = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i)
            p = p * oracle::random_irreducible(rng);
        auto f = factor_rational(p);
        EXPECT_EQ(f.expand(), p);
        for (const auto &[g, e] : f.factors) {
            EXPECT_TRUE(g.is_monic());
            EXPECT_EQ(factor_rational(g).factors.size(), 1u);
            EXPECT_GE(e, 1u);
        }
    }
}

TEST(Factor, Swinnerton) {
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
    EXPECT_TRUE(is_irreducible(poly({1, 0, -10, 0, 1})));
    QPolynomial p = poly({1, 0, -10, 0, 1}) * poly({1, 0, -10, 0, 1}) * poly({-2, 0, 1});
    auto f = factor_rational(p);
    EXPECT_EQ(f.expand(), p);
    EXPECT_EQ(f.factors.size(), 2u);
}

TEST(Hnf, Basics) {
    EXPECT_EQ(hnf(ZMatrix::identity(3)), ZMatrix::identity(3));
    ZMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 3;
    EXPECT_EQ(hnf(d), d);
}

TEST(Hnf, RandomLatticeEquality) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        ZMatrix m = oracle::random_zmatrix(4, 4, rng);
        ZMatrix independent = m;
        if (t % 4 == 0) {
            for (std::size_t j = 0; j < 4; ++j)
                m(3, j) = m(0, j) * 2 + m(1, j);
            independent = m.row_block(0, 3);
        }
        ASSERT_EQ(oracle::naive_rank(to_rational(independent)), independent.rows());
        ZMatrix h = hnf(m);
        EXPECT_TRUE(oracle::rows_in_lattice(m, h));
        EXPECT_TRUE(oracle::rows_in_lattice(h, independent));
        EXPECT_EQ(hnf(h), h);
        std::size_t prev = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) {
            std::size_t p = 0;
            while (p < h.cols() && h(i, p) == 0)
                ++p;
            ASSERT_LT(p, h.cols());
            if (i > 0)
                EXPECT_GT(p, prev);
            prev = p;
            EXPECT_GT(h(i, p), 0);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(h(k, p), 0);
                EXPECT_LT(h(k, p), h(i, p));
            }
        }
    }
}
