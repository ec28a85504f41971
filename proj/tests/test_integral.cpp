#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace srank;

namespace {

Lattice lattice_of(const Representation &r) {
    std::vector<ZMatrix> m;
    for (const auto &g : r.generators())
        m.push_back(to_integer(g));
    return Lattice(r.group(), r.dimension(), m);
}

Lattice natural_s3() { return lattice_of(fixture::rep("S3", "permutation")); }

ZMatrix row(std::initializer_list<long> v) {
    ZMatrix m(1, v.size());
    std::size_t j = 0;
    for (long x : v)
        m(0, j++) = x;
    return m;
}

bool stable(const Lattice &lat, const ZSubmodule &s) {
    for (const auto &g : lat.action())
        if (!oracle::rows_in_lattice(s.basis * g, s.basis))
            return false;
    return true;
}

} // namespace

TEST(Rationalize, Basics) {
    auto c2 = fixture::entry("C2").group;
    Lattice id(c2, 3, {ZMatrix::identity(3)});
    auto r = rationalize(id);
    EXPECT_EQ(r.dimension(), 3u);
    EXPECT_EQ(special_rank(r).rank, 3u);
    EXPECT_EQ(rationalize(natural_s3()).generators(), fixture::rep("S3", "permutation").generators());
    for (const auto &g : fixture::kGroups)
        EXPECT_TRUE(validate(lattice_of(fixture::rep(g, "regular"))).ok) << g;
}

TEST(SpecialRankIntegral, Values) {
    auto c2 = fixture::entry("C2").group;
    EXPECT_EQ(special_rank_integral(Lattice(c2, 3, {ZMatrix::identity(3)})), 3u);
    EXPECT_EQ(special_rank_integral(natural_s3()), 1u);
    auto sq = lattice_of(direct_sum(fixture::rep("S3", "permutation"), fixture::rep("S3", "permutation")));
    EXPECT_EQ(special_rank_integral(sq), 2u);
}

TEST(Zspin, Examples) {
    auto lat = natural_s3();
    EXPECT_TRUE(zspin(lat, row({0, 0, 0})).is_zero());
    auto c2 = lattice_of(fixture::rep("C2", "regular"));
    EXPECT_EQ(zspin(c2, row({1, 0})).basis, ZMatrix::identity(2));
    auto s = zspin(lat, row({2, 0, 0}));
    EXPECT_EQ(s.rank(), 3u);
    EXPECT_TRUE(stable(lat, s));
    ZMatrix expected(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        expected(i, i) = 2;
    EXPECT_EQ(s.basis, expected); // index 8 in Z^3
    auto sum_line = zspin(lat, row({3, 3, 3}));
    EXPECT_EQ(sum_line.rank(), 1u);
}

TEST(Zspin, OrderIndependent) {
    auto lat = natural_s3();
    std::mt19937_64 rng(21);
    for (int t = 0; t < 20; ++t) {
        ZMatrix v = oracle::random_zmatrix(2, 3, rng, 3);
        ZMatrix swapped(2, 3);
        for (std::size_t j = 0; j < 3; ++j) {
            swapped(0, j) = v(1, j);
            swapped(1, j) = v(0, j);
        }
        auto a = zspin(lat, v), b = zspin(lat, swapped);
        EXPECT_EQ(a, b);
        EXPECT_TRUE(stable(lat, a));
        // reversed generator order
        Lattice rev(lat.group(), 3, {lat.action()[1], lat.action()[0]});
        EXPECT_EQ(zspin(rev, v).basis, a.basis);
    }
}

TEST(GeneratorExperiment, Examples) {
    auto lat = natural_s3();
    auto zero = generator_experiment(lat, zspin(lat, row({0, 0, 0})), 10);
    ASSERT_TRUE(zero.upper_bound.has_value());
    EXPECT_EQ(*zero.upper_bound, 0u);
    auto c2 = lattice_of(fixture::rep("C2", "regular"));
    auto full = generator_experiment(c2, zspin(c2, ZMatrix::identity(2)), 50);
    ASSERT_TRUE(full.upper_bound.has_value());
    EXPECT_EQ(*full.upper_bound, 1u);
    EXPECT_THROW(generator_experiment(lat, zspin(lat, row({1, 0, 0})), 0), std::invalid_argument);
}

TEST(GeneratorExperiment, NeverBelowRationalBound) {
    std::mt19937_64 rng(22);
    for (const char *g : {"S3", "C2", "C4"}) {
        auto lat = lattice_of(fixture::rep(g, "regular"));
        for (int t = 0; t < 8; ++t) {
            ZMatrix v = oracle::random_zmatrix(1 + rng() % 2, lat.rank(), rng, 2);
            auto sub = zspin(lat, v);
            auto ex = generator_experiment(lat, sub, 100, t);
            if (!ex.upper_bound) {
                EXPECT_TRUE(ex.budget_exhausted);
                continue;
            }
            EXPECT_GE(*ex.upper_bound, ex.rational_generator_rank);
            EXPECT_EQ(zspin(lat, ex.generators), sub);
        }
    }
}
