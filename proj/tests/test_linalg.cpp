#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lapcomp;

namespace {

RationalMatrix rational(std::initializer_list<std::initializer_list<Rational>> rows) { return RationalMatrix(rows); }

}  // namespace

TEST(Determinant, SmallExamples) {
    EXPECT_EQ(determinant(IntegerMatrix{{2, -1}, {-1, 2}}), 3);
    EXPECT_EQ(determinant(IntegerMatrix{{3, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), 3);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(determinant(IntegerMatrix::identity(n)), 1);
}

TEST(Determinant, NeedsZeroPivotSwap) {
    EXPECT_EQ(determinant(IntegerMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant(IntegerMatrix{{0, 0, 2}, {0, 3, 0}, {5, 0, 0}}), -30);
    EXPECT_EQ(determinant(IntegerMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, RejectsNonSquare) {
    EXPECT_THROW(determinant(IntegerMatrix(2, 3)), ParameterError);
}

TEST(Inverse, Examples) {
    EXPECT_EQ(inverse(IntegerMatrix{{2, -1}, {-1, 2}}),
              rational({{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}));
    EXPECT_EQ(inverse(IntegerMatrix::identity(4)), RationalMatrix::identity(4));
    EXPECT_EQ(inverse(IntegerMatrix{{3, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
              rational({{1, 1, 1}, {1, Rational(5, 3), Rational(4, 3)}, {1, Rational(4, 3), Rational(5, 3)}}));
}

TEST(Inverse, SingularThrows) {
    EXPECT_THROW(inverse(IntegerMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
    EXPECT_THROW(adjugate_pair(IntegerMatrix(3, 3)), SingularMatrixError);
}

TEST(AdjugatePair, Examples) {
    auto cyc = adjugate_pair(IntegerMatrix{{2, -1}, {-1, 2}});
    EXPECT_EQ(cyc.d, 3);
    EXPECT_EQ(cyc.R, (IntegerMatrix{{2, 1}, {1, 2}}));
    auto leafed = adjugate_pair(IntegerMatrix{{3, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
    EXPECT_EQ(leafed.d, 3);
    EXPECT_EQ(leafed.R, (IntegerMatrix{{3, 3, 3}, {3, 5, 4}, {3, 4, 5}}));
    auto tree = adjugate_pair(IntegerMatrix{{2, -1}, {-1, 1}});
    EXPECT_EQ(tree.d, 1);
    EXPECT_EQ(tree.R, (IntegerMatrix{{1, 1}, {1, 2}}));
}

TEST(AdjugatePair, NegativeDeterminant) {
    const IntegerMatrix m{{0, 1}, {1, 0}};
    auto p = adjugate_pair(m);
    EXPECT_EQ(p.d, 1);
    EXPECT_EQ(m * p.R, IntegerMatrix::identity(2));
}

TEST(LinalgProperty, RandomMatricesAgreeWithOracles) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> entry(-5, 5);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    int nonsingular = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = size(rng);
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
        const Int det = determinant(m);
        if (n <= 5) {
            ASSERT_EQ(det, oracle::permutation_determinant(m)) << m;
        }
        if (det == 0) {
            EXPECT_THROW(inverse(m), SingularMatrixError);
            continue;
        }
        ++nonsingular;
        const auto inv = inverse(m);
        ASSERT_EQ(m.cast<Rational>() * inv, RationalMatrix::identity(n)) << m;
        ASSERT_EQ(inv, oracle::gauss_inverse(m));
        const auto [d, r] = adjugate_pair(m);
        ASSERT_EQ(d, abs(det));
        ASSERT_EQ(m * r, d * IntegerMatrix::identity(n));
    }
    EXPECT_GT(nonsingular, 200);
}

TEST(BigInt, HelpersAreExact) {
    EXPECT_EQ(binomial(50, 25), Int("126410606437752"));
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(ipow(Int(3), 40), Int("12157665459056928801"));
    EXPECT_EQ(mod_floor(-7, 3), 2);
    EXPECT_EQ(to_string(Rational(-4, 6)), "-2/3");
    EXPECT_THROW(parse_int("12x"), ParseError);
    EXPECT_THROW(to_small(ipow(Int(2), 70)), Error);
}
