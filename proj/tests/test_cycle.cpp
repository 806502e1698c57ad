#include <map>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lapcomp;

TEST(ClosedForms, CycleExamples) {
    EXPECT_EQ(cycle_inverse_closed(3), (RationalMatrix{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}}));
    EXPECT_EQ(Rational(4) * cycle_inverse_closed(4), (RationalMatrix{{3, 2, 1}, {2, 4, 2}, {1, 2, 3}}));
    EXPECT_THROW(cycle_inverse_closed(2), ParameterError);
}

TEST(ClosedForms, LeafedExamples) {
    EXPECT_EQ(leafed_inverse_closed(3),
              (RationalMatrix{{1, 1, 1}, {1, Rational(5, 3), Rational(4, 3)}, {1, Rational(4, 3), Rational(5, 3)}}));
    EXPECT_EQ(leafed_inverse_closed(5)(2, 3), Rational(9, 5));
    EXPECT_THROW(leafed_inverse_closed(2), ParameterError);
}

TEST(ClosedForms, MatchAlgebraicInverse) {
    for (std::int64_t n = 3; n <= 12; ++n) {
        const auto cyc = cycle_inverse_closed(n);
        EXPECT_EQ(cyc, oracle::gauss_inverse(laplacian_minor(cycle_graph(n), n - 1).matrix));
        EXPECT_EQ(cyc, cyc.transpose());
        const auto leafed = leafed_inverse_closed(n);
        EXPECT_EQ(leafed, oracle::gauss_inverse(laplacian_minor(leafed_cycle_graph(n), n).matrix));
        for (std::int64_t j = 0; j < n; ++j) {
            EXPECT_EQ(leafed(0, j), 1);
            EXPECT_EQ(leafed(j, 0), 1);
        }
    }
}

TEST(Minors, MatchGraphFamilies) {
    for (std::int64_t n = 3; n <= 9; ++n) {
        EXPECT_EQ(cycle_minor(n), laplacian_minor(cycle_graph(n), n - 1).matrix);
        EXPECT_EQ(leafed_minor(n), laplacian_minor(leafed_cycle_graph(n), n).matrix);
    }
}

TEST(ModStructure, Examples) {
    EXPECT_EQ(mod_structure(3, false).v1, (SmallVector{2, 1}));
    const auto leafed = mod_structure(3, true);
    EXPECT_EQ(leafed.v1, (SmallVector{0, 2, 1}));
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(leafed.reduced(i, 0), 0);
}

TEST(ModStructure, HoldsUpToTwenty) {
    for (std::int64_t n = 3; n <= 20; ++n) {
        EXPECT_NO_THROW(mod_structure(n, false));
        const auto s = mod_structure(n, true);
        EXPECT_EQ(s.modulus, n);
        for (std::int64_t j = 1; j < n; ++j) EXPECT_EQ(s.v1[static_cast<std::size_t>(j)], n - j);
    }
}

TEST(CongruenceSystem, Weights) {
    EXPECT_EQ(cycle_system(4).weights, (SmallVector{3, 2, 1}));
    EXPECT_EQ(leafed_system(4).weights, (SmallVector{0, 3, 2, 1}));
}

TEST(SolveSn, Examples) {
    EXPECT_EQ(solve_Sn(cycle_system(3)), (std::vector<SmallVector>{{0, 0}, {1, 1}, {2, 2}}));
    const auto leafed = solve_Sn(leafed_system(3));
    std::vector<SmallVector> expected;
    for (std::int64_t c0 = 0; c0 < 3; ++c0)
        for (std::int64_t i = 0; i < 3; ++i) expected.push_back({c0, i, i});
    EXPECT_EQ(leafed, expected);
}

TEST(SolveSn, CountsAndValidity) {
    for (std::int64_t n = 3; n <= 6; ++n) {
        const auto sols = solve_Sn(leafed_system(n));
        EXPECT_EQ(Int(sols.size()), ipow(Int(n), static_cast<std::uint64_t>(n - 1)));
        const auto sys = leafed_system(n);
        for (const auto& c : sols) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < c.size(); ++j) {
                ASSERT_GE(c[j], 0);
                ASSERT_LT(c[j], n);
                s += sys.weights[j] * c[j];
            }
            ASSERT_EQ(s % n, 0);
        }
    }
    EXPECT_EQ(solve_Sn(cycle_system(4)).size(), 16u);
}

TEST(SolveSn, Budget) { EXPECT_THROW(solve_Sn(leafed_system(7), 1000), BudgetExceeded); }

TEST(PhiHistogram, Examples) {
    EXPECT_EQ(phi_histogram_dp(3).coefficients, (std::vector<Int>{1, 1, 2, 1, 2, 1, 1}));
    Int total = 0;
    for (const auto& x : phi_histogram_dp(5).coefficients) total += x;
    EXPECT_EQ(total, 625);
    EXPECT_EQ(phi_histogram_dp(4).coefficients, (std::vector<Int>{1, 1, 3, 5, 6, 10, 10, 10, 9, 5, 3, 1}));
}

TEST(PhiHistogram, MatchesEnumerationAndSymmetry) {
    for (std::int64_t n = 3; n <= 8; ++n) {
        const auto h = phi_histogram_dp(n).coefficients;
        EXPECT_EQ(h.front(), 1);
        // The complement c -> (n-1) - c preserves S_n only for odd n.
        const bool palindromic = std::equal(h.begin(), h.end(), h.rbegin());
        if (n % 2) {
            EXPECT_EQ(h.size(), static_cast<std::size_t>(n * (n - 1) + 1));
            EXPECT_TRUE(palindromic) << n;
        } else {
            EXPECT_FALSE(palindromic) << n;
        }
        if (n > 6) continue;
        std::vector<Int> brute(h.size());
        for (const auto& c : solve_Sn(leafed_system(n))) brute[static_cast<std::size_t>(std::accumulate(c.begin(), c.end(), std::int64_t{0}))] += 1;
        EXPECT_EQ(brute, h);
    }
}

TEST(LeafedGf, Examples) {
    const auto gf = leafed_gf(3);
    EXPECT_EQ(gf.str(), "(1 + q + 2*q^2 + q^3 + 2*q^4 + q^5 + q^6)/(1 - q^3)^3");
    EXPECT_EQ(series_expand(gf, 1)[1], 1);
    EXPECT_EQ(series_expand(gf, 6), (std::vector<Int>{1, 1, 2, 4, 5, 7, 10}));
}

TEST(LeafedGf, MatchesConePipeline) {
    for (std::int64_t n = 3; n <= 6; ++n) {
        const auto cone = cone_from_constraints(leafed_minor(n));
        EXPECT_EQ(leafed_gf(n), specialize(integer_point_transform(cone), Statistic::first_coordinate)) << n;
    }
}

TEST(LeafedGf, MatchesBoxEnumeration) {
    for (std::int64_t n = 3; n <= 5; ++n) {
        const auto series = series_expand(leafed_gf(n), static_cast<std::size_t>(3 * n));
        const auto brute = brute_force_histogram(leafed_minor(n), Statistic::first_coordinate, 3 * n);
        for (std::int64_t m = 0; m <= 3 * n; ++m) ASSERT_EQ(series[m], Int(brute[m])) << n << "," << m;
    }
}

TEST(LevelCounts, StrictAndWeak) {
    const auto weak = leafed_level_counts(3, 6, false);
    EXPECT_EQ(weak, series_expand(leafed_gf(3), 6));
    const auto strict = leafed_level_counts(3, 9, true);
    EXPECT_EQ(strict[3], 1);  // only c = (1,1,1)
    EXPECT_EQ(strict[0], 0);
}

TEST(MultivariateGf, MatchesConeEngine) {
    const auto three = cycle_multivariate_gf(3);
    EXPECT_EQ(three.numerator, (std::vector<SmallVector>{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(cycle_multivariate_gf(4).numerator.size(), 16u);
    for (std::int64_t n = 3; n <= 7; ++n) {
        const auto t = cycle_multivariate_gf(n);
        EXPECT_EQ(t, integer_point_transform(cone_from_constraints(cycle_minor(n)))) << n;
        EXPECT_EQ(std::count(t.numerator.begin(), t.numerator.end(), SmallVector(n - 1, 0)), 1);
    }
}
