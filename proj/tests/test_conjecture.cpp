#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace lapcomp;

TEST(CyclicClasses, BurnsideExamples) {
    EXPECT_EQ(count_cyclic_classes(3, 3), 4);
    for (std::int64_t n = 1; n <= 9; ++n) EXPECT_EQ(count_cyclic_classes(1, n), 1);
    EXPECT_EQ(count_cyclic_classes(2, 3), 2);
    EXPECT_EQ(count_cyclic_classes(0, 5), 1);
}

TEST(CyclicClasses, BurnsideMatchesOrbitEnumeration) {
    for (std::int64_t m = 0; m <= 10; ++m)
        for (std::size_t n = 1; n <= 10; ++n)
            ASSERT_EQ(count_cyclic_classes(m, static_cast<std::int64_t>(n)), Int(oracle::orbit_count(m, n))) << m << "," << n;
    EXPECT_EQ(count_cyclic_classes(12, 12), Int(oracle::orbit_count(12, 12)));
}

TEST(CyclicClasses, Enumeration) {
    const auto classes = cyclic_classes(3, 3);
    ASSERT_EQ(classes.size(), 4u);
    EXPECT_EQ(classes[0].representative, (SmallVector{3, 0, 0}));
    EXPECT_EQ(classes[1].representative, (SmallVector{2, 1, 0}));
    EXPECT_EQ(classes[2].representative, (SmallVector{1, 2, 0}));
    EXPECT_EQ(classes[3].representative, (SmallVector{1, 1, 1}));
    EXPECT_EQ(classes[3].orbit_size, 1u);
    for (std::int64_t n = 2; n <= 6; ++n)
        for (std::int64_t m = 0; m <= 8; ++m) {
            const auto list = cyclic_classes(m, n);
            EXPECT_EQ(Int(list.size()), count_cyclic_classes(m, n));
            std::size_t covered = 0;
            for (const auto& c : list) {
                covered += c.orbit_size;
                EXPECT_EQ(n % static_cast<std::int64_t>(c.orbit_size), 0);
                for (std::size_t s = 1; s < c.parts; ++s) EXPECT_FALSE(colex_less(rotate(c.representative, s), c.representative));
            }
            EXPECT_EQ(Int(covered), binomial(m + n - 1, n - 1));
        }
}

TEST(ShiftProfile, ExampleFamilies) {
    const auto p = integral_shift_profile(3, 3);
    ASSERT_EQ(p.size(), 4u);
    std::vector<std::size_t> counts;
    for (const auto& e : p) counts.push_back(e.integral_shifts);
    EXPECT_EQ(counts, (std::vector<std::size_t>{3, 0, 0, 3}));
}

TEST(ShiftProfile, SmallCases) {
    const auto one = integral_shift_profile(3, 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].integral_shifts, 1u);
    for (const auto& e : integral_shift_profile(5, 2)) EXPECT_EQ(e.integral_shifts, 1u);
}

TEST(ShiftProfile, PrimeRules) {
    for (std::int64_t n : {3, 5, 7})
        for (std::int64_t m = 1; m <= 2 * n; ++m) {
            const auto profile = integral_shift_profile(n, m);
            EXPECT_TRUE(shift_profile_consistent(n, m, profile)) << n << "," << m;
            if (std::gcd(m, n) == 1) {
                std::size_t total = 0;
                for (const auto& e : profile) total += e.integral_shifts;
                EXPECT_EQ(Int(total), count_cyclic_classes(m, n));
            }
        }
}

TEST(ShiftProfile, AgreesWithGeneratingFunction) {
    // Each composition occurs n / orbit_size times among the n shifts of its class.
    for (std::int64_t n = 3; n <= 6; ++n) {
        const auto series = series_expand(leafed_gf(n), static_cast<std::size_t>(2 * n));
        for (std::int64_t m = 0; m <= 2 * n; ++m) {
            std::size_t points = 0;
            for (const auto& e : integral_shift_profile(n, m)) points += e.integral_shifts * e.cls.orbit_size;
            EXPECT_EQ(Int(points), series[static_cast<std::size_t>(m)] * n) << n << "," << m;
        }
    }
}

TEST(CyclicConjecture, SmallAndDegenerate) {
    const auto r = check_conjecture_cyclic(3, 12);
    EXPECT_TRUE(r.all_match);
    EXPECT_EQ(r.entries.size(), 13u);
    EXPECT_EQ(r.entries[3].lhs, 4);
    EXPECT_EQ(r.entries[3].rhs, 4);
    EXPECT_FALSE(r.first_mismatch.has_value());
    EXPECT_TRUE(check_conjecture_cyclic(2, 12).all_match);
}

TEST(CyclicConjecture, HoldsThroughEight) {
    for (std::int64_t n = 3; n <= 8; ++n) EXPECT_TRUE(check_conjecture_cyclic(n, 3 * n).all_match) << n;
}

TEST(NearSymmetry, DenominatorDegree) {
    EXPECT_EQ(near_symmetry_denominator(2).degree(), 8);
    EXPECT_EQ(near_symmetry_denominator(3).degree(), 8 + 4 + 2 * 2 + 4 * 1);
}

TEST(NearSymmetry, ComputedValuesForFour) {
    const auto r = check_near_symmetry(2);
    EXPECT_EQ(r.n, 4);
    ASSERT_TRUE(r.division_exact);
    EXPECT_EQ(*r.f, Polynomial({1, -1, 1, 1}));
    EXPECT_EQ(r.difference, (std::vector<Int>{1, -2, 0, 2, -1}));
    EXPECT_EQ(r.expected, Polynomial({1, 0, 0, 0, -2, 0, 0, 0, 1}));
    EXPECT_FALSE(r.verdict);
    // The numerator itself has the near-symmetry (1 - q^n)^{n-1}.
    EXPECT_EQ(Polynomial(r.numerator_difference), Polynomial::one_minus_power(4, 3));
}

TEST(NearSymmetry, ComputedValuesForEight) {
    const auto r = check_near_symmetry(3);
    ASSERT_TRUE(r.division_exact);
    EXPECT_EQ(*r.f, Polynomial({1, -3, 5, 3, -4, 4, 6, -4, 7, -1, 1, 1}));
    EXPECT_EQ(r.difference, (std::vector<Int>{1, -4, 4, 4, -11, 8, 0, -8, 11, -4, -4, 4, -1}));
    EXPECT_FALSE(r.verdict);
    EXPECT_EQ(Polynomial(r.numerator_difference), Polynomial::one_minus_power(8, 7));
}

TEST(NearSymmetry, DifferenceIsAlwaysAntisymmetric) {
    const auto d = append_zero_minus_reverse(Polynomial({3, 1, 4, 1, 5}));
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], -d[d.size() - 1 - i]);
}

TEST(NearSymmetry, RejectsOutOfRange) {
    EXPECT_THROW(check_near_symmetry(1), ParameterError);
    EXPECT_THROW(check_near_symmetry(6), ParameterError);
}
