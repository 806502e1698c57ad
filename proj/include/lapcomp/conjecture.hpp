#pragma once

// Cyclically distinct compositions versus leafed-cycle lattice points, integral rotations of
// compositions, and the near-symmetry check for leafed cycles of length 2^k.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "bigint.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp {

/// Orbits of weak compositions of m into n parts under rotation (Burnside).
inline Int count_cyclic_classes(std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 1) throw ParameterError("cyclic classes need m >= 0 and n >= 1");
    Int total = 0;
    for (std::int64_t g = 0; g < n; ++g) {
        const auto cycles = std::gcd(g, n);
        const auto length = n / cycles;
        if (m % length == 0) total += binomial(m / length + cycles - 1, cycles - 1);
    }
    return total / n;
}

/// c'_i = c_{(i+k) mod n}.
inline SmallVector rotate(const SmallVector& c, std::size_t k) {
    SmallVector out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[(i + k) % c.size()];
    return out;
}

/// Lexicographic comparison read from the last part backwards.
inline bool colex_less(const SmallVector& a, const SmallVector& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

struct CyclicClass {
    SmallVector representative;  // colexicographically smallest rotation
    std::size_t orbit_size;      // number of distinct rotations
    std::int64_t total;
    std::size_t parts;
};

/// Every cyclic class of weak compositions of m into n parts, in increasing colex order of representative.
inline std::vector<CyclicClass> cyclic_classes(std::int64_t m, std::int64_t n, std::uint64_t budget = 50'000'000) {
    if (m < 0 || n < 1) throw ParameterError("cyclic classes need m >= 0 and n >= 1");
    const Int compositions = binomial(m + n - 1, n - 1);
    if (compositions > Int(budget))
        throw BudgetExceeded("composition enumeration",
                             compositions > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(compositions), budget);
    std::vector<CyclicClass> out;
    const auto parts = static_cast<std::size_t>(n);
    SmallVector c(parts, 0);
    auto walk = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i + 1 == parts) {
            c[i] = left;
            std::size_t period = parts;
            for (std::size_t s = 1; s < parts; ++s) {
                const auto r = rotate(c, s);
                if (colex_less(r, c)) return;
                if (r == c && period == parts) period = s;
            }
            out.push_back({c, period, m, parts});
            return;
        }
        for (std::int64_t v = left; v >= 0; --v) {
            c[i] = v;
            self(self, i + 1, left - v);
        }
    };
    walk(walk, 0, m);
    std::sort(out.begin(), out.end(),
              [](const CyclicClass& a, const CyclicClass& b) { return colex_less(a.representative, b.representative); });
    return out;
}

struct ShiftProfileEntry {
    CyclicClass cls;
    std::size_t integral_shifts;  // k in 0..n-1 with L^{-1} rotate(c, k) integral, with multiplicity
};

/// For each class, counts the rotations c' (all n shifts) for which L_n^{-1} c' is an integer point
/// of the leafed cone, using exact rational arithmetic.
inline std::vector<ShiftProfileEntry> integral_shift_profile(std::int64_t n, std::int64_t m,
                                                             std::uint64_t budget = 50'000'000) {
    const auto inv = inverse(leafed_minor(n));
    std::vector<ShiftProfileEntry> out;
    for (auto& cls : cyclic_classes(m, n, budget)) {
        std::size_t hits = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
            const auto lambda = multiply(inv, rotate(cls.representative, k));
            if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return is_integral(x); })) ++hits;
        }
        out.push_back({std::move(cls), hits});
    }
    return out;
}

/// For prime n: gcd(m,n) = 1 forces exactly one integral rotation per class; n | m forces 0 or n.
/// Returns true when the profile obeys whichever rule applies (vacuously otherwise).
inline bool shift_profile_consistent(std::int64_t n, std::int64_t m, const std::vector<ShiftProfileEntry>& profile) {
    if (std::gcd(m, n) == 1)
        return std::all_of(profile.begin(), profile.end(), [](const auto& e) { return e.integral_shifts == 1; });
    if (m % n == 0)
        return std::all_of(profile.begin(), profile.end(), [n](const auto& e) {
            return e.integral_shifts == 0 || e.integral_shifts == static_cast<std::size_t>(n);
        });
    return true;
}

struct CyclicCheckEntry {
    std::int64_t m;
    Int lhs;  // coefficient of q^m in the leafed generating function
    Int rhs;  // cyclic classes of compositions of m into n parts
    bool match;
};

struct CyclicCheckReport {
    std::int64_t n;
    std::vector<CyclicCheckEntry> entries;
    bool all_match = true;
    std::optional<std::int64_t> first_mismatch;
};

inline CyclicCheckReport check_conjecture_cyclic(std::int64_t n, std::int64_t m_max) {
    if (m_max < 0) throw ParameterError("m_max must be nonnegative");
    const auto series = series_expand(leafed_gf(n), static_cast<std::size_t>(m_max));
    CyclicCheckReport report{n, {}, true, std::nullopt};
    for (std::int64_t m = 0; m <= m_max; ++m) {
        CyclicCheckEntry e{m, series[static_cast<std::size_t>(m)], count_cyclic_classes(m, n), false};
        e.match = e.lhs == e.rhs;
        if (!e.match && report.all_match) {
            report.all_match = false;
            report.first_mismatch = m;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

/// Appends a zero to the coefficient list and subtracts the reversed list.
inline std::vector<Int> append_zero_minus_reverse(const Polynomial& p) {
    std::vector<Int> a = p.coefficients();
    a.push_back(0);
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - a[a.size() - 1 - i];
    return out;
}

struct NearSymmetryReport {
    std::int64_t k = 0;
    std::int64_t n = 0;
    bool division_exact = false;
    std::optional<Polynomial> f;
    std::vector<Int> difference;           // empty when the division is inexact
    Polynomial expected;                   // sum_{i=0}^{n-2} C(n-2,i) (-1)^i q^{ni}
    std::vector<Int> numerator_difference; // same operation applied to the leafed numerator itself
    bool verdict = false;
};

/// (1 - q^{2^k}) prod_{i=0}^{k-1} (1 - q^{2^{k-i-1}})^{2^i}.
inline Polynomial near_symmetry_denominator(std::int64_t k) {
    const std::size_t n = std::size_t{1} << k;
    Polynomial d = Polynomial::one_minus_power(n, 1);
    for (std::int64_t i = 0; i < k; ++i)
        d = d * Polynomial::one_minus_power(std::size_t{1} << (k - i - 1), std::size_t{1} << i);
    return d;
}

inline NearSymmetryReport check_near_symmetry(std::int64_t k) {
    if (k < 2) throw ParameterError("near-symmetry check needs k >= 2");
    if (k > 5) throw ParameterError("near-symmetry check supports k <= 5");
    const std::int64_t n = std::int64_t{1} << k;
    NearSymmetryReport report;
    report.k = k;
    report.n = n;
    const Polynomial numerator(phi_histogram_dp(n).coefficients);
    report.numerator_difference = append_zero_minus_reverse(numerator);

    std::vector<Int> target(static_cast<std::size_t>(n * (n - 2) + 1));
    for (std::int64_t i = 0; i <= n - 2; ++i)
        target[static_cast<std::size_t>(n * i)] = (i % 2 ? -1 : 1) * binomial(n - 2, i);
    report.expected = Polynomial(std::move(target));

    const auto product = numerator * near_symmetry_denominator(k);
    report.f = product.divide_exact(Polynomial::one_minus_power(static_cast<std::size_t>(n), static_cast<std::size_t>(n)));
    report.division_exact = report.f.has_value();
    if (!report.division_exact) return report;
    report.difference = append_zero_minus_reverse(*report.f);
    report.verdict = Polynomial(report.difference) == report.expected;
    return report;
}

}  // namespace lapcomp
