#pragma once

// n-cycles minored at a cycle vertex and leafed n-cycles minored at the leaf: closed-form
// inverses, the mod-n structure of n*L^{-1}, the digit congruence S_n, and generating functions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "bigint.hpp"
#include "cone.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp {

inline void require_cycle_size(std::int64_t n) {
    if (n < 3) throw ParameterError("cycle families need n >= 3");
}

/// Tridiagonal minor of the n-cycle (labels 1..n minored at n), size n-1.
inline IntegerMatrix cycle_minor(std::int64_t n) {
    require_cycle_size(n);
    return laplacian_minor(cycle_graph(static_cast<std::size_t>(n)), static_cast<std::size_t>(n - 1)).matrix;
}

/// Minor of the leafed n-cycle at its leaf, rows/columns indexed 0..n-1.
inline IntegerMatrix leafed_minor(std::int64_t n) {
    require_cycle_size(n);
    return laplacian_minor(leafed_cycle_graph(static_cast<std::size_t>(n)), static_cast<std::size_t>(n)).matrix;
}

/// b_ij = i(n-j)/n for i <= j (indices 1..n-1), symmetric.
inline RationalMatrix cycle_inverse_closed(std::int64_t n) {
    require_cycle_size(n);
    RationalMatrix b(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
    for (std::int64_t i = 1; i < n; ++i)
        for (std::int64_t j = 1; j < n; ++j) {
            const auto lo = std::min(i, j), hi = std::max(i, j);
            b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = Rational(lo * (n - hi), n);
        }
    return b;
}

/// b_ij = i(n-j)/n + 1 for i <= j (indices 0..n-1), symmetric.
inline RationalMatrix leafed_inverse_closed(std::int64_t n) {
    require_cycle_size(n);
    RationalMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) {
            const auto lo = std::min(i, j), hi = std::max(i, j);
            b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(lo * (n - hi), n) + 1;
        }
    return b;
}

struct ModStructure {
    std::int64_t modulus;
    SmallVector v1;           // generator column; column k is k * v1 (mod n)
    IntegerMatrix reduced;    // n * L^{-1} mod n
};

/// Reduces n*L^{-1} mod n and checks every column is a multiple of v1. Throws on failure.
inline ModStructure mod_structure(std::int64_t n, bool leafed) {
    const auto minor = leafed ? leafed_minor(n) : cycle_minor(n);
    const auto [d, r] = adjugate_pair(minor);
    if (d != n) throw Error("internal: minor determinant " + to_string(d) + " differs from n");
    ModStructure out{n, {}, IntegerMatrix(r.rows(), r.cols())};
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) {
            Int v = r(i, j) % n;
            if (v < 0) v += n;
            out.reduced(i, j) = v;
        }
    // Column of v_1: index 1 in the leafed layout, index 0 in the cycle layout (label 1).
    const std::size_t first = leafed ? 1 : 0;
    for (std::size_t i = 0; i < r.rows(); ++i) out.v1.push_back(to_small(out.reduced(i, first)));
    for (std::size_t col = 0; col < r.cols(); ++col) {
        const std::int64_t k = leafed ? static_cast<std::int64_t>(col) : static_cast<std::int64_t>(col) + 1;
        for (std::size_t i = 0; i < r.rows(); ++i)
            if (out.reduced(i, col) != mod_floor(k * out.v1[i], n))
                throw Error("internal: column " + std::to_string(k) + " is not " + std::to_string(k) + " * v1 mod n");
    }
    return out;
}

/// sum_j weights[j] * c_j = 0 (mod modulus) with digits c_j in 0..modulus-1.
struct CongruenceSystem {
    std::int64_t modulus;
    SmallVector weights;
};

/// Weights (n - j) mod n for j = 1..n-1.
inline CongruenceSystem cycle_system(std::int64_t n) {
    require_cycle_size(n);
    CongruenceSystem s{n, {}};
    for (std::int64_t j = 1; j < n; ++j) s.weights.push_back(mod_floor(n - j, n));
    return s;
}

/// Weights (n - j) mod n for j = 0..n-1, so c_0 carries weight 0. Defined for n >= 2.
inline CongruenceSystem leafed_system(std::int64_t n) {
    if (n < 2) throw ParameterError("leafed congruence needs n >= 2");
    CongruenceSystem s{n, {}};
    for (std::int64_t j = 0; j < n; ++j) s.weights.push_back(mod_floor(n - j, n));
    return s;
}

/// Visits the solutions in lexicographic order. One digit with a unit weight, if any, is solved
/// for directly instead of enumerated.
inline void for_each_solution(const CongruenceSystem& sys, std::uint64_t budget,
                              const std::function<void(const SmallVector&)>& visit) {
    const auto n = sys.modulus;
    const auto len = sys.weights.size();
    std::size_t solved = len;
    std::int64_t inverse = 0;
    for (std::size_t j = 0; j < len && solved == len; ++j)
        for (std::int64_t x = 1; x < n; ++x)
            if (mod_floor(sys.weights[j] * x, n) == 1) {
                solved = j;
                inverse = x;
                break;
            }
    const std::size_t free_digits = len - (solved < len ? 1 : 0);
    Int required = ipow(Int(n), free_digits);
    if (required > Int(budget))
        throw BudgetExceeded("congruence enumeration",
                             required > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(required), budget);
    SmallVector c(len, 0);
    auto walk = [&](auto&& self, std::size_t j, std::int64_t residue) -> void {
        if (j == len) {
            if (residue == 0) visit(c);
            return;
        }
        for (std::int64_t v = 0; v < n; ++v) {
            c[j] = v;
            self(self, j + 1, mod_floor(residue + sys.weights[j] * v, n));
        }
        c[j] = 0;
    };
    if (solved == len) {
        walk(walk, 0, 0);
        return;
    }
    // Enumerate all free digits in lexicographic order of the full vector, solving digit `solved`.
    std::vector<SmallVector> out;
    SmallVector free_pos;
    for (std::size_t j = 0; j < len; ++j)
        if (j != solved) free_pos.push_back(static_cast<std::int64_t>(j));
    auto walk_free = [&](auto&& self, std::size_t idx, std::int64_t residue) -> void {
        if (idx == free_pos.size()) {
            c[solved] = mod_floor(-residue * inverse, n);
            out.push_back(c);
            return;
        }
        const auto j = static_cast<std::size_t>(free_pos[idx]);
        for (std::int64_t v = 0; v < n; ++v) {
            c[j] = v;
            self(self, idx + 1, mod_floor(residue + sys.weights[j] * v, n));
        }
        c[j] = 0;
    };
    walk_free(walk_free, 0, 0);
    std::sort(out.begin(), out.end());
    for (const auto& s : out) visit(s);
}

inline std::vector<SmallVector> solve_Sn(const CongruenceSystem& sys, std::uint64_t budget = kDefaultFppBudget) {
    std::vector<SmallVector> out;
    for_each_solution(sys, budget, [&](const SmallVector& c) { out.push_back(c); });
    return out;
}

/// counts[s] = #{c : digit_lo <= c_j <= digit_hi, sum c = s, sum w_j c_j = 0 mod n}, s <= max_sum.
/// digit_hi < 0 leaves digits bounded only by max_sum.
inline std::vector<Int> congruent_digit_counts(const CongruenceSystem& sys, std::int64_t digit_lo,
                                               std::int64_t digit_hi, std::int64_t max_sum) {
    const auto n = sys.modulus;
    const auto width = static_cast<std::size_t>(max_sum + 1);
    std::vector<Int> state(static_cast<std::size_t>(n) * width), next(state.size());
    state[0] = 1;  // residue 0, sum 0
    for (auto w : sys.weights) {
        std::fill(next.begin(), next.end(), Int(0));
        for (std::int64_t r = 0; r < n; ++r)
            for (std::int64_t s = 0; s <= max_sum; ++s) {
                const Int& cur = state[static_cast<std::size_t>(r) * width + static_cast<std::size_t>(s)];
                if (cur == 0) continue;
                const auto top = digit_hi < 0 ? max_sum - s : std::min(digit_hi, max_sum - s);
                for (std::int64_t v = digit_lo; v <= top; ++v)
                    next[static_cast<std::size_t>(mod_floor(r + w * v, n)) * width + static_cast<std::size_t>(s + v)] += cur;
            }
        std::swap(state, next);
    }
    return {state.begin(), state.begin() + static_cast<std::ptrdiff_t>(width)};
}

struct PhiHistogram {
    std::vector<Int> coefficients;  // entry m counts c in S_n with digit sum m
};

/// sum_{c in S_n} q^{phi(c)} for the leafed system, by DP over (residue, digit sum).
inline PhiHistogram phi_histogram_dp(std::int64_t n) {
    const auto counts = congruent_digit_counts(leafed_system(n), 0, n - 1, n * (n - 1));
    return {Polynomial(counts).coefficients()};
}

/// Leafed-cycle first-coordinate generating function N(q) / (1 - q^n)^n.
inline UnivariateRationalGF leafed_gf(std::int64_t n) {
    return UnivariateRationalGF(Polynomial(phi_histogram_dp(n).coefficients), {{n, n}});
}

/// counts[s] = number of lattice points lambda of the leafed cone with lambda_0 = s, s <= max_level.
/// With strict = true only points with L lambda >= 1 (the cone interior) are counted.
/// Uses lambda = L^{-1} c, lambda_0 = sum c, and integrality of L^{-1} c iff c satisfies S_n's congruence.
inline std::vector<Int> leafed_level_counts(std::int64_t n, std::int64_t max_level, bool strict) {
    return congruent_digit_counts(leafed_system(n), strict ? 1 : 0, -1, max_level);
}

/// Multivariate transform of the n-cycle cone from S_n: numerator L^{-1} c, rays columns of n L^{-1}.
inline IntegerPointTransform cycle_multivariate_gf(std::int64_t n, std::uint64_t budget = kDefaultFppBudget) {
    const auto [d, r] = adjugate_pair(cycle_minor(n));
    IntegerPointTransform t;
    t.denominator = ray_factors(r);
    for_each_solution(cycle_system(n), budget, [&](const SmallVector& c) {
        SmallVector w(c.size());
        for (std::size_t i = 0; i < r.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < r.cols(); ++j) acc += r(i, j) * c[j];
            if (acc % d != 0) throw Error("internal: S_n solution does not give an integer point");
            w[i] = to_small(acc / d);
        }
        t.numerator.push_back(std::move(w));
    });
    std::sort(t.numerator.begin(), t.numerator.end());
    return t;
}

}  // namespace lapcomp
