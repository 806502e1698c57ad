#pragma once

// Simplicial cones {x : A x >= 0}, their fundamental parallelepipeds, integer point
// transforms, univariate specializations, and an independent box-enumeration oracle.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <thread>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "lattice_enum.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp {

inline constexpr std::uint64_t kDefaultFppBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultBoxBudget = 1'000'000'000;

enum class Statistic { total, first_coordinate };

struct SimplicialCone {
    IntegerMatrix constraints;  // A
    Int d;                      // |det A|
    IntegerMatrix rays;         // R = d A^{-1}; columns are the ray generators

    std::size_t dimension() const noexcept { return constraints.rows(); }
};

inline SimplicialCone cone_from_constraints(const IntegerMatrix& a) {
    if (!a.square()) throw ParameterError("constraint matrix must be square");
    auto [d, r] = adjugate_pair(a);
    return {a, std::move(d), std::move(r)};
}

struct FppPoint {
    SmallVector c;       // A * lambda, digits in 0..d-1
    SmallVector lambda;  // R * c / d

    friend bool operator==(const FppPoint&, const FppPoint&) = default;
};

using FppPointSet = std::vector<FppPoint>;

struct EnumerationOptions {
    std::uint64_t budget = kDefaultFppBudget;
    unsigned threads = 1;
};

namespace detail {

inline std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    const auto g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    const __int128 p = static_cast<__int128>(a) * b % m;
    return static_cast<std::int64_t>(p < 0 ? p + m : p);
}

/// Upper-triangular generators of the row lattice of R together with d Z^n, reduced mod d.
/// Row k has its leading entry h_k (a divisor of d) in column k.
inline std::vector<SmallVector> congruence_echelon(const IntegerMatrix& r, std::int64_t d) {
    const std::size_t n = r.rows();
    std::vector<SmallVector> rows(n, SmallVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int v = r(i, j) % d;
            if (v < 0) v += d;
            rows[i][j] = static_cast<std::int64_t>(v);
        }
    std::vector<SmallVector> echelon(n);
    for (std::size_t k = 0; k < n; ++k) {
        SmallVector pivot(n, 0);
        pivot[k] = d;
        for (auto& row : rows) {
            if (row[k] == 0) continue;
            std::int64_t x, y;
            const auto a = pivot[k], b = row[k];
            const auto g = ext_gcd(a, b, x, y);
            const auto ag = a / g, bg = b / g;
            SmallVector np(n, 0), nr(n, 0);
            for (std::size_t j = k + 1; j < n; ++j) {
                np[j] = mod_floor(mulmod(x, pivot[j], d) + mulmod(y, row[j], d), d);
                nr[j] = mod_floor(mulmod(bg, pivot[j], d) - mulmod(ag, row[j], d), d);
            }
            np[k] = g;
            pivot = std::move(np);
            row = std::move(nr);
        }
        echelon[k] = std::move(pivot);
    }
    return echelon;
}

}  // namespace detail

/// Integer points of the half-open fundamental parallelepiped, sorted by c.
/// Enumerates c in {0..d-1}^n with R c = 0 (mod d), solving one echelon congruence per digit.
inline FppPointSet fpp_points(const SimplicialCone& cone, const EnumerationOptions& opts = {}) {
    const std::size_t n = cone.dimension();
    if (n == 0) return {FppPoint{}};
    if (cone.d > Int(opts.budget))
        throw BudgetExceeded("fundamental parallelepiped modulus", static_cast<std::uint64_t>(
                                 cone.d > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(cone.d)),
                             opts.budget);
    const auto d = to_small(cone.d);
    const auto echelon = detail::congruence_echelon(cone.rays, d);

    Int required = 1;
    for (std::size_t k = 0; k < n; ++k) required *= echelon[k][k];
    if (required > Int(opts.budget))
        throw BudgetExceeded("fundamental parallelepiped enumeration",
                             required > Int(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(required),
                             opts.budget);

    auto lift = [&](const SmallVector& c) {
        FppPoint p{c, SmallVector(n)};
        for (std::size_t i = 0; i < n; ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc += cone.rays(i, j) * c[j];
            if (acc % d != 0) throw Error("internal: fundamental parallelepiped point is not integral");
            p.lambda[i] = to_small(acc / d);
        }
        return p;
    };

    // Solutions for digit k given digits k+1..n-1.
    auto digit_choices = [&](const SmallVector& c, std::size_t k, SmallVector& out) {
        out.clear();
        std::int64_t s = 0;
        for (std::size_t j = k + 1; j < n; ++j) s = mod_floor(s + detail::mulmod(echelon[k][j], c[j], d), d);
        const auto target = mod_floor(-s, d);
        const auto h = echelon[k][k];
        if (target % h != 0) return;
        const auto step = d / h;
        for (std::int64_t i = 0; i < h; ++i) out.push_back(target / h + i * step);
    };

    SmallVector top;
    digit_choices(SmallVector(n, 0), n - 1, top);

    auto run = [&](std::size_t first, std::size_t stride, FppPointSet& out) {
        SmallVector c(n, 0);
        std::vector<SmallVector> choices(n);
        auto walk = [&](auto&& self, std::size_t k) -> void {
            digit_choices(c, k, choices[k]);
            for (auto v : choices[k]) {
                c[k] = v;
                if (k == 0) out.push_back(lift(c));
                else self(self, k - 1);
            }
            c[k] = 0;
        };
        for (std::size_t t = first; t < top.size(); t += stride) {
            c[n - 1] = top[t];
            if (n == 1) out.push_back(lift(c));
            else walk(walk, n - 2);
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(top.size())));
    std::vector<FppPointSet> parts(workers);
    if (workers == 1) {
        run(0, 1, parts[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { run(w, workers, parts[w]); });
    }
    FppPointSet points;
    for (auto& p : parts) points.insert(points.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(points.begin(), points.end(), [](const FppPoint& a, const FppPoint& b) { return a.c < b.c; });
    return points;
}

struct RayFactor {
    SmallVector ray;
    std::int64_t mult = 1;
    friend bool operator==(const RayFactor&, const RayFactor&) = default;
};

/// sum_{w in numerator} z^w / prod (1 - z^ray)^mult.
struct IntegerPointTransform {
    std::vector<SmallVector> numerator;
    std::vector<RayFactor> denominator;
    friend bool operator==(const IntegerPointTransform&, const IntegerPointTransform&) = default;
};

inline std::vector<RayFactor> ray_factors(const IntegerMatrix& rays) {
    std::vector<RayFactor> out;
    for (std::size_t j = 0; j < rays.cols(); ++j) {
        SmallVector ray(rays.rows());
        for (std::size_t i = 0; i < rays.rows(); ++i) ray[i] = to_small(rays(i, j));
        auto it = std::find_if(out.begin(), out.end(), [&](const RayFactor& f) { return f.ray == ray; });
        if (it != out.end()) ++it->mult;
        else out.push_back({std::move(ray), 1});
    }
    return out;
}

inline IntegerPointTransform integer_point_transform(const SimplicialCone& cone,
                                                     const EnumerationOptions& opts = {}) {
    IntegerPointTransform t;
    t.denominator = ray_factors(cone.rays);
    if (cone.d == 1) {
        // Unimodular: a product of geometric series.
        t.numerator.push_back(SmallVector(cone.dimension(), 0));
        return t;
    }
    for (auto& p : fpp_points(cone, opts)) t.numerator.push_back(std::move(p.lambda));
    std::sort(t.numerator.begin(), t.numerator.end());
    return t;
}

inline std::int64_t statistic_of(const SmallVector& v, Statistic stat) {
    if (v.empty()) return 0;
    return stat == Statistic::total ? std::accumulate(v.begin(), v.end(), std::int64_t{0}) : v.front();
}

inline UnivariateRationalGF specialize(const IntegerPointTransform& t, Statistic mode) {
    SmallVector exps;
    exps.reserve(t.numerator.size());
    for (const auto& w : t.numerator) exps.push_back(statistic_of(w, mode));
    std::vector<UnivariateRationalGF::Factor> den;
    for (const auto& f : t.denominator) {
        const auto e = statistic_of(f.ray, mode);
        if (e <= 0) throw Error("specialization sends a ray to a non-positive exponent");
        den.emplace_back(e, f.mult);
    }
    return UnivariateRationalGF(polynomial_from_exponents(exps), den);
}

// ---------------------------------------------------------------------------
// Oracle: direct enumeration of lambda >= 0 with A lambda >= 0.

namespace detail {

inline BoxSystem oracle_box(const IntegerMatrix& a, Statistic stat, std::int64_t max_value) {
    const auto cone = cone_from_constraints(a);
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cone.rays(i, j) < 0)
                throw OracleInapplicable("cone is not contained in the nonnegative orthant");
    BoxSystem box;
    for (std::size_t i = 0; i < n; ++i) {
        SmallVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = to_small(a(i, j));
        box.rows.push_back(std::move(row));
        box.rhs.push_back(0);
    }
    box.lower.assign(n, 0);
    box.upper.assign(n, max_value);
    if (stat == Statistic::total) {
        box.rows.emplace_back(n, -1);
        box.rhs.push_back(-max_value);
    } else {
        for (std::size_t j = 0; j < n; ++j)
            if (cone.rays(0, j) == 0)
                throw OracleInapplicable("first coordinate does not bound the cone");
        for (std::size_t i = 1; i < n; ++i) {
            Int best = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const Int bound = Int(max_value) * cone.rays(i, j) / cone.rays(0, j);
                best = std::max(best, bound);
            }
            box.upper[i] = to_small(best);
        }
    }
    return box;
}

}  // namespace detail

/// counts[m] = #{lambda in Z^n : lambda >= 0, A lambda >= 0, statistic(lambda) = m}, m <= max_value.
inline std::vector<std::uint64_t> brute_force_histogram(const IntegerMatrix& a, Statistic stat,
                                                        std::int64_t max_value,
                                                        std::uint64_t budget = kDefaultBoxBudget) {
    if (max_value < 0) throw ParameterError("statistic bound must be nonnegative");
    const auto box = detail::oracle_box(a, stat, max_value);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_value) + 1, 0);
    enumerate_box_points(box, budget, [&](const SmallVector& x) {
        ++counts[static_cast<std::size_t>(statistic_of(x, stat))];
    });
    return counts;
}

inline std::uint64_t brute_force_count(const IntegerMatrix& a, Statistic stat, std::int64_t value,
                                       std::uint64_t budget = kDefaultBoxBudget) {
    if (value < 0) return 0;
    auto box = detail::oracle_box(a, stat, value);
    const std::size_t n = a.rows();
    if (stat == Statistic::total) {
        box.rows.emplace_back(n, 1);
        box.rhs.push_back(value);
    } else {
        box.lower[0] = value;
    }
    std::uint64_t count = 0;
    enumerate_box_points(box, budget, [&](const SmallVector&) { ++count; });
    return count;
}

}  // namespace lapcomp
