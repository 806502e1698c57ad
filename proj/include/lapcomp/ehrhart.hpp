#pragma once

// Slice simplices of the leafed-cycle cone, Ehrhart counts and h*-vectors, two reflexivity
// tests, and an exhaustive normality probe.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "conjecture.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "lattice_enum.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp {

struct SliceProvenance {
    std::int64_t n;       // leafed n-cycle
    std::int64_t height;  // slice at lambda_0 = height
};

/// Full-dimensional lattice simplex given by its D+1 vertices in Z^D.
class LatticeSimplex {
public:
    LatticeSimplex(std::vector<IntVector> vertices, std::optional<SliceProvenance> slice = std::nullopt)
        : vertices_(std::move(vertices)), slice_(slice) {
        if (vertices_.empty()) throw ParameterError("simplex needs at least one vertex");
        dim_ = vertices_.size() - 1;
        for (const auto& v : vertices_)
            if (v.size() != dim_) throw ParameterError("simplex vertices must lie in Z^D with D+1 vertices");
        IntegerMatrix homog(dim_ + 1, dim_ + 1);
        for (std::size_t j = 0; j <= dim_; ++j) {
            for (std::size_t i = 0; i < dim_; ++i) homog(i, j) = vertices_[j][i];
            homog(dim_, j) = 1;
        }
        if (determinant(homog) == 0) throw ParameterError("simplex vertices are affinely dependent");
        barycentric_ = adjugate_pair(homog).R;
    }

    std::size_t dimension() const noexcept { return dim_; }
    const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
    const std::optional<SliceProvenance>& slice() const noexcept { return slice_; }

    /// |det(v_i - v_0)| = D! * volume.
    Int normalized_volume() const {
        IntegerMatrix edges(dim_, dim_);
        for (std::size_t j = 1; j <= dim_; ++j)
            for (std::size_t i = 0; i < dim_; ++i) edges(i, j - 1) = vertices_[j][i] - vertices_[0][i];
        return abs(determinant(edges));
    }

    /// x in tP  <=>  H (x, t) >= 0 with H a positive multiple of the barycentric inverse.
    /// Interior points satisfy H (x, t) >= 1.
    BoxSystem dilate_system(std::int64_t t, bool interior) const {
        BoxSystem box;
        for (std::size_t i = 0; i <= dim_; ++i) {
            SmallVector row(dim_);
            for (std::size_t j = 0; j < dim_; ++j) row[j] = to_small(barycentric_(i, j));
            box.rows.push_back(std::move(row));
            box.rhs.push_back(to_small(-barycentric_(i, dim_) * t) + (interior ? 1 : 0));
        }
        for (std::size_t k = 0; k < dim_; ++k) {
            Int lo = vertices_[0][k], hi = vertices_[0][k];
            for (const auto& v : vertices_) {
                lo = std::min(lo, v[k]);
                hi = std::max(hi, v[k]);
            }
            box.lower.push_back(to_small(lo * t));
            box.upper.push_back(to_small(hi * t));
        }
        return box;
    }

private:
    std::vector<IntVector> vertices_;
    std::optional<SliceProvenance> slice_;
    std::size_t dim_ = 0;
    IntegerMatrix barycentric_;
};

/// Columns of n L^{-1} for the leafed n-cycle (all with lambda_0 = n), lambda_0 dropped.
inline LatticeSimplex build_slice_simplex(std::int64_t n) {
    const auto [d, r] = adjugate_pair(leafed_minor(n));
    if (d != n) throw Error("internal: leafed minor determinant differs from n");
    std::vector<IntVector> vertices;
    for (std::size_t j = 0; j < r.cols(); ++j) {
        if (r(0, j) != n) throw Error("internal: slice vertex does not have lambda_0 = n");
        IntVector v;
        for (std::size_t i = 1; i < r.rows(); ++i) v.push_back(r(i, j));
        vertices.push_back(std::move(v));
    }
    return LatticeSimplex(std::move(vertices), SliceProvenance{n, n});
}

struct InteriorPoint {
    RationalVector full;     // L^{-1} * 1, i.e. the sum of the columns w_i of L^{-1}
    RationalVector dropped;  // lambda_0 removed
    bool integral;
};

inline InteriorPoint interior_point(std::int64_t n) {
    const auto inv = inverse(leafed_minor(n));
    InteriorPoint p{multiply(inv, RationalVector(static_cast<std::size_t>(n), Rational(1))), {}, true};
    p.dropped.assign(p.full.begin() + 1, p.full.end());
    p.integral = std::all_of(p.full.begin(), p.full.end(), [](const Rational& x) { return is_integral(x); });
    return p;
}

struct ReflexivityCertificate {
    bool reflexive = false;
    IntegerMatrix reduced_system;  // rows of L with the lambda_0 column removed
    IntVector rhs;                 // -(L * translation)
    RationalVector translation;    // the interior point moved to the origin
    std::string reason;            // why the certificate fails, empty when reflexive
};

/// Translates the slice by its interior point and reads the facet description off the minor rows.
inline ReflexivityCertificate reflexivity_by_halfspaces(std::int64_t n) {
    const auto minor = leafed_minor(n);
    const auto point = interior_point(n);
    ReflexivityCertificate cert;
    cert.translation = point.full;
    const auto image = multiply(minor.cast<Rational>(), point.full);
    cert.reduced_system = IntegerMatrix(minor.rows(), minor.cols() - 1);
    for (std::size_t i = 0; i < minor.rows(); ++i)
        for (std::size_t j = 1; j < minor.cols(); ++j) cert.reduced_system(i, j - 1) = minor(i, j);
    bool rhs_ok = true;
    for (const auto& v : image) {
        if (!is_integral(v) || v != 1) rhs_ok = false;
        cert.rhs.push_back(is_integral(v) ? Int(-to_int(v)) : Int(0));
    }
    if (adjugate_pair(minor).d != n) cert.reason = "slice vertices are not integral";
    else if (point.full.front() != n) cert.reason = "translation does not eliminate lambda_0";
    else if (!point.integral) cert.reason = "translation vector is not integral";
    else if (!rhs_ok) cert.reason = "right-hand side is not -1";
    cert.reflexive = cert.reason.empty();
    return cert;
}

// ---------------------------------------------------------------------------
// Counting

/// Integer points of tP by direct enumeration of the barycentric inequalities.
inline Int dilate_count_enumerated(const LatticeSimplex& s, std::int64_t t, bool interior = false,
                                   std::uint64_t budget = kDefaultBoxBudget) {
    if (t < 0) throw ParameterError("dilation factor must be nonnegative");
    std::uint64_t count = 0;
    enumerate_box_points(s.dilate_system(t, interior), budget, [&](const SmallVector&) { ++count; });
    return count;
}

/// L_P(0..t_max). Slices use the leafed generating function (coefficient of q^{nt});
/// other simplices are enumerated directly.
inline std::vector<Int> dilate_counts(const LatticeSimplex& s, std::int64_t t_max, std::uint64_t budget = kDefaultBoxBudget) {
    if (t_max < 0) throw ParameterError("dilation factor must be nonnegative");
    std::vector<Int> out;
    if (const auto& slice = s.slice()) {
        const auto series = series_expand(leafed_gf(slice->n), static_cast<std::size_t>(slice->height * t_max));
        for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(series[static_cast<std::size_t>(slice->height * t)]);
        return out;
    }
    for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(dilate_count_enumerated(s, t, false, budget));
    return out;
}

inline Int dilate_count(const LatticeSimplex& s, std::int64_t t) { return dilate_counts(s, t).back(); }

/// Interior points of tP for t = 0..t_max.
inline std::vector<Int> interior_counts(const LatticeSimplex& s, std::int64_t t_max, std::uint64_t budget = kDefaultBoxBudget) {
    std::vector<Int> out;
    if (const auto& slice = s.slice()) {
        const auto levels = leafed_level_counts(slice->n, slice->height * t_max, true);
        for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(levels[static_cast<std::size_t>(slice->height * t)]);
        return out;
    }
    for (std::int64_t t = 0; t <= t_max; ++t) out.push_back(dilate_count_enumerated(s, t, true, budget));
    return out;
}

struct HStarData {
    std::vector<Int> h_star;
    std::vector<Int> dilate_counts;  // L_P(0..D)
    bool palindromic = false;
    bool unimodal = false;
    std::optional<bool> reflexive_certificate;  // halfspace certificate, slices only
};

inline bool is_unimodal(const std::vector<Int>& a) {
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
    while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
    return i + 1 >= a.size();
}

/// h*_j = sum_{i<=j} (-1)^i C(D+1, i) L_P(j-i).
inline HStarData h_star(const LatticeSimplex& s, std::uint64_t budget = kDefaultBoxBudget) {
    const auto dim = static_cast<std::int64_t>(s.dimension());
    HStarData data;
    data.dilate_counts = dilate_counts(s, dim, budget);
    for (std::int64_t j = 0; j <= dim; ++j) {
        Int h = 0;
        for (std::int64_t i = 0; i <= j; ++i) {
            const Int term = binomial(dim + 1, i) * data.dilate_counts[static_cast<std::size_t>(j - i)];
            h += (i % 2 ? -term : term);
        }
        if (h < 0) throw Error("internal: negative h* entry");
        data.h_star.push_back(h);
    }
    data.palindromic = std::equal(data.h_star.begin(), data.h_star.end(), data.h_star.rbegin());
    data.unimodal = is_unimodal(data.h_star);
    if (const auto& slice = s.slice()) data.reflexive_certificate = reflexivity_by_halfspaces(slice->n).reflexive;
    return data;
}

/// h*(x) / (1 - x)^{D+1}.
inline UnivariateRationalGF ehrhart_series(const HStarData& data) {
    const auto dim = static_cast<std::int64_t>(data.h_star.size()) - 1;
    return UnivariateRationalGF(Polynomial(data.h_star), {{1, dim + 1}});
}

/// Checks #interior((t+1)P) = L_P(t) for t = 0..t_max.
inline bool reflexivity_by_interior_counts(const LatticeSimplex& s, std::int64_t t_max,
                                           std::uint64_t budget = kDefaultBoxBudget) {
    if (t_max < 1) throw ParameterError("t_max must be at least 1");
    const auto inner = interior_counts(s, t_max + 1, budget);
    const auto closed = dilate_counts(s, t_max, budget);
    for (std::int64_t t = 0; t <= t_max; ++t)
        if (inner[static_cast<std::size_t>(t + 1)] != closed[static_cast<std::size_t>(t)]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Normality

/// Integer points of tP. Slices are listed through compositions c of n*t satisfying the
/// leafed congruence (lambda = L^{-1} c); other simplices by box enumeration.
inline std::set<SmallVector> dilate_points(const LatticeSimplex& s, std::int64_t t, std::uint64_t budget = kDefaultBoxBudget) {
    std::set<SmallVector> points;
    if (const auto& slice = s.slice(); slice && slice->height == slice->n) {
        const auto n = slice->n;
        const auto [d, r] = adjugate_pair(leafed_minor(n));
        const auto sys = leafed_system(n);
        const auto total = n * t;
        if (binomial(total + n - 1, n - 1) > Int(budget))
            throw BudgetExceeded("dilate point listing", budget + 1, budget);
        SmallVector c(static_cast<std::size_t>(n), 0);
        auto walk = [&](auto&& self, std::size_t i, std::int64_t left, std::int64_t residue) -> void {
            if (i + 1 == c.size()) {
                c[i] = left;
                if (mod_floor(residue + sys.weights[i] * left, n) != 0) return;
                SmallVector x;
                for (std::size_t row = 1; row < r.rows(); ++row) {
                    Int acc = 0;
                    for (std::size_t col = 0; col < r.cols(); ++col) acc += r(row, col) * c[col];
                    x.push_back(to_small(acc / d));
                }
                points.insert(std::move(x));
                return;
            }
            for (std::int64_t v = 0; v <= left; ++v) {
                c[i] = v;
                self(self, i + 1, left - v, mod_floor(residue + sys.weights[i] * v, n));
            }
        };
        walk(walk, 0, total, 0);
        return points;
    }
    enumerate_box_points(s.dilate_system(t, false), budget, [&](const SmallVector& x) { points.insert(x); });
    return points;
}

struct NormalityLevel {
    std::int64_t m;
    std::size_t points;        // |mP cap Z^D|
    std::size_t decomposable;  // points that are sums of m points of P
    bool ok;
};

struct NormalityReport {
    std::vector<NormalityLevel> levels;
    std::int64_t normal_up_to = 0;  // largest m with every level <= m passing
};

/// Exhaustive check that every point of mP is a sum of m points of P, for m = 1..m_max.
inline NormalityReport normality_probe(const LatticeSimplex& s, std::int64_t m_max, std::uint64_t budget = kDefaultBoxBudget) {
    if (m_max < 1) throw ParameterError("m_max must be at least 1");
    NormalityReport report;
    const auto base = dilate_points(s, 1, budget);
    std::set<SmallVector> reachable = base;
    bool still_normal = true;
    for (std::int64_t m = 1; m <= m_max; ++m) {
        const auto target = m == 1 ? base : dilate_points(s, m, budget);
        std::set<SmallVector> next;
        if (m == 1) {
            next = base;
        } else {
            for (const auto& y : target) {
                SmallVector diff(y.size());
                for (const auto& x : base) {
                    for (std::size_t i = 0; i < y.size(); ++i) diff[i] = y[i] - x[i];
                    if (reachable.count(diff)) {
                        next.insert(y);
                        break;
                    }
                }
            }
        }
        const bool ok = next.size() == target.size();
        report.levels.push_back({m, target.size(), next.size(), ok});
        if (ok && still_normal) report.normal_up_to = m;
        else still_normal = false;
        reachable = std::move(next);
    }
    return report;
}

}  // namespace lapcomp
