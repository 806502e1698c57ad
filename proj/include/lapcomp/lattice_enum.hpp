#pragma once

// Depth-first enumeration of the integer points x with lower <= x <= upper and A x >= b.
// Each coordinate's range is tightened from the rows using optimistic bounds on the
// coordinates not yet assigned, so dead subtrees are cut before they are entered.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace lapcomp {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct BoxSystem {
    std::vector<SmallVector> rows;  // constraint rows, rows[i] . x >= rhs[i]
    SmallVector rhs;
    SmallVector lower;
    SmallVector upper;
};

namespace detail {

template <class Visit>
class BoxWalker {
public:
    BoxWalker(const BoxSystem& sys, std::uint64_t budget, Visit& visit)
        : sys_(sys), budget_(budget), visit_(visit), dim_(sys.lower.size()), x_(dim_),
          partial_(sys.rows.size(), 0), suffix_(sys.rows.size(), SmallVector(dim_ + 1, 0)) {
        for (std::size_t i = 0; i < sys.rows.size(); ++i)
            for (std::size_t k = dim_; k-- > 0;) {
                const auto a = sys.rows[i][k];
                suffix_[i][k] = suffix_[i][k + 1] + std::max(a * sys.lower[k], a * sys.upper[k]);
            }
    }

    void run() {
        for (std::size_t k = 0; k < dim_; ++k)
            if (sys_.lower[k] > sys_.upper[k]) return;
        walk(0);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    void walk(std::size_t k) {
        if (k == dim_) {
            visit_(static_cast<const SmallVector&>(x_));
            return;
        }
        std::int64_t lo = sys_.lower[k], hi = sys_.upper[k];
        for (std::size_t i = 0; i < sys_.rows.size() && lo <= hi; ++i) {
            const auto a = sys_.rows[i][k];
            const auto need = sys_.rhs[i] - partial_[i] - suffix_[i][k + 1];
            if (a > 0) lo = std::max(lo, ceil_div(need, a));
            else if (a < 0) hi = std::min(hi, floor_div(need, a));
            else if (need > 0) return;
        }
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (++nodes_ > budget_) throw BudgetExceeded("box enumeration", nodes_, budget_);
            x_[k] = v;
            for (std::size_t i = 0; i < sys_.rows.size(); ++i) partial_[i] += sys_.rows[i][k] * v;
            walk(k + 1);
            for (std::size_t i = 0; i < sys_.rows.size(); ++i) partial_[i] -= sys_.rows[i][k] * v;
        }
    }

    const BoxSystem& sys_;
    std::uint64_t budget_;
    Visit& visit_;
    std::size_t dim_;
    SmallVector x_;
    SmallVector partial_;
    std::vector<SmallVector> suffix_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Calls visit(x) for every integer point of the system; returns the number of search nodes.
template <class Visit>
std::uint64_t enumerate_box_points(const BoxSystem& sys, std::uint64_t budget, Visit&& visit) {
    if (sys.lower.size() != sys.upper.size() || sys.rows.size() != sys.rhs.size())
        throw ParameterError("inconsistent box system");
    for (const auto& r : sys.rows)
        if (r.size() != sys.lower.size()) throw ParameterError("constraint row has the wrong length");
    detail::BoxWalker<std::remove_reference_t<Visit>> walker(sys, budget, visit);
    walker.run();
    return walker.nodes();
}

}  // namespace lapcomp
