#pragma once

// Dense integer polynomials in q and rational functions numerator / prod (1 - q^e)^m.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace lapcomp {

/// Coefficient list c[0] + c[1] q + ...; kept trimmed (no trailing zeros).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Int> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<long long> coefficients) {
        for (auto x : coefficients) c_.emplace_back(x);
        trim();
    }

    static Polynomial monomial(std::size_t degree, Int coefficient = 1) {
        std::vector<Int> c(degree + 1);
        c[degree] = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    /// (1 - q^e)^m.
    static Polynomial one_minus_power(std::size_t e, std::size_t m) {
        Polynomial factor({Int(1)});
        Polynomial base = Polynomial::monomial(0) - Polynomial::monomial(e);
        for (std::size_t i = 0; i < m; ++i) factor = factor * base;
        return factor;
    }

    const std::vector<Int>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long long degree() const noexcept { return static_cast<long long>(c_.size()) - 1; }
    Int coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }

    /// Quotient when `divisor` divides exactly over the integers, otherwise nullopt.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw ParameterError("division by the zero polynomial");
        if (is_zero()) return Polynomial();
        if (degree() < divisor.degree()) return std::nullopt;
        std::vector<Int> rem = c_;
        const auto dd = static_cast<std::size_t>(divisor.degree());
        const Int& lead = divisor.c_.back();
        std::vector<Int> quot(rem.size() - dd);
        for (std::size_t k = quot.size(); k-- > 0;) {
            const Int& top = rem[k + dd];
            if (top == 0) continue;
            if (top % lead != 0) return std::nullopt;
            const Int q = top / lead;
            quot[k] = q;
            for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.c_[j];
        }
        if (std::any_of(rem.begin(), rem.end(), [](const Int& x) { return x != 0; })) return std::nullopt;
        return Polynomial(std::move(quot));
    }

    bool palindromic() const {
        for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
            if (c_[i] != c_[j]) return false;
        return true;
    }

    std::string str(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Int mag = abs(c_[i]);
            if (first) os << (c_[i] < 0 ? "-" : "");
            else os << (c_[i] < 0 ? " - " : " + ");
            first = false;
            if (i == 0) { os << mag; continue; }
            if (mag != 1) os << mag << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// numerator / prod_j (1 - q^{e_j})^{m_j}, denominator kept merged and sorted by exponent.
class UnivariateRationalGF {
public:
    using Factor = std::pair<std::int64_t, std::int64_t>;  // (exponent, multiplicity)

    UnivariateRationalGF() = default;
    UnivariateRationalGF(Polynomial numerator, const std::vector<Factor>& denominator)
        : num_(std::move(numerator)) {
        std::map<std::int64_t, std::int64_t> merged;
        for (auto [e, m] : denominator) {
            if (e <= 0) throw ParameterError("denominator exponent must be positive");
            if (m < 0) throw ParameterError("denominator multiplicity must be nonnegative");
            merged[e] += m;
        }
        for (auto [e, m] : merged)
            if (m) den_.emplace_back(e, m);
    }

    const Polynomial& numerator() const noexcept { return num_; }
    const std::vector<Factor>& denominator() const noexcept { return den_; }

    friend bool operator==(const UnivariateRationalGF&, const UnivariateRationalGF&) = default;

    Polynomial denominator_polynomial() const {
        Polynomial d({1});
        for (auto [e, m] : den_) d = d * Polynomial::one_minus_power(static_cast<std::size_t>(e), static_cast<std::size_t>(m));
        return d;
    }

    std::string str() const {
        std::ostringstream os;
        const bool compound = num_.coefficients().size() > 1 &&
                              std::count_if(num_.coefficients().begin(), num_.coefficients().end(),
                                            [](const Int& x) { return x != 0; }) > 1;
        os << (compound ? "(" + num_.str() + ")" : num_.str());
        if (den_.empty()) return os.str();
        os << '/';
        const bool wrap = den_.size() > 1;
        if (wrap) os << '(';
        for (std::size_t i = 0; i < den_.size(); ++i) {
            auto [e, m] = den_[i];
            os << "(1 - q" << (e > 1 ? "^" + std::to_string(e) : "") << ')';
            if (m > 1) os << '^' << m;
        }
        if (wrap) os << ')';
        return os.str();
    }

private:
    Polynomial num_;
    std::vector<Factor> den_;
};

/// Exact coefficients of q^0..q^order.
inline std::vector<Int> series_expand(const UnivariateRationalGF& gf, std::size_t order) {
    std::vector<Int> a(order + 1);
    const auto& num = gf.numerator().coefficients();
    for (std::size_t i = 0; i < num.size() && i <= order; ++i) a[i] = num[i];
    for (auto [e, m] : gf.denominator()) {
        const auto step = static_cast<std::size_t>(e);
        for (std::int64_t r = 0; r < m; ++r)
            for (std::size_t i = step; i <= order; ++i) a[i] += a[i - step];
    }
    return a;
}

/// Histogram of exponents as a polynomial: sum_x q^{x}.
inline Polynomial polynomial_from_exponents(const std::vector<std::int64_t>& exponents) {
    if (exponents.empty()) return {};
    const auto top = *std::max_element(exponents.begin(), exponents.end());
    if (*std::min_element(exponents.begin(), exponents.end()) < 0)
        throw ParameterError("negative exponent in a univariate numerator");
    std::vector<Int> c(static_cast<std::size_t>(top) + 1);
    for (auto x : exponents) c[static_cast<std::size_t>(x)] += 1;
    return Polynomial(std::move(c));
}

}  // namespace lapcomp
