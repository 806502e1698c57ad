#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lapcomp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;
/// Small exponent / digit vectors used in hot enumeration loops.
using SmallVector = std::vector<std::int64_t>;

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integral(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

inline Int to_int(const Rational& x) {
    if (!is_integral(x)) throw Error("rational value " + to_string(x) + " is not an integer");
    return boost::multiprecision::numerator(x);
}

/// Narrows to int64, throwing when the value does not fit.
inline std::int64_t to_small(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() ||
        x < std::numeric_limits<std::int64_t>::min())
        throw Error("integer " + x.str() + " exceeds 64-bit range");
    return static_cast<std::int64_t>(x);
}

inline Int parse_int(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw ParseError("malformed integer '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw ParseError("malformed integer '" + text + "'");
    return Int(text);
}

inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Int ipow(const Int& base, std::uint64_t exponent) {
    Int result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

/// Nonnegative residue of a modulo m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace lapcomp
