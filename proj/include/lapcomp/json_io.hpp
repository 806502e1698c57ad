#pragma once

// JSON emission and parsing. Every number is written as a decimal string.

#include <string>
#include <vector>

#include <json.hpp>

#include "bigint.hpp"
#include "cone.hpp"
#include "conjecture.hpp"
#include "ehrhart.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"

namespace lapcomp::json {

using Json = nlohmann::ordered_json;

inline Json number(const Int& x) { return to_string(x); }
inline Json number(std::int64_t x) { return std::to_string(x); }
inline Json number(const Rational& x) { return to_string(x); }

template <class Seq>
Json numbers(const Seq& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(number(v));
    return out;
}

inline Json matrix(const IntegerMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(numbers(m.row(i)));
    return out;
}

inline Json matrix(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(numbers(m.row(i)));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing helpers

inline Int parse_number(const Json& j) {
    try {
        if (j.is_string()) return parse_int(j.get<std::string>());
        if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad integer: ") + e.what());
    }
    throw ParseError("expected an integer string, got " + j.dump());
}

inline std::int64_t parse_small(const Json& j) {
    try {
        return to_small(parse_number(j));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline const Json& array_of(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    return j;
}

// ---------------------------------------------------------------------------
// Generating functions

inline Json to_json(const IntegerPointTransform& t) {
    Json num = Json::array();
    for (const auto& w : t.numerator) num.push_back(numbers(w));
    Json den = Json::array();
    for (const auto& f : t.denominator) den.push_back(Json{{"ray", numbers(f.ray)}, {"mult", number(f.mult)}});
    return Json{{"numerator", std::move(num)}, {"denominator", std::move(den)}};
}

inline IntegerPointTransform ipt_from_json(const Json& j) {
    IntegerPointTransform t;
    for (const auto& w : array_of(field(j, "numerator"), "numerator")) {
        SmallVector v;
        for (const auto& x : array_of(w, "numerator entry")) v.push_back(parse_small(x));
        t.numerator.push_back(std::move(v));
    }
    for (const auto& f : array_of(field(j, "denominator"), "denominator")) {
        RayFactor r;
        for (const auto& x : array_of(field(f, "ray"), "ray")) r.ray.push_back(parse_small(x));
        r.mult = parse_small(field(f, "mult"));
        t.denominator.push_back(std::move(r));
    }
    return t;
}

inline Json to_json(const UnivariateRationalGF& gf) {
    Json den = Json::array();
    for (auto [e, m] : gf.denominator()) den.push_back(Json::array({number(e), number(m)}));
    return Json{{"num", numbers(gf.numerator().coefficients())}, {"den", std::move(den)}};
}

inline UnivariateRationalGF gf_from_json(const Json& j) {
    std::vector<Int> num;
    for (const auto& x : array_of(field(j, "num"), "num")) num.push_back(parse_number(x));
    std::vector<UnivariateRationalGF::Factor> den;
    for (const auto& f : array_of(field(j, "den"), "den")) {
        if (!f.is_array() || f.size() != 2) throw ParseError("denominator factor must be [exponent, multiplicity]");
        den.emplace_back(parse_small(f[0]), parse_small(f[1]));
    }
    try {
        return UnivariateRationalGF(Polynomial(std::move(num)), den);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

inline UnivariateRationalGF gf_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return gf_from_json(j);
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const FppPointSet& points) {
    Json out = Json::array();
    for (const auto& p : points) out.push_back(Json{{"c", numbers(p.c)}, {"lambda", numbers(p.lambda)}});
    return out;
}

inline Json to_json(const CyclicCheckReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"n", number(r.n)}, {"m", number(e.m)}, {"lhs", number(e.lhs)},
                               {"rhs", number(e.rhs)}, {"match", e.match}});
    Json out{{"n", number(r.n)}, {"entries", std::move(entries)}, {"all_match", r.all_match}};
    out["first_mismatch"] = r.first_mismatch ? number(*r.first_mismatch) : Json(nullptr);
    return out;
}

inline Json to_json(const std::vector<ShiftProfileEntry>& profile) {
    Json out = Json::array();
    for (const auto& e : profile)
        out.push_back(Json{{"representative", numbers(e.cls.representative)},
                           {"orbit_size", number(static_cast<std::int64_t>(e.cls.orbit_size))},
                           {"integral_shifts", number(static_cast<std::int64_t>(e.integral_shifts))}});
    return out;
}

inline Json to_json(const NearSymmetryReport& r) {
    Json out{{"k", number(r.k)}, {"n", number(r.n)}, {"division_exact", r.division_exact}};
    out["f"] = r.f ? numbers(r.f->coefficients()) : Json(nullptr);
    out["difference"] = numbers(r.difference);
    out["expected"] = numbers(r.expected.coefficients());
    out["numerator_difference"] = numbers(r.numerator_difference);
    out["verdict"] = r.verdict;
    return out;
}

inline Json to_json(const ReflexivityCertificate& c) {
    return Json{{"reflexive", c.reflexive},
                {"reduced_system", matrix(c.reduced_system)},
                {"rhs", numbers(c.rhs)},
                {"translation", numbers(c.translation)},
                {"reason", c.reason}};
}

struct EhrhartReport {
    std::int64_t n;
    std::vector<IntVector> vertices;
    HStarData data;
    bool reflexive;
    std::int64_t normal_up_to;
};

inline Json to_json(const EhrhartReport& r) {
    Json vertices = Json::array();
    for (const auto& v : r.vertices) vertices.push_back(numbers(v));
    return Json{{"n", number(r.n)},
                {"vertices", std::move(vertices)},
                {"h_star", numbers(r.data.h_star)},
                {"palindromic", r.data.palindromic},
                {"unimodal", r.data.unimodal},
                {"reflexive", r.reflexive},
                {"normal_up_to", number(r.normal_up_to)}};
}

}  // namespace lapcomp::json
