#pragma once

// Run-time limits shared by the command-line front end.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "bigint.hpp"
#include "cone.hpp"
#include "errors.hpp"

namespace lapcomp {

struct RunConfig {
    std::uint64_t fpp_budget = kDefaultFppBudget;    // FPP candidate operations
    std::uint64_t box_budget = kDefaultBoxBudget;    // box enumeration nodes
    std::int64_t dilate_t_max = 3;                    // interior-count test depth
    std::uint64_t class_budget = 50'000'000;          // compositions listed per class enumeration
    std::int64_t normality_m_max = 2;
    bool json = false;
    unsigned threads = 1;

    void validate() const {
        if (!fpp_budget || !box_budget || !class_budget) throw ParameterError("budgets must be positive");
        if (dilate_t_max < 1) throw ParameterError("dilate t_max must be positive");
        if (normality_m_max < 1) throw ParameterError("normality depth must be positive");
        if (!threads) throw ParameterError("thread count must be positive");
    }

    /// A single override applied to every budget (LAPCOMP_BUDGET or --budget).
    void set_budget(std::uint64_t b) {
        fpp_budget = box_budget = class_budget = b;
    }

    EnumerationOptions enumeration() const { return {fpp_budget, threads}; }
};

inline std::uint64_t parse_budget(const std::string& text) {
    const Int v = parse_int(text);
    if (v <= 0 || v > Int(UINT64_MAX)) throw ParameterError("budget must be a positive 64-bit integer");
    return static_cast<std::uint64_t>(v);
}

inline RunConfig config_from_environment() {
    RunConfig cfg;
    if (const char* env = std::getenv("LAPCOMP_BUDGET"); env && *env) cfg.set_budget(parse_budget(env));
    return cfg;
}

}  // namespace lapcomp
