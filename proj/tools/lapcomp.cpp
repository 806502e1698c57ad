// lapcomp: command-line front end.
//
// Exit codes: 0 ran (findings included), 1 a theorem check failed, 2 bad input or exhausted budget.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <lapcomp.hpp>

namespace {

using namespace lapcomp;
using lapcomp::json::Json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kInputError = 2;

struct GraphSource {
    std::string family;
    std::string file;
    long long minor = -1;
};

struct Loaded {
    Graph graph;
    std::size_t minor;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Loaded load_graph(const GraphSource& src) {
    if (src.family.empty() == src.file.empty()) throw ParameterError("give exactly one of --family or --file");
    Loaded out;
    std::size_t fallback = 0;
    if (!src.family.empty()) {
        const auto spec = parse_family(src.family);
        out.graph = build_family(spec);
        fallback = default_minor(spec);
    } else {
        out.graph = parse_graph(read_file(src.file));
    }
    out.minor = src.minor < 0 ? fallback : static_cast<std::size_t>(src.minor);
    out.graph.require_vertex(out.minor);
    return out;
}

std::string monomial(const SmallVector& e, const std::vector<std::size_t>& labels) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!out.empty()) out += '*';
        out += "z" + std::to_string(labels[i]);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_transform(const IntegerPointTransform& t, const std::vector<std::size_t>& labels) {
    std::string num;
    for (std::size_t i = 0; i < t.numerator.size(); ++i)
        num += (i ? " + " : "") + monomial(t.numerator[i], labels);
    if (t.numerator.size() > 1) num = "(" + num + ")";
    std::string den;
    for (const auto& f : t.denominator) {
        den += "(1 - " + monomial(f.ray, labels) + ")";
        if (f.mult > 1) den += "^" + std::to_string(f.mult);
    }
    if (t.denominator.size() > 1) den = "(" + den + ")";
    return den.empty() ? num : num + "/" + den;
}

std::string join(const std::vector<Int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
    return out + "]";
}

Statistic parse_statistic(const std::string& s) {
    if (s == "total") return Statistic::total;
    if (s == "first") return Statistic::first_coordinate;
    throw ParameterError("--spec must be 'total' or 'first'");
}

struct Cli {
    RunConfig cfg = config_from_environment();
    std::string budget;
    GraphSource source;
    std::string spec;
    std::string gf_path;
    long long order = 10;
    std::vector<std::string> check_args;
    long long ehrhart_n = 0;
    long long m_max = 2;
    long long t_max = 3;

    void apply_flags() {
        if (!budget.empty()) cfg.set_budget(parse_budget(budget));
        cfg.validate();
    }

    void emit(const Json& j) const { std::cout << j.dump(2) << '\n'; }

    // -----------------------------------------------------------------------

    int gf() {
        const auto [g, v] = load_graph(source);
        const auto minor = laplacian_minor(g, v);
        const auto cone = cone_from_constraints(minor.matrix);
        const auto ipt = integer_point_transform(cone, cfg.enumeration());
        if (spec.empty()) {
            if (cfg.json) emit(json::to_json(ipt));
            else std::cout << format_transform(ipt, minor.labels) << '\n';
            return kOk;
        }
        const auto gf = specialize(ipt, parse_statistic(spec));
        if (cfg.json) emit(json::to_json(gf));
        else std::cout << gf.str() << '\n';
        return kOk;
    }

    int series() {
        if (order < 0) throw ParameterError("--order must be nonnegative");
        UnivariateRationalGF gf;
        if (!gf_path.empty()) {
            gf = json::gf_from_text(read_file(gf_path));
        } else {
            const auto [g, v] = load_graph(source);
            const auto cone = cone_from_constraints(laplacian_minor(g, v).matrix);
            gf = specialize(integer_point_transform(cone, cfg.enumeration()),
                            parse_statistic(spec.empty() ? "total" : spec));
        }
        const auto coeffs = series_expand(gf, static_cast<std::size_t>(order));
        if (cfg.json) emit(json::numbers(coeffs));
        else std::cout << join(coeffs) << '\n';
        return kOk;
    }

    std::int64_t arg(std::size_t i) const {
        if (i >= check_args.size()) throw ParameterError("check " + check_args[0] + ": missing argument");
        return to_small(parse_int(check_args[i]));
    }

    void expect_args(std::size_t count) const {
        if (check_args.size() != count + 1)
            throw ParameterError("check " + check_args[0] + " takes " + std::to_string(count) + " argument(s)");
    }

    int check() {
        if (check_args.empty()) throw ParameterError("check needs a target");
        const auto& target = check_args[0];
        if (target == "cyclic") return check_cyclic();
        if (target == "near_symmetry") return check_near();
        if (target == "reflexive") return check_reflexive();
        if (target == "tree_equivalence") return check_trees();
        if (target == "shifts") return check_shifts();
        throw ParameterError("unknown check target '" + target + "'");
    }

    int check_cyclic() {
        expect_args(2);
        const auto report = check_conjecture_cyclic(arg(1), arg(2));
        std::size_t matched = 0;
        for (const auto& e : report.entries) matched += e.match;
        if (cfg.json) {
            emit(json::to_json(report));
        } else {
            for (const auto& e : report.entries)
                std::cout << "m=" << e.m << "  gf=" << e.lhs << "  classes=" << e.rhs << (e.match ? "" : "  MISMATCH") << '\n';
            std::cout << "n=" << report.n << ": " << matched << "/" << report.entries.size() << " match\n";
        }
        return kOk;
    }

    int check_near() {
        expect_args(1);
        const auto r = check_near_symmetry(arg(1));
        if (cfg.json) {
            emit(json::to_json(r));
        } else {
            std::cout << "k=" << r.k << " n=" << r.n << '\n';
            std::cout << "exact division: " << (r.division_exact ? "yes" : "no") << '\n';
            if (r.f) std::cout << "f(q) = " << r.f->str() << '\n';
            if (r.division_exact) std::cout << "difference: " << join(r.difference) << '\n';
            std::cout << "expected:   " << join(r.expected.coefficients()) << '\n';
            std::cout << "verdict: " << (r.verdict ? "true" : "false") << '\n';
        }
        return kOk;
    }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t p = 2; p * p <= n; ++p)
            if (n % p == 0) return false;
        return true;
    }

    int check_reflexive() {
        expect_args(1);
        const auto n = arg(1);
        const auto cert = reflexivity_by_halfspaces(n);
        const auto simplex = build_slice_simplex(n);
        const bool by_counts = reflexivity_by_interior_counts(simplex, cfg.dilate_t_max, cfg.box_budget);
        const bool agree = by_counts == cert.reflexive;
        if (cfg.json) {
            auto j = json::to_json(cert);
            j["n"] = json::number(n);
            j["interior_count_test"] = by_counts;
            j["tests_agree"] = agree;
            emit(j);
        } else {
            std::cout << "n=" << n << " reflexive=" << (cert.reflexive ? "true" : "false") << '\n';
            if (!cert.reason.empty()) std::cout << "reason: " << cert.reason << '\n';
            std::cout << "interior-count test (t <= " << cfg.dilate_t_max << "): " << (by_counts ? "true" : "false") << '\n';
            if (cert.reflexive) {
                std::cout << "facets A x >= -1 with A = " << cert.reduced_system << '\n';
            }
        }
        if (!agree) return kViolated;
        if (is_prime(n) && !cert.reflexive) return kViolated;
        return kOk;
    }

    int check_trees() {
        expect_args(2);
        const auto r = check_random_trees(static_cast<std::uint64_t>(arg(1)), static_cast<std::size_t>(arg(2)));
        if (cfg.json) {
            emit(Json{{"trees", json::number(static_cast<std::int64_t>(r.trees))},
                      {"failures", json::number(static_cast<std::int64_t>(r.failures))},
                      {"combinatorial_inverse", r.aggregate.combinatorial_inverse},
                      {"incidence_inverse", r.aggregate.incidence_inverse},
                      {"block_reduction", r.aggregate.block_reduction},
                      {"unimodular_minors", r.aggregate.unimodular_minors}});
        } else {
            std::cout << r.trees - r.failures << "/" << r.trees << " trees pass\n";
        }
        return r.failures ? kViolated : kOk;
    }

    int check_shifts() {
        expect_args(2);
        const auto n = arg(1), m = arg(2);
        const auto profile = integral_shift_profile(n, m, cfg.class_budget);
        const bool ok = !is_prime(n) || shift_profile_consistent(n, m, profile);
        if (cfg.json) {
            emit(Json{{"n", json::number(n)}, {"m", json::number(m)}, {"classes", json::to_json(profile)}, {"consistent", ok}});
        } else {
            for (const auto& e : profile) {
                std::cout << "(";
                for (std::size_t i = 0; i < e.cls.representative.size(); ++i)
                    std::cout << (i ? "," : "") << e.cls.representative[i];
                std::cout << ")  " << e.integral_shifts << '\n';
            }
        }
        return ok ? kOk : kViolated;
    }

    int ehrhart() {
        const auto simplex = build_slice_simplex(ehrhart_n);
        json::EhrhartReport r{ehrhart_n, simplex.vertices(), h_star(simplex, cfg.box_budget), false, 0};
        r.reflexive = r.data.reflexive_certificate.value_or(false);
        r.normal_up_to = normality_probe(simplex, m_max, cfg.box_budget).normal_up_to;
        if (cfg.json) {
            emit(json::to_json(r));
        } else {
            std::cout << "n=" << r.n << " dimension=" << simplex.dimension() << '\n';
            std::cout << "h* = " << join(r.data.h_star) << '\n';
            std::cout << "palindromic=" << r.data.palindromic << " unimodal=" << r.data.unimodal
                      << " reflexive=" << r.reflexive << " normal_up_to=" << r.normal_up_to << '\n';
        }
        return kOk;
    }

    int fpp() {
        const auto [g, v] = load_graph(source);
        const auto cone = cone_from_constraints(laplacian_minor(g, v).matrix);
        const auto points = fpp_points(cone, cfg.enumeration());
        if (cfg.json) {
            emit(Json{{"d", json::number(cone.d)}, {"rays", json::matrix(cone.rays)}, {"points", json::to_json(points)}});
            return kOk;
        }
        std::cout << "d=" << cone.d << " points=" << points.size() << '\n';
        for (const auto& p : points) {
            std::cout << "c=(";
            for (std::size_t i = 0; i < p.c.size(); ++i) std::cout << (i ? "," : "") << p.c[i];
            std::cout << ") lambda=(";
            for (std::size_t i = 0; i < p.lambda.size(); ++i) std::cout << (i ? "," : "") << p.lambda[i];
            std::cout << ")\n";
        }
        return kOk;
    }

    int tree_inverse() {
        const auto [g, v] = load_graph(source);
        if (!g.is_tree()) throw ParameterError("tree-inverse needs a tree");
        const auto minor = laplacian_minor(g, v);
        const auto algebraic = adjugate_pair(minor.matrix).R;
        const auto combinatorial = g.degree(v) == 1 ? tree_inverse_combinatorial(g, v).matrix : assemble_block_inverse(g, v);
        const bool ok = combinatorial == algebraic;
        if (cfg.json) {
            emit(Json{{"minor", json::number(static_cast<std::int64_t>(v))},
                      {"inverse", json::matrix(combinatorial)},
                      {"matches_algebraic", ok}});
        } else {
            std::cout << combinatorial << '\n';
            std::cout << "matches algebraic inverse: " << (ok ? "yes" : "no") << '\n';
        }
        return ok ? kOk : kViolated;
    }
};

void add_graph_flags(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--family", cli.source.family, "built-in family NAME:PARAMS (path:n, cycle:n, leafed_cycle:n, kary:k:levels, complete:n)");
    cmd->add_option("--file", cli.source.file, "edge-list file ('-' for stdin)");
    cmd->add_option("--minor", cli.source.minor, "minored vertex (family default when omitted)");
}

void add_common_flags(CLI::App* cmd, Cli& cli) {
    cmd->add_flag("--json", cli.cfg.json, "machine-readable output");
    cmd->add_option("--budget", cli.budget, "enumeration budget (overrides LAPCOMP_BUDGET)");
    cmd->add_option("--threads", cli.cfg.threads, "worker threads for enumeration")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"Integer-point transforms of Laplacian-minor cones"};
    app.require_subcommand(1);

    auto* gf = app.add_subcommand("gf", "generating function of the cone at a Laplacian minor");
    add_graph_flags(gf, cli);
    add_common_flags(gf, cli);
    gf->add_option("--spec", cli.spec, "specialize: total | first");

    auto* series = app.add_subcommand("series", "series coefficients of a generating function");
    add_graph_flags(series, cli);
    add_common_flags(series, cli);
    series->add_option("--spec", cli.spec, "specialize: total | first (default total)");
    series->add_option("--gf", cli.gf_path, "generating function JSON file ('-' for stdin)");
    series->add_option("--order", cli.order, "highest power to expand");

    auto* check = app.add_subcommand("check", "cyclic N M | near_symmetry K | reflexive N | tree_equivalence SEED COUNT | shifts N M");
    add_common_flags(check, cli);
    check->add_option("target", cli.check_args, "check target and arguments")->required();
    check->add_option("--t-max", cli.cfg.dilate_t_max, "depth of the interior-count test");

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart data of the leafed-cycle slice simplex");
    add_common_flags(ehrhart, cli);
    ehrhart->add_option("n", cli.ehrhart_n, "cycle length")->required();
    ehrhart->add_option("--m-max", cli.m_max, "normality probe depth");

    auto* fpp = app.add_subcommand("fpp", "fundamental parallelepiped points");
    add_graph_flags(fpp, cli);
    add_common_flags(fpp, cli);

    auto* tree = app.add_subcommand("tree-inverse", "combinatorial inverse of a tree Laplacian minor");
    add_graph_flags(tree, cli);
    add_common_flags(tree, cli);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        cli.apply_flags();
        if (*gf) return cli.gf();
        if (*series) return cli.series();
        if (*check) return cli.check();
        if (*ehrhart) return cli.ehrhart();
        if (*fpp) return cli.fpp();
        if (*tree) return cli.tree_inverse();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kInputError;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
