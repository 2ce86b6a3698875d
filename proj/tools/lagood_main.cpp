#include <array>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lagood/analytic.hpp"
#include "lagood/errors.hpp"
#include "lagood/format.hpp"
#include "lagood/inversion.hpp"
#include "lagood/multi_index.hpp"
#include "lagood/parse.hpp"
#include "lagood/series.hpp"

namespace {

using nlohmann::ordered_json;
using namespace lagood;

constexpr int kExitSuccess = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

// ---------------------------------------------------------------------------
// List parsing for comma-separated flag values.

std::vector<std::string> split_list(const std::string& src) {
    std::vector<std::string> parts;
    std::string piece;
    std::istringstream in(src);
    while (std::getline(in, piece, ',')) {
        size_t a = piece.find_first_not_of(" \t");
        size_t b = piece.find_last_not_of(" \t");
        parts.push_back(a == std::string::npos ? std::string() : piece.substr(a, b - a + 1));
    }
    if (!src.empty() && src.back() == ',') parts.push_back("");
    return parts;
}

std::vector<int> parse_int_list(const std::string& src, const char* flag) {
    std::vector<int> out;
    for (const std::string& piece : split_list(src)) {
        size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(piece, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != piece.size() || piece.empty()) {
            throw std::invalid_argument(std::string(flag) + ": expected a comma-separated integer list, got \"" + src + "\"");
        }
        out.push_back(value);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& src, const char* flag) {
    std::vector<double> out;
    for (const std::string& piece : split_list(src)) {
        size_t pos = 0;
        double value = 0;
        try {
            value = std::stod(piece, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != piece.size() || piece.empty()) {
            throw std::invalid_argument(std::string(flag) + ": expected a comma-separated number list, got \"" + src + "\"");
        }
        out.push_back(value);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Demo fixtures. These come from closed forms and recurrences independent of
// the solver pipeline they are compared against.

std::vector<Rational> catalan_fixture(int count) {
    std::vector<Integer> c(static_cast<size_t>(count));
    if (count > 0) c[0] = 1;
    for (int m = 1; m < count; ++m) {
        Integer acc = 0;
        for (int j = 0; j < m; ++j) acc += c[static_cast<size_t>(j)] * c[static_cast<size_t>(m - 1 - j)];
        c[static_cast<size_t>(m)] = acc;
    }
    std::vector<Rational> out;
    out.reserve(c.size());
    for (const Integer& v : c) out.emplace_back(v);
    return out;
}

Rational cayley_fixture(int k) {
    Integer num;
    mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(k - 1));
    Integer den;
    mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(num, den);
}

Series exponential_series(int order) {
    std::vector<std::pair<MultiIndex, Rational>> terms;
    Integer fact = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fact *= k;
        terms.emplace_back(MultiIndex(std::vector<int>{k}), Rational(Integer(1), fact));
    }
    return Series::from_terms(1, order, terms);
}

// ---------------------------------------------------------------------------
// Flag bundles shared by the expression-driven subcommands.

struct ExprOptions {
    int n = 0;
    int order = -1;
    std::string phi_src;
    std::vector<std::string> f_repeated;
    std::array<std::string, kMaxInversionVariables> f_slot{};
    std::array<CLI::Option*, kMaxInversionVariables> f_slot_opt{};
    std::string vars_csv;
    std::string k_csv;
    std::string x_csv;
    double tol = kDefaultTolerance;
    std::string format = "text";
    std::string sabotage;
};

void attach_system_flags(CLI::App* cmd, ExprOptions& o, bool with_phi) {
    cmd->add_option("-n", o.n, "number of variables (1..8)")->required()->check(CLI::Range(1, kMaxInversionVariables));
    cmd->add_option("-N", o.order, "truncation order (total degree)")->required()->check(CLI::NonNegativeNumber);
    if (with_phi) cmd->add_option("--phi", o.phi_src, "weight series expression")->required();
    cmd->add_option("--f", o.f_repeated, "fixed-point expression, repeat once per variable")->type_size(1);
    for (int i = 0; i < kMaxInversionVariables; ++i) {
        std::string name = "--f" + std::to_string(i + 1);
        o.f_slot_opt[static_cast<size_t>(i)] =
            cmd->add_option(name, o.f_slot[static_cast<size_t>(i)], "fixed-point expression for one variable");
    }
    cmd->add_option("--vars", o.vars_csv, "comma-separated variable names replacing x1..xn");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

std::vector<std::string> resolve_names(const ExprOptions& o) {
    if (o.vars_csv.empty()) return {};
    std::vector<std::string> names = split_list(o.vars_csv);
    if (static_cast<int>(names.size()) != o.n) {
        throw std::invalid_argument("--vars: expected exactly " + std::to_string(o.n) + " names");
    }
    std::set<std::string> seen;
    for (const std::string& name : names) {
        if (name.empty()) throw std::invalid_argument("--vars: empty name");
        if (!seen.insert(name).second) throw std::invalid_argument("--vars: duplicate name \"" + name + "\"");
    }
    return names;
}

std::vector<std::string> collect_f(const ExprOptions& o) {
    bool any_slot = false;
    for (const CLI::Option* opt : o.f_slot_opt) {
        if (opt != nullptr && opt->count() > 0) any_slot = true;
    }
    if (!o.f_repeated.empty() && any_slot) {
        throw std::invalid_argument("give the system either as repeated --f or as --f1..--f8, not both");
    }
    if (!o.f_repeated.empty()) {
        if (static_cast<int>(o.f_repeated.size()) != o.n) {
            throw std::invalid_argument("--f: expected " + std::to_string(o.n) + " expressions, got " +
                                        std::to_string(o.f_repeated.size()));
        }
        return o.f_repeated;
    }
    std::vector<std::string> out;
    for (int i = 0; i < o.n; ++i) {
        if (o.f_slot_opt[static_cast<size_t>(i)]->count() == 0) {
            throw std::invalid_argument("missing --f" + std::to_string(i + 1));
        }
        out.push_back(o.f_slot[static_cast<size_t>(i)]);
    }
    for (int i = o.n; i < kMaxInversionVariables; ++i) {
        if (o.f_slot_opt[static_cast<size_t>(i)]->count() > 0) {
            throw std::invalid_argument("--f" + std::to_string(i + 1) + " given but -n is " + std::to_string(o.n));
        }
    }
    return out;
}

SeriesSystem build_system(const ExprOptions& o, const std::vector<std::string>& names, bool with_phi) {
    std::vector<Series> f;
    for (const std::string& src : collect_f(o)) f.push_back(parse_series(src, o.n, o.order, names));
    Series phi = with_phi ? parse_series(o.phi_src, o.n, o.order, names)
                          : Series(o.n, o.order);
    return SeriesSystem(std::move(phi), std::move(f));
}

// ---------------------------------------------------------------------------
// Output helpers. JSON keys follow the fixed report schema; text and CSV
// print the same rows.

std::string num_text(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string index_csv(const MultiIndex& k) {
    std::ostringstream os;
    for (int i = 0; i < k.size(); ++i) {
        if (i > 0) os << ' ';
        os << k[i];
    }
    return os.str();
}

ordered_json base_json(const std::string& command, int n, int order) {
    ordered_json j;
    j["n"] = n;
    j["order"] = order;
    j["command"] = command;
    return j;
}

ordered_json index_json(const MultiIndex& k) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < k.size(); ++i) arr.push_back(k[i]);
    return arr;
}

ordered_json term_rows_json(const Series& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, c] : s.terms()) {
        ordered_json row;
        row["k"] = index_json(k);
        row["c"] = c.str();
        arr.push_back(row);
    }
    return arr;
}

ordered_json mismatch_rows_json(const std::vector<Mismatch>& mismatches) {
    ordered_json arr = ordered_json::array();
    for (const Mismatch& m : mismatches) {
        ordered_json row;
        row["k"] = index_json(m.k);
        row["lhs"] = m.lhs.str();
        row["rhs"] = m.rhs.str();
        arr.push_back(row);
    }
    return arr;
}

ordered_json numeric_rows_json(const std::vector<PartialSumRow>& rows) {
    ordered_json arr = ordered_json::array();
    for (const PartialSumRow& r : rows) {
        ordered_json row;
        row["order"] = r.order;
        row["series_value"] = r.series_value;
        row["oracle_value"] = r.oracle_value;
        row["abs_error"] = r.abs_error;
        arr.push_back(row);
    }
    return arr;
}

void print_numeric_text(const std::vector<PartialSumRow>& rows) {
    std::cout << "order\tseries_value\toracle_value\tabs_error\n";
    for (const PartialSumRow& r : rows) {
        std::cout << r.order << '\t' << num_text(r.series_value) << '\t' << num_text(r.oracle_value) << '\t'
                  << num_text(r.abs_error) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Subcommands.

int run_solve(const ExprOptions& o) {
    std::vector<std::string> names = resolve_names(o);
    SeriesSystem sys = build_system(o, names, false);
    FixedPointSolution sol = solve_fixed_point(sys);

    if (o.format == "json") {
        for (const Series& g : sol.g) {
            ordered_json j = base_json("solve", o.n, o.order);
            j["series"] = term_rows_json(g);
            std::cout << j.dump() << '\n';
        }
    } else if (o.format == "csv") {
        std::cout << "series,k,c\n";
        for (size_t i = 0; i < sol.g.size(); ++i) {
            for (const auto& [k, c] : sol.g[i].terms()) {
                std::cout << 'g' << (i + 1) << ',' << index_csv(k) << ',' << c.str() << '\n';
            }
        }
    } else {
        std::span<const std::string> name_span = names;
        for (size_t i = 0; i < sol.g.size(); ++i) {
            std::cout << 'g' << (i + 1) << " = "
                      << (names.empty() ? to_text(sol.g[i]) : to_text(sol.g[i], name_span)) << '\n';
        }
    }
    return kExitSuccess;
}

int run_coeff(const ExprOptions& o) {
    std::vector<std::string> names = resolve_names(o);
    SeriesSystem sys = build_system(o, names, true);
    std::vector<int> k_values = parse_int_list(o.k_csv, "-k");
    if (static_cast<int>(k_values.size()) != o.n) {
        throw std::invalid_argument("-k: expected " + std::to_string(o.n) + " components");
    }
    MultiIndex k(k_values);

    Rational lhs = lhs_series(sys).coefficient(k);
    Rational rhs = rhs_coefficient(sys, k);
    if (o.sabotage == "rhs") rhs += Rational(1);
    bool equal = lhs == rhs;

    if (o.format == "json") {
        ordered_json j = base_json("coeff", o.n, o.order);
        j["checked"] = 1;
        std::vector<Mismatch> mismatches;
        if (!equal) mismatches.push_back({k, lhs, rhs});
        j["mismatches"] = mismatch_rows_json(mismatches);
        ordered_json row;
        row["k"] = index_json(k);
        row["c"] = lhs.str();
        j["series"] = ordered_json::array({row});
        std::cout << j.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "k,lhs,rhs\n" << index_csv(k) << ',' << lhs.str() << ',' << rhs.str() << '\n';
    } else {
        std::cout << "k = " << k.str() << '\n'
                  << "lhs = " << lhs.str() << '\n'
                  << "rhs = " << rhs.str() << '\n'
                  << (equal ? "match" : "MISMATCH") << '\n';
    }
    return equal ? kExitSuccess : kExitMismatch;
}

struct VerifyRows {
    long checked = 0;
    std::vector<Mismatch> mismatches;
    Series lhs;
    std::vector<Mismatch> table;  // one row per checked index, rhs filled in
};

VerifyRows verify_rows(const SeriesSystem& sys, bool sabotage) {
    VerifyRows out{0, {}, Series(sys.var_count(), sys.order()), {}};
    if (!sabotage) {
        VerificationReport report = verify_identity(sys);
        out.checked = report.checked;
        out.mismatches = report.mismatches;
        out.lhs = report.lhs;
        std::map<MultiIndex, Rational, GradedLexLess> rhs_at;
        for (const Mismatch& m : report.mismatches) rhs_at.emplace(m.k, m.rhs);
        for (const MultiIndex& k : multi_indices_up_to(sys.var_count(), sys.order())) {
            Rational lhs = out.lhs.coefficient(k);
            auto it = rhs_at.find(k);
            out.table.push_back({k, lhs, it == rhs_at.end() ? lhs : it->second});
        }
        return out;
    }
    // Test-only negative path: compare against a deliberately offset right side.
    out.lhs = lhs_series(sys);
    for (const MultiIndex& k : multi_indices_up_to(sys.var_count(), sys.order())) {
        Rational lhs = out.lhs.coefficient(k);
        Rational rhs = rhs_coefficient(sys, k) + Rational(1);
        ++out.checked;
        out.table.push_back({k, lhs, rhs});
        if (lhs != rhs) out.mismatches.push_back({k, lhs, rhs});
    }
    return out;
}

int run_verify(const ExprOptions& o) {
    std::vector<std::string> names = resolve_names(o);
    SeriesSystem sys = build_system(o, names, true);
    VerifyRows rows = verify_rows(sys, o.sabotage == "rhs");

    if (o.format == "json") {
        ordered_json j = base_json("verify", o.n, o.order);
        j["checked"] = rows.checked;
        j["mismatches"] = mismatch_rows_json(rows.mismatches);
        j["series"] = term_rows_json(rows.lhs);
        std::cout << j.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "k,lhs,rhs\n";
        for (const Mismatch& r : rows.table) {
            std::cout << index_csv(r.k) << ',' << r.lhs.str() << ',' << r.rhs.str() << '\n';
        }
    } else {
        std::cout << "k\tlhs\trhs\n";
        for (const Mismatch& r : rows.table) {
            std::cout << r.k.str() << '\t' << r.lhs.str() << '\t' << r.rhs.str() << '\n';
        }
        std::cout << "checked " << rows.checked << " coefficients through order " << o.order << ": "
                  << rows.mismatches.size() << " mismatches\n";
    }
    return rows.mismatches.empty() ? kExitSuccess : kExitMismatch;
}

int run_numeric(const ExprOptions& o) {
    std::vector<std::string> names = resolve_names(o);
    if (o.order < 1) throw std::invalid_argument("numeric-check needs -N >= 1");
    SeriesSystem sys = build_system(o, names, true);
    std::vector<double> x = parse_double_list(o.x_csv, "--x");
    if (static_cast<int>(x.size()) != o.n) {
        throw std::invalid_argument("--x: expected " + std::to_string(o.n) + " components");
    }
    if (o.tol <= 0) throw std::invalid_argument("--tol must be positive");
    std::vector<int> orders;
    for (int i = 1; i <= o.order; ++i) orders.push_back(i);
    std::vector<PartialSumRow> rows = compare_partial_sums(sys, x, orders, o.tol);

    if (o.format == "json") {
        ordered_json j = base_json("numeric-check", o.n, o.order);
        j["numeric"] = numeric_rows_json(rows);
        std::cout << j.dump() << '\n';
    } else if (o.format == "csv") {
        std::cout << "order,series_value,oracle_value,abs_error\n";
        for (const PartialSumRow& r : rows) {
            std::cout << r.order << ',' << num_text(r.series_value) << ',' << num_text(r.oracle_value) << ','
                      << num_text(r.abs_error) << '\n';
        }
    } else {
        print_numeric_text(rows);
    }
    return kExitSuccess;
}

// ---------------------------------------------------------------------------
// Demos: built-in instances with expected sequences from the fixtures above.

struct FixtureRow {
    std::string series;
    MultiIndex k;
    Rational expected;
    Rational computed;
};

struct DemoSetup {
    SeriesSystem sys;
    std::vector<std::string> display;  // "phi = ...", "f1 = ...", one per line
    std::vector<double> x;
    std::vector<int> orders;
};

DemoSetup demo_setup(const std::string& name) {
    if (name == "catalan") {
        int order = 10;
        SeriesSystem sys(parse_series("x1", 1, order), {parse_series("1/(1-x1)", 1, order)});
        return {std::move(sys), {"phi = x1", "f1 = 1/(1-x1)"}, {0.1}, {2, 4, 6, 8}};
    }
    if (name == "cayley") {
        int order = 8;
        SeriesSystem sys(parse_series("x1", 1, order), {exponential_series(order)});
        return {std::move(sys), {"phi = x1", "f1 = exp(x1) truncated to degree 8"}, {0.05}, {2, 4, 6, 8}};
    }
    int order = 6;
    SeriesSystem sys(parse_series("1", 2, order),
                     {parse_series("1+x2", 2, order), parse_series("1+x1", 2, order)});
    return {std::move(sys), {"phi = 1", "f1 = 1+x2", "f2 = 1+x1"}, {0.05, 0.05}, {2, 4, 6}};
}

std::vector<FixtureRow> demo_fixtures(const std::string& name, const std::vector<Series>& g) {
    std::vector<FixtureRow> rows;
    if (name == "catalan" || name == "cayley") {
        int order = g[0].order();
        std::vector<Rational> catalan = catalan_fixture(order);
        for (int k = 0; k <= order; ++k) {
            Rational expected(0);
            if (k >= 1) expected = name == "catalan" ? catalan[static_cast<size_t>(k - 1)] : cayley_fixture(k);
            MultiIndex idx(std::vector<int>{k});
            rows.push_back({"g1", idx, expected, g[0].coefficient(idx)});
        }
        return rows;
    }
    // g1 = x1 f1, g2 = x2 f2 with f1 = 1+u2, f2 = 1+u1: every coefficient is 1
    // on the ladder (j+1, j), (j+1, j+1) for g1 (mirrored for g2), 0 elsewhere.
    for (const MultiIndex& k : multi_indices_up_to(2, g[0].order())) {
        bool ladder1 = (k[0] == k[1] + 1) || (k[0] == k[1] && k[0] >= 1);
        bool ladder2 = (k[1] == k[0] + 1) || (k[0] == k[1] && k[0] >= 1);
        rows.push_back({"g1", k, Rational(ladder1 ? 1 : 0), g[0].coefficient(k)});
        rows.push_back({"g2", k, Rational(ladder2 ? 1 : 0), g[1].coefficient(k)});
    }
    return rows;
}

int run_demo(const std::string& name, const std::string& format) {
    DemoSetup setup = demo_setup(name);
    const SeriesSystem& sys = setup.sys;
    FixedPointSolution sol = solve_fixed_point(sys);
    std::vector<FixtureRow> fixtures = demo_fixtures(name, sol.g);
    VerificationReport report = verify_identity(sys);
    std::vector<PartialSumRow> numeric = compare_partial_sums(sys, setup.x, setup.orders);

    long fixture_mismatches = 0;
    for (const FixtureRow& r : fixtures) {
        if (r.expected != r.computed) ++fixture_mismatches;
    }
    long checked = report.checked + static_cast<long>(fixtures.size());
    bool ok = fixture_mismatches == 0 && report.mismatches.empty();

    if (format == "json") {
        ordered_json j = base_json("demo " + name, sys.var_count(), sys.order());
        j["checked"] = checked;
        std::vector<Mismatch> all = report.mismatches;
        for (const FixtureRow& r : fixtures) {
            if (r.expected != r.computed) all.push_back({r.k, r.computed, r.expected});
        }
        j["mismatches"] = mismatch_rows_json(all);
        j["series"] = term_rows_json(report.lhs);
        j["numeric"] = numeric_rows_json(numeric);
        std::cout << j.dump() << '\n';
    } else if (format == "csv") {
        std::cout << "series,k,expected,computed\n";
        for (const FixtureRow& r : fixtures) {
            std::cout << r.series << ',' << index_csv(r.k) << ',' << r.expected.str() << ',' << r.computed.str()
                      << '\n';
        }
    } else {
        std::cout << "demo " << name << ": n = " << sys.var_count() << ", order = " << sys.order() << '\n';
        for (const std::string& line : setup.display) std::cout << line << '\n';
        std::cout << "series\tk\texpected\tcomputed\n";
        for (const FixtureRow& r : fixtures) {
            if (r.expected.is_zero() && r.expected == r.computed) continue;
            std::cout << r.series << '\t' << r.k.str() << '\t' << r.expected.str() << '\t' << r.computed.str()
                      << '\n';
        }
        std::cout << "fixtures: " << fixtures.size() << " checked, " << fixture_mismatches << " mismatches\n";
        std::cout << "identity: " << report.checked << " coefficients checked, " << report.mismatches.size()
                  << " mismatches\n";
        for (const Mismatch& m : report.mismatches) {
            std::cout << m.k.str() << '\t' << m.lhs.str() << '\t' << m.rhs.str() << '\n';
        }
        print_numeric_text(numeric);
    }
    return ok ? kExitSuccess : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Lagrange-Good inversion: solve g_i = x_i f_i(g), compare both sides of the "
                 "coefficient identity, and cross-check against a floating-point oracle."};
    app.require_subcommand(1);

    ExprOptions solve_opts;
    CLI::App* solve_cmd = app.add_subcommand("solve", "print the fixed-point solution g to order N");
    attach_system_flags(solve_cmd, solve_opts, false);

    ExprOptions coeff_opts;
    CLI::App* coeff_cmd = app.add_subcommand("coeff", "print one coefficient of both sides of the identity");
    attach_system_flags(coeff_cmd, coeff_opts, true);
    coeff_cmd->add_option("-k", coeff_opts.k_csv, "multi-index, comma-separated")->required();
    coeff_cmd->add_option("--sabotage", coeff_opts.sabotage)->check(CLI::IsMember({"rhs"}))->group("");

    ExprOptions verify_opts;
    CLI::App* verify_cmd = app.add_subcommand("verify", "compare every coefficient through order N");
    attach_system_flags(verify_cmd, verify_opts, true);
    verify_cmd->add_option("--sabotage", verify_opts.sabotage)->check(CLI::IsMember({"rhs"}))->group("");

    ExprOptions numeric_opts;
    CLI::App* numeric_cmd =
        app.add_subcommand("numeric-check", "compare series partial sums against the contraction oracle");
    attach_system_flags(numeric_cmd, numeric_opts, true);
    numeric_cmd->add_option("--x", numeric_opts.x_csv, "evaluation point, comma-separated")->required();
    numeric_cmd->add_option("--tol", numeric_opts.tol, "fixed-point residual tolerance");

    std::string demo_name;
    std::string demo_format = "text";
    CLI::App* demo_cmd = app.add_subcommand("demo", "run a built-in instance against its expected sequence");
    demo_cmd->add_option("name", demo_name, "catalan | cayley | bivariate-pair")
        ->required()
        ->check(CLI::IsMember({"catalan", "cayley", "bivariate-pair"}));
    demo_cmd->add_option("--format", demo_format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return run_solve(solve_opts);
        if (coeff_cmd->parsed()) return run_coeff(coeff_opts);
        if (verify_cmd->parsed()) return run_verify(verify_opts);
        if (numeric_cmd->parsed()) return run_numeric(numeric_opts);
        if (demo_cmd->parsed()) return run_demo(demo_name, demo_format);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const convergence_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
