// Acceptance gate: one printed line per criterion, nonzero exit when any
// criterion fails. Fixture values come from the independent oracles, never
// from the code paths under check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lagood/analytic.hpp"
#include "lagood/errors.hpp"
#include "lagood/format.hpp"
#include "lagood/inversion.hpp"
#include "lagood/multi_index.hpp"
#include "lagood/parse.hpp"
#include "lagood/series.hpp"

#include "oracles.hpp"

#ifdef LAGOOD_CLI_PATH
#include <sys/wait.h>

#include "json.hpp"
#endif

using namespace lagood;
using namespace lagood::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(3) << v;
    return os.str();
}

// Criterion 1: zero mismatches on 200 random systems spanning n in {1,2,3},
// polynomial degrees <= 3, coefficient numerators/denominators in [-5,5],
// N in {4..8}; exact equality, under 60 seconds.
Outcome random_system_identity() {
    auto t0 = Clock::now();
    std::mt19937 rng(920031);
    const int systems = 200;
    long checked = 0;
    long mismatched = 0;
    for (int rep = 0; rep < systems; ++rep) {
        int n = 1 + rep % 3;
        int order = 4 + rep % 5;
        std::vector<Series> f;
        for (int i = 0; i < n; ++i) f.push_back(random_polynomial(rng, n, 3, order, 0.7));
        Series phi = random_polynomial(rng, n, 3, order, 0.7);
        VerificationReport report = verify_identity(SeriesSystem(phi, f));
        checked += report.checked;
        mismatched += static_cast<long>(report.mismatches.size());
    }
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << systems << " systems (n in {1,2,3}, N in {4..8}, degree <= 3), " << checked
           << " coefficients compared exactly, " << mismatched << " mismatches, " << fmt(elapsed) << "s";
    return {mismatched == 0 && elapsed < 60.0, detail.str()};
}

// Criterion 2: Catalan fixture. With phi = u and f = 1/(1-u), [x^k] phi(g)
// and the derivative form both equal C_{k-1} from the convolution recurrence
// for k = 1..10, and the determinant-form identity holds at N = 10.
Outcome catalan_fixture() {
    const int order = 10;
    Series f = geometric_series(order);
    Series phi = Series::variable(0, 1, order);
    std::vector<Rational> catalan = catalan_numbers(order);
    int wrong = 0;
    for (int k = 1; k <= order; ++k) {
        ClassicLagrangePair pair = classic_lagrange_check(f, phi, k);
        const Rational& expected = catalan[static_cast<size_t>(k - 1)];
        if (pair.via_fixed_point != expected || pair.via_derivative != expected) ++wrong;
    }
    VerificationReport report = verify_identity(SeriesSystem(phi, {f}));
    std::ostringstream detail;
    detail << "both classical forms equal C_(k-1) for k = 1..10 (" << wrong << " wrong), identity clean over "
           << report.checked << " coefficients (" << report.mismatches.size() << " mismatches)";
    return {wrong == 0 && report.mismatches.empty(), detail.str()};
}

// Criterion 3: Cayley fixture. phi = u, f = e^u truncated to degree 10,
// both classical forms equal k^(k-1)/k! for k = 1..8; identity at N = 8.
Outcome cayley_fixture() {
    Series f = exponential_series(10);
    Series phi = Series::variable(0, 1, 10);
    int wrong = 0;
    for (int k = 1; k <= 8; ++k) {
        ClassicLagrangePair pair = classic_lagrange_check(f, phi, k);
        Rational expected = cayley_coefficient(k);
        if (pair.via_fixed_point != expected || pair.via_derivative != expected) ++wrong;
    }
    VerificationReport report = verify_identity(SeriesSystem(phi.truncated(8), {f.truncated(8)}));
    std::ostringstream detail;
    detail << "both classical forms equal k^(k-1)/k! for k = 1..8 (" << wrong << " wrong), identity clean over "
           << report.checked << " coefficients (" << report.mismatches.size() << " mismatches)";
    return {wrong == 0 && report.mismatches.empty(), detail.str()};
}

// Criterion 4: classical-form coherence on 50 random one-variable systems
// with f(0) != 0 and phi(0) = 0: the two classical outputs agree with each
// other and with the determinant-form coefficient taken through the
// plain-coefficient weight.
Outcome classical_coherence() {
    std::mt19937 rng(471102);
    const int systems = 50;
    int wrong = 0;
    for (int rep = 0; rep < systems; ++rep) {
        int order = 4 + rep % 5;
        Series f = random_polynomial(rng, 1, 3, order, 0.8);
        if (f.constant_term().is_zero()) f = f + Series::constant(Rational(1 + rep % 5), 1, order);
        Series phi = random_polynomial(rng, 1, 3, order, 0.8);
        phi = phi - Series::constant(phi.constant_term(), 1, order);
        if (phi.is_zero()) phi = Series::variable(0, 1, order);
        int k = 1 + rep % order;

        ClassicLagrangePair pair = classic_lagrange_check(f, phi, k);
        Series bridged = lhs_series(SeriesSystem(plain_coefficient_weight(f, phi), {f}));
        Rational good_form = bridged.coefficient(MultiIndex(std::vector<int>{k}));
        if (pair.via_fixed_point != pair.via_derivative || pair.via_fixed_point != good_form) ++wrong;
    }
    std::ostringstream detail;
    detail << systems << " random systems, both outputs and the weighted determinant form compared exactly, "
           << wrong << " disagreements";
    return {wrong == 0, detail.str()};
}

struct OracleRun {
    std::string label;
    bool monotone = true;
    double final_error = 0;
    double slope = 0;
    double slope_bound = 0;

    bool pass() const { return monotone && final_error <= 1e-6 && slope <= slope_bound; }
};

OracleRun run_oracle(const std::string& label, const SeriesSystem& sys, const std::vector<double>& x,
                     const std::vector<int>& orders) {
    OracleRun out;
    out.label = label;
    std::vector<PartialSumRow> rows = compare_partial_sums(sys, x, orders);
    double x_norm = 0;
    for (double xi : x) x_norm = std::max(x_norm, std::fabs(xi));
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].abs_error > rows[i - 1].abs_error + 1e-10) out.monotone = false;
    }
    out.final_error = rows.back().abs_error;
    double sn = 0, sy = 0, snn = 0, sny = 0;
    for (const PartialSumRow& r : rows) {
        double y = std::log10(std::max(r.abs_error, 1e-300));
        sn += r.order;
        sy += y;
        snn += static_cast<double>(r.order) * r.order;
        sny += r.order * y;
    }
    double count = static_cast<double>(rows.size());
    out.slope = (count * sny - sn * sy) / (count * snn - sn * sn);
    out.slope_bound = std::log10(x_norm) + 0.5;
    return out;
}

void describe(std::ostream& os, const OracleRun& r) {
    os << r.label << ": " << (r.monotone ? "monotone" : "NOT monotone") << ", final " << fmt(r.final_error)
       << (r.final_error <= 1e-6 ? " <= " : " > ") << "1e-06, slope " << fmt(r.slope)
       << (r.slope <= r.slope_bound ? " <= " : " > ") << "bound " << fmt(r.slope_bound);
}

// Criterion 5: analytic oracle agreement for the Catalan system at x = 0.1
// and the bivariate pair at (0.05, 0.05), orders (2,4,6,8): errors
// non-increasing (1e-10 slack), final error <= 1e-6, fitted log10-error
// slope <= log10(|x|_inf) + 0.5.
Outcome analytic_agreement() {
    std::vector<int> orders = {2, 4, 6, 8};

    SeriesSystem catalan(Series::constant(Rational(1), 1, 12), {geometric_series(12)});
    OracleRun first = run_oracle("catalan@0.1", catalan, {0.1}, orders);

    SeriesSystem pair(parse_series("1", 2, 8), {parse_series("1+x2", 2, 8), parse_series("1+x1", 2, 8)});
    OracleRun second = run_oracle("bivariate@(0.05,0.05)", pair, {0.05, 0.05}, orders);

    std::ostringstream detail;
    describe(detail, first);
    detail << "; ";
    describe(detail, second);
    return {first.pass() && second.pass(), detail.str()};
}

// Criterion 6: algebra law suite, each law over >= 100 random instances.
Outcome algebra_laws() {
    auto t0 = Clock::now();
    std::mt19937 rng(600321);
    long failures = 0;
    const int instances = 100;
    for (int rep = 0; rep < instances; ++rep) {
        int n = 1 + rep % 3;
        int order = 3 + rep % 3;
        Series a = random_series(rng, n, order);
        Series b = random_series(rng, n, order);
        Series c = random_series(rng, n, order);

        // ring laws
        if (!(a + b == b + a)) ++failures;
        if (!(a * b == b * a)) ++failures;
        if (!((a + b) + c == a + (b + c))) ++failures;
        if (!((a * b) * c == a * (b * c))) ++failures;
        if (!(a * (b + c) == a * b + a * c)) ++failures;

        // truncation homomorphism
        int lower = rep % (order + 1);
        if (!((a * b).truncated(lower) == a.truncated(lower) * b.truncated(lower))) ++failures;
        if (!((a + b).truncated(lower) == a.truncated(lower) + b.truncated(lower))) ++failures;

        // reciprocal round-trip
        Series unit = a;
        if (unit.constant_term().is_zero()) {
            unit = unit + Series::constant(random_rational(rng) + Rational(7), n, order);
        }
        Series inv = unit.reciprocal();
        if (!(unit * inv == Series::constant(Rational(1), n, order))) ++failures;
        if (!(inv.reciprocal() == unit)) ++failures;

        // product rule
        int j = rep % n;
        if (!((a * b).derivative(j) == a.derivative(j) * b + a * b.derivative(j))) ++failures;

        // chain rule
        std::vector<Series> g;
        for (int i = 0; i < n; ++i) {
            Series gi = random_series(rng, n, order);
            gi = gi - Series::constant(gi.constant_term(), n, order);
            g.push_back(gi);
        }
        Series left = a.compose(g).derivative(j);
        std::vector<Series> g_low;
        for (const Series& gi : g) g_low.push_back(gi.truncated(order - 1));
        Series right(n, order - 1);
        for (int i = 0; i < n; ++i) {
            right = right + a.derivative(i).compose(g_low) * g[static_cast<size_t>(i)].derivative(j);
        }
        if (!(left == right)) ++failures;

        // Leibniz determinant oracle, alternating 2x2 and 3x3
        int dim = 2 + rep % 2;
        std::vector<Series> entries;
        for (int e = 0; e < dim * dim; ++e) entries.push_back(random_series(rng, 2, 3));
        SeriesMatrix matrix(dim, std::move(entries));
        if (!(determinant(matrix) == leibniz_determinant(matrix))) ++failures;
    }
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "ring laws, truncation homomorphism, reciprocal round-trip, product rule, chain rule, "
           << "Leibniz determinant: " << instances << " instances each, " << failures << " failures, "
           << fmt(elapsed) << "s";
    return {failures == 0, detail.str()};
}

#ifdef LAGOOD_CLI_PATH

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string command = std::string(LAGOOD_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string output;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    if (!WIFEXITED(status)) return {-1, output};
    return {WEXITSTATUS(status), output};
}

bool schema_ok(const nlohmann::json& j, std::string& why) {
    if (!j.is_object()) {
        why = "not an object";
        return false;
    }
    for (const char* key : {"n", "order", "command"}) {
        if (!j.contains(key)) {
            why = std::string("missing key ") + key;
            return false;
        }
    }
    if (!j.at("n").is_number_integer() || !j.at("order").is_number_integer() || !j.at("command").is_string()) {
        why = "wrong type for n/order/command";
        return false;
    }
    static const std::vector<std::string> allowed = {"n",          "order",  "command", "checked",
                                                     "mismatches", "series", "numeric"};
    for (const auto& item : j.items()) {
        bool known = false;
        for (const std::string& name : allowed) known = known || item.key() == name;
        if (!known) {
            why = "unexpected key " + item.key();
            return false;
        }
    }
    if (j.contains("mismatches")) {
        for (const nlohmann::json& row : j.at("mismatches")) {
            if (!row.at("k").is_array() || !row.at("lhs").is_string() || !row.at("rhs").is_string()) {
                why = "malformed mismatch row";
                return false;
            }
        }
    }
    if (j.contains("series")) {
        for (const nlohmann::json& row : j.at("series")) {
            if (!row.at("k").is_array() || !row.at("c").is_string()) {
                why = "malformed series row";
                return false;
            }
        }
    }
    if (j.contains("numeric")) {
        for (const nlohmann::json& row : j.at("numeric")) {
            if (!row.at("order").is_number_integer() || !row.at("series_value").is_number() ||
                !row.at("oracle_value").is_number() || !row.at("abs_error").is_number()) {
                why = "malformed numeric row";
                return false;
            }
        }
    }
    return true;
}

#endif  // LAGOOD_CLI_PATH

// Criterion 7: CLI contract. Canonical-text round-trip on 100 random series,
// JSON schema on every demo output, and the documented exit codes on the
// success, sabotage, parse-error, and non-convergence paths.
Outcome cli_contract() {
    std::mt19937 rng(710001);
    int round_trip_failures = 0;
    std::vector<std::string> names = {"alpha", "beta", "gamma"};
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + rep % 3;
        int order = 1 + rep % 5;
        Series s = random_series(rng, n, order);
        if (rep % 4 == 0) {
            std::vector<std::string> local(names.begin(), names.begin() + n);
            if (!(parse_series(to_text(s, local), n, order, local) == s)) ++round_trip_failures;
        } else {
            if (!(parse_series(to_text(s), n, order) == s)) ++round_trip_failures;
        }
    }

#ifndef LAGOOD_CLI_PATH
    std::ostringstream detail;
    detail << "round-trip failures: " << round_trip_failures << "; CLI binary not built, demo/exit checks skipped";
    return {false, detail.str()};
#else
    int schema_failures = 0;
    std::string why;
    for (const std::string demo : {"catalan", "cayley", "bivariate-pair"}) {
        for (const std::string format : {"json", "text", "csv"}) {
            CliResult r = run_cli("demo " + demo + " --format " + format);
            if (r.exit_code != 0) ++schema_failures;
            if (format != "json") continue;
            try {
                if (!schema_ok(nlohmann::json::parse(r.output), why)) ++schema_failures;
            } catch (const std::exception&) {
                ++schema_failures;
            }
        }
    }

    int exit_failures = 0;
    if (run_cli("verify -n 1 -N 6 --phi \"x1\" --f \"1/(1-x1)\"").exit_code != 0) ++exit_failures;
    if (run_cli("verify -n 1 -N 4 --phi \"1\" --f \"1/(1-x1)\" --sabotage rhs").exit_code != 1) ++exit_failures;
    if (run_cli("verify -n 1 -N 4 --phi \"1\" --f \"1/(1-x\"").exit_code != 2) ++exit_failures;
    if (run_cli("numeric-check -n 1 -N 4 --phi \"1\" --f \"1/(1-x1)\" --x 0.9").exit_code != 3) ++exit_failures;

    std::ostringstream detail;
    detail << "100 expression round-trips (" << round_trip_failures << " failures), demo schema checks ("
           << schema_failures << " failures), exit codes 0/1/2/3 (" << exit_failures << " failures)";
    return {round_trip_failures == 0 && schema_failures == 0 && exit_failures == 0, detail.str()};
#endif
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"random-system identity", random_system_identity},
        {"Catalan fixture", catalan_fixture},
        {"Cayley fixture", cayley_fixture},
        {"classical-form coherence", classical_coherence},
        {"analytic oracle agreement", analytic_agreement},
        {"algebra law suite", algebra_laws},
        {"CLI contract", cli_contract},
    };

    int failed = 0;
    int index = 0;
    for (const Entry& entry : entries) {
        ++index;
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("unexpected exception: ") + e.what()};
        }
        if (!outcome.pass) ++failed;
        std::cout << "criterion " << index << " [" << (outcome.pass ? "PASS" : "FAIL") << "] " << entry.name
                  << ": " << outcome.detail << '\n';
    }
    std::cout << (7 - failed) << "/7 criteria pass\n";
    return failed == 0 ? 0 : 1;
}
