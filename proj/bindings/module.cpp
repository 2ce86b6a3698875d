#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "lagood/analytic.hpp"
#include "lagood/errors.hpp"
#include "lagood/format.hpp"
#include "lagood/inversion.hpp"
#include "lagood/multi_index.hpp"
#include "lagood/parse.hpp"
#include "lagood/series.hpp"

namespace py = pybind11;
using namespace lagood;

namespace {

// Exact coefficients cross the boundary as fractions.Fraction, never floats.
py::object fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.str());
}

Rational rational_from(py::handle value) {
    return Rational::from_string(py::str(value).cast<std::string>());
}

py::tuple index_tuple(const MultiIndex& k) {
    py::list out;
    for (int i = 0; i < k.size(); ++i) out.append(k[i]);
    return py::tuple(out);
}

std::string series_text(const Series& s, const std::vector<std::string>& names) {
    return names.empty() ? to_text(s) : to_text(s, names);
}

std::vector<PolyFunction> poly_functions(const std::vector<Series>& f) {
    std::vector<PolyFunction> out;
    out.reserve(f.size());
    for (const Series& s : f) out.emplace_back(s);
    return out;
}

SeriesSystem make_system(const Series& phi, const std::vector<Series>& f) {
    return SeriesSystem(phi, f);
}

py::dict contraction_dict(const ContractionResult& r) {
    py::dict d;
    d["x"] = r.x;
    d["g"] = r.g;
    d["iterations"] = r.iterations;
    d["lipschitz_estimate"] = r.lipschitz_estimate;
    d["residual"] = r.residual;
    d["converged"] = r.converged;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact truncated multivariate power series and Lagrange-Good inversion";

    py::register_exception<truncation_error>(m, "TruncationError");
    py::register_exception<not_invertible_error>(m, "NotInvertibleError");
    py::register_exception<convergence_error>(m, "ConvergenceError");
    py::register_exception<parse_error>(m, "ParseError");

    m.attr("MAX_VARIABLES") = kMaxInversionVariables;
    m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
    m.attr("DEFAULT_MAX_ITERATIONS") = kDefaultMaxIterations;

    py::class_<Series>(m, "Series")
        .def_static(
            "zero", [](int var_count, int order) { return Series(var_count, order); },
            py::arg("var_count"), py::arg("order"))
        .def_static(
            "constant",
            [](py::handle c, int var_count, int order) {
                return Series::constant(rational_from(c), var_count, order);
            },
            py::arg("c"), py::arg("var_count"), py::arg("order"))
        .def_static(
            "variable", [](int i, int var_count, int order) { return Series::variable(i, var_count, order); },
            py::arg("i"), py::arg("var_count"), py::arg("order"))
        .def_static(
            "from_terms",
            [](int var_count, int order, const std::vector<std::pair<std::vector<int>, py::handle>>& terms) {
                std::vector<std::pair<MultiIndex, Rational>> converted;
                converted.reserve(terms.size());
                for (const auto& [k, c] : terms) converted.emplace_back(MultiIndex(k), rational_from(c));
                return Series::from_terms(var_count, order, converted);
            },
            py::arg("var_count"), py::arg("order"), py::arg("terms"))
        .def_property_readonly("var_count", &Series::var_count)
        .def_property_readonly("order", &Series::order)
        .def("coefficient",
             [](const Series& s, const std::vector<int>& k) { return fraction(s.coefficient(MultiIndex(k))); },
             py::arg("k"))
        .def("terms",
             [](const Series& s) {
                 py::dict d;
                 for (const auto& [k, c] : s.terms()) d[index_tuple(k)] = fraction(c);
                 return d;
             })
        .def("is_zero", &Series::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def("__mul__", [](const Series& s, py::handle c) { return s * rational_from(c); })
        .def("__rmul__", [](const Series& s, py::handle c) { return s * rational_from(c); })
        .def("__pow__", [](const Series& s, long e) { return s.pow(e); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("derivative", &Series::derivative, py::arg("j"))
        .def("compose",
             [](const Series& s, const std::vector<Series>& inner) { return s.compose(inner); },
             py::arg("inner"))
        .def("reciprocal", &Series::reciprocal)
        .def("truncated", &Series::truncated, py::arg("order"))
        .def("lifted", &Series::lifted, py::arg("order"))
        .def("text",
             [](const Series& s, const std::vector<std::string>& names) { return series_text(s, names); },
             py::arg("names") = std::vector<std::string>{})
        .def("__str__", [](const Series& s) { return to_text(s); })
        .def("__repr__", [](const Series& s) {
            return "Series(\"" + to_text(s) + "\", var_count=" + std::to_string(s.var_count()) +
                   ", order=" + std::to_string(s.order()) + ")";
        });

    m.def(
        "parse",
        [](const std::string& src, int var_count, int order, const std::vector<std::string>& names) {
            return parse_series(src, var_count, order, names);
        },
        py::arg("src"), py::arg("var_count"), py::arg("order"),
        py::arg("names") = std::vector<std::string>{});

    m.def("text", &series_text, py::arg("series"), py::arg("names") = std::vector<std::string>{});

    m.def(
        "solve",
        [](const std::vector<Series>& f) {
            if (f.empty()) throw std::invalid_argument("f must be non-empty");
            SeriesSystem sys(Series(f[0].var_count(), f[0].order()), f);
            return solve_fixed_point(sys).g;
        },
        py::arg("f"), "Solve g_i = x_i f_i(g) by Picard iteration; returns [g_1, ..., g_n].");

    m.def(
        "lhs_series",
        [](const Series& phi, const std::vector<Series>& f) { return lhs_series(make_system(phi, f)); },
        py::arg("phi"), py::arg("f"), "phi(g) / det(delta_ij - x_i d_j f_i(g)) as a series.");

    m.def(
        "rhs_coefficient",
        [](const Series& phi, const std::vector<Series>& f, const std::vector<int>& k) {
            return fraction(rhs_coefficient(make_system(phi, f), MultiIndex(k)));
        },
        py::arg("phi"), py::arg("f"), py::arg("k"), "[x^k] phi * f_1^{k_1} * ... * f_n^{k_n}.");

    m.def(
        "verify",
        [](const Series& phi, const std::vector<Series>& f) {
            VerificationReport r = verify_identity(make_system(phi, f));
            py::dict d;
            d["var_count"] = r.var_count;
            d["order"] = r.order;
            d["checked"] = r.checked;
            py::list mismatches;
            for (const Mismatch& mm : r.mismatches) {
                py::dict row;
                row["k"] = index_tuple(mm.k);
                row["lhs"] = fraction(mm.lhs);
                row["rhs"] = fraction(mm.rhs);
                mismatches.append(row);
            }
            d["mismatches"] = mismatches;
            d["lhs"] = r.lhs;
            d["ok"] = r.ok();
            return d;
        },
        py::arg("phi"), py::arg("f"), "Compare both sides of the identity at every index with |k| <= order.");

    m.def(
        "classic_lagrange_check",
        [](const Series& f, const Series& phi, int k) {
            ClassicLagrangePair pair = classic_lagrange_check(f, phi, k);
            return py::make_tuple(fraction(pair.via_fixed_point), fraction(pair.via_derivative));
        },
        py::arg("f"), py::arg("phi"), py::arg("k"),
        "One-variable cross-check: ([u^k] phi(g), (1/k)[u^(k-1)] phi' f^k).");

    m.def("plain_coefficient_weight", &plain_coefficient_weight, py::arg("f"), py::arg("phi"));

    m.def(
        "numeric_fixed_point",
        [](const std::vector<Series>& f, const std::vector<double>& x, double tol, int max_iter) {
            return contraction_dict(numeric_fixed_point(poly_functions(f), x, tol, max_iter));
        },
        py::arg("f"), py::arg("x"), py::arg("tol") = kDefaultTolerance,
        py::arg("max_iter") = kDefaultMaxIterations);

    m.def(
        "numeric_lhs",
        [](const std::vector<Series>& f, const Series& phi, const std::vector<double>& x, double tol,
           int max_iter) { return numeric_lhs(poly_functions(f), PolyFunction(phi), x, tol, max_iter); },
        py::arg("f"), py::arg("phi"), py::arg("x"), py::arg("tol") = kDefaultTolerance,
        py::arg("max_iter") = kDefaultMaxIterations);

    m.def(
        "compare_partial_sums",
        [](const Series& phi, const std::vector<Series>& f, const std::vector<double>& x,
           const std::vector<int>& orders, double tol, int max_iter) {
            py::list out;
            for (const PartialSumRow& r : compare_partial_sums(make_system(phi, f), x, orders, tol, max_iter)) {
                py::dict row;
                row["order"] = r.order;
                row["series_value"] = r.series_value;
                row["oracle_value"] = r.oracle_value;
                row["abs_error"] = r.abs_error;
                out.append(row);
            }
            return out;
        },
        py::arg("phi"), py::arg("f"), py::arg("x"), py::arg("orders"), py::arg("tol") = kDefaultTolerance,
        py::arg("max_iter") = kDefaultMaxIterations);

    m.def(
        "find_epsilon",
        [](const std::vector<Series>& f, double start, double shrink) {
            return find_epsilon(poly_functions(f), start, shrink);
        },
        py::arg("f"), py::arg("start") = 0.5, py::arg("shrink") = kDefaultShrink);
}
