#include "lagood/analytic.hpp"

#include <cmath>
#include <string>

namespace lagood {

double evaluate_series(const Series& s, std::span<const double> u) {
    if (static_cast<int>(u.size()) != s.var_count()) {
        throw std::invalid_argument("evaluation point has wrong arity");
    }
    double acc = 0.0;
    for (const auto& [k, c] : s.terms()) {
        double mono = 1.0;
        for (int i = 0; i < k.size(); ++i) {
            for (int e = 0; e < k[i]; ++e) mono *= u[static_cast<size_t>(i)];
        }
        acc += c.to_double() * mono;
    }
    return acc;
}

PolyFunction::PolyFunction(Series s) : poly_(std::move(s)) {
    gradient_.reserve(static_cast<size_t>(poly_.var_count()));
    for (int j = 0; j < poly_.var_count(); ++j) {
        // An order-0 polynomial is constant; its gradient is identically zero.
        gradient_.push_back(poly_.order() >= 1 ? poly_.derivative(j)
                                               : Series(poly_.var_count(), 0));
    }
}

double PolyFunction::operator()(std::span<const double> u) const {
    return evaluate_series(poly_, u);
}

double PolyFunction::partial(int j, std::span<const double> u) const {
    if (j < 0 || j >= poly_.var_count()) throw std::out_of_range("partial index out of range");
    return evaluate_series(gradient_[static_cast<size_t>(j)], u);
}

namespace {

void check_system(std::span<const PolyFunction> f, std::span<const double> x) {
    if (f.empty()) throw std::invalid_argument("need at least one component function");
    if (f.size() != x.size()) throw std::invalid_argument("x must have one entry per component");
    for (const PolyFunction& fi : f) {
        if (fi.var_count() != static_cast<int>(f.size())) {
            throw std::invalid_argument("component arity must match the system size");
        }
    }
}

// In-place LU determinant with partial pivoting; row-major a is destroyed.
double lu_determinant(std::vector<double>& a, int n) {
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r) {
            if (std::fabs(a[static_cast<size_t>(r) * n + col]) >
                std::fabs(a[static_cast<size_t>(pivot) * n + col])) {
                pivot = r;
            }
        }
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a[static_cast<size_t>(col) * n + c], a[static_cast<size_t>(pivot) * n + c]);
            }
            det = -det;
        }
        double d = a[static_cast<size_t>(col) * n + col];
        if (d == 0.0) return 0.0;
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            double m = a[static_cast<size_t>(r) * n + col] / d;
            for (int c = col; c < n; ++c) {
                a[static_cast<size_t>(r) * n + c] -= m * a[static_cast<size_t>(col) * n + c];
            }
        }
    }
    return det;
}

}  // namespace

ContractionResult numeric_fixed_point(std::span<const PolyFunction> f,
                                      std::span<const double> x, double tol, int max_iter) {
    check_system(f, x);
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");

    size_t n = f.size();
    std::vector<double> u(n, 0.0), v(n, 0.0);
    double prev_diff = 0.0;
    double diff = 0.0;
    double lipschitz = 0.0;

    for (int t = 1; t <= max_iter; ++t) {
        bool finite = true;
        for (size_t i = 0; i < n; ++i) {
            v[i] = x[i] * f[i](u);
            if (!std::isfinite(v[i])) finite = false;
        }
        prev_diff = diff;
        diff = 0.0;
        for (size_t i = 0; i < n; ++i) diff = std::max(diff, std::fabs(v[i] - u[i]));
        if (!finite) {
            return ContractionResult{std::vector<double>(x.begin(), x.end()), u, t,
                                     lipschitz, diff, false};
        }
        if (t >= 2 && prev_diff > 0.0) lipschitz = std::max(lipschitz, diff / prev_diff);
        if (diff <= tol) {
            // v = diag(x) f(u), so diff is exactly the residual norm at u.
            return ContractionResult{std::vector<double>(x.begin(), x.end()), u, t,
                                     lipschitz, diff, true};
        }
        std::swap(u, v);
    }
    return ContractionResult{std::vector<double>(x.begin(), x.end()), u, max_iter,
                             lipschitz, diff, false};
}

double numeric_lhs(std::span<const PolyFunction> f, const PolyFunction& phi,
                   std::span<const double> x, double tol, int max_iter) {
    check_system(f, x);
    if (phi.var_count() != static_cast<int>(f.size())) {
        throw std::invalid_argument("phi arity must match the system size");
    }
    ContractionResult fp = numeric_fixed_point(f, x, tol, max_iter);
    if (!fp.converged) {
        throw convergence_error("fixed point did not converge; x is outside the contraction ball");
    }

    int n = static_cast<int>(f.size());
    std::vector<double> m(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double d = (i == j) ? 1.0 : 0.0;
            m[static_cast<size_t>(i) * n + j] =
                d - x[static_cast<size_t>(i)] * f[static_cast<size_t>(i)].partial(j, fp.g);
        }
    }
    double det = lu_determinant(m, n);
    if (std::fabs(det) < kSingularDeterminantFloor) {
        throw convergence_error("Jacobian determinant is numerically singular at this x");
    }
    return phi(fp.g) / det;
}

std::vector<PartialSumRow> compare_partial_sums(const SeriesSystem& sys,
                                                std::span<const double> x,
                                                std::span<const int> orders,
                                                double tol, int max_iter) {
    if (static_cast<int>(x.size()) != sys.var_count()) {
        throw std::invalid_argument("x must have one entry per variable");
    }
    if (orders.empty()) throw std::invalid_argument("need at least one order");
    for (size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0 || orders[i] > sys.order()) {
            throw std::invalid_argument("orders must lie within the system's order");
        }
        if (i > 0 && orders[i] <= orders[i - 1]) {
            throw std::invalid_argument("orders must be strictly increasing");
        }
    }

    std::vector<PolyFunction> f;
    f.reserve(sys.f.size());
    for (const Series& fi : sys.f) f.push_back(PolyFunction(fi));
    PolyFunction phi(sys.phi);

    double oracle = numeric_lhs(f, phi, x, tol, max_iter);

    std::vector<PartialSumRow> rows;
    rows.reserve(orders.size());
    for (int order : orders) {
        Series partial = lhs_series(sys.truncated(order));
        double value = evaluate_series(partial, x);
        rows.push_back(PartialSumRow{order, value, oracle, std::fabs(value - oracle)});
    }
    return rows;
}

double find_epsilon(std::span<const PolyFunction> f, double start, double shrink) {
    if (!(start > 0)) throw std::invalid_argument("start must be positive");
    if (!(shrink > 0 && shrink < 1)) throw std::invalid_argument("shrink must be in (0,1)");
    if (f.empty()) throw std::invalid_argument("need at least one component function");

    size_t n = f.size();
    double r = start;
    for (int step = 0; step <= kMaxEpsilonShrinks; ++step, r *= shrink) {
        std::vector<std::vector<double>> probes;
        for (size_t i = 0; i < n; ++i) {
            std::vector<double> plus(n, 0.0), minus(n, 0.0);
            plus[i] = r;
            minus[i] = -r;
            probes.push_back(std::move(plus));
            probes.push_back(std::move(minus));
        }
        probes.push_back(std::vector<double>(n, r / std::sqrt(static_cast<double>(n))));

        bool all_ok = true;
        for (const auto& probe : probes) {
            ContractionResult res = numeric_fixed_point(f, probe);
            if (!res.converged || res.lipschitz_estimate > kLipschitzWitnessThreshold) {
                all_ok = false;
                break;
            }
        }
        if (all_ok) return r;
    }
    throw convergence_error("no contraction radius found; the map grows too fast at the probe scale");
}

}  // namespace lagood
