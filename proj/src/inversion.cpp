#include "lagood/inversion.hpp"

#include <string>

namespace lagood {

SeriesSystem::SeriesSystem(Series phi_in, std::vector<Series> f_in)
    : phi(std::move(phi_in)), f(std::move(f_in)) {
    int n = static_cast<int>(f.size());
    if (n < 1) throw std::invalid_argument("system needs at least one equation");
    if (phi.var_count() != n) {
        throw std::invalid_argument("phi must use exactly the system's variables");
    }
    for (const Series& fi : f) {
        if (fi.var_count() != n || fi.order() != phi.order()) {
            throw std::invalid_argument("system series must share variable count and order");
        }
    }
}

SeriesSystem SeriesSystem::truncated(int new_order) const {
    std::vector<Series> fs;
    fs.reserve(f.size());
    for (const Series& fi : f) fs.push_back(fi.truncated(new_order));
    return SeriesSystem(phi.truncated(new_order), std::move(fs));
}

namespace {

void check_arity(const SeriesSystem& sys) {
    if (sys.var_count() > kMaxInversionVariables) {
        throw std::invalid_argument("at most " + std::to_string(kMaxInversionVariables) +
                                    " variables are supported");
    }
}

// Picard iterates at target_order; iterate t is exact through degree t.
std::vector<Series> solve_at_order(const SeriesSystem& sys, int target_order) {
    int n = sys.var_count();
    std::vector<Series> f;
    f.reserve(static_cast<size_t>(n));
    for (const Series& fi : sys.f) f.push_back(fi.lifted(target_order));

    std::vector<Series> g(static_cast<size_t>(n), Series(n, target_order));
    for (int t = 0; t < target_order; ++t) {
        std::vector<Series> next;
        next.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            next.push_back(shifted_by_variable(f[static_cast<size_t>(i)].compose(g), i)
                               .truncated(target_order));
        }
        g = std::move(next);
    }
    return g;
}

bool residual_vanishes(const SeriesSystem& sys, const std::vector<Series>& g) {
    for (int i = 0; i < sys.var_count(); ++i) {
        Series rhs = shifted_by_variable(sys.f[static_cast<size_t>(i)].compose(g), i);
        if (g[static_cast<size_t>(i)] != rhs) return false;
    }
    return true;
}

}  // namespace

FixedPointSolution solve_fixed_point(const SeriesSystem& sys) {
    check_arity(sys);
    std::vector<Series> g = solve_at_order(sys, sys.order());
    bool ok = residual_vanishes(sys, g);
    return FixedPointSolution{std::move(g), ok};
}

SeriesMatrix jacobian_matrix(const SeriesSystem& sys, const std::vector<Series>& g) {
    int n = sys.var_count();
    if (static_cast<int>(g.size()) != n) {
        throw std::invalid_argument("jacobian needs one series per variable");
    }
    int order = std::min(sys.order(), g[0].order());
    if (order < 1) {
        throw std::invalid_argument("jacobian needs order >= 1 for the derivative layer");
    }
    std::vector<Series> entries;
    entries.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        // d f_i / d u_j at order-1, composed with g, then shifted by x_i:
        // the shift restores the order lost to the derivative.
        Series fi = sys.f[static_cast<size_t>(i)].truncated(order);
        for (int j = 0; j < n; ++j) {
            Series entry = shifted_by_variable(fi.derivative(j).compose(g), i);
            Series delta = Series::constant(Rational(i == j ? 1 : 0), n, order);
            entries.push_back(delta - entry);
        }
    }
    return SeriesMatrix(n, std::move(entries));
}

Series lhs_series(const SeriesSystem& sys) {
    check_arity(sys);
    int n = sys.var_count();
    int order = sys.order();
    // One extra order internally so the Jacobian is exact at the target order.
    std::vector<Series> g = solve_at_order(sys, order + 1);

    std::vector<Series> f_lifted;
    f_lifted.reserve(static_cast<size_t>(n));
    for (const Series& fi : sys.f) f_lifted.push_back(fi.lifted(order + 1));
    Series phi_lifted = sys.phi.lifted(order + 1);

    SeriesMatrix jac = jacobian_matrix(SeriesSystem(phi_lifted, f_lifted), g);
    Series det = determinant(jac);
    Series numerator = phi_lifted.compose(g);
    return (numerator * det.reciprocal()).truncated(order);
}

Rational rhs_coefficient(const SeriesSystem& sys, const MultiIndex& k) {
    check_arity(sys);
    int n = sys.var_count();
    if (k.size() != n) throw std::invalid_argument("multi-index has wrong arity");
    if (k.degree() > sys.order()) {
        throw truncation_error("index " + k.str() + " is beyond truncation order " +
                               std::to_string(sys.order()));
    }
    Series product = sys.phi;
    for (int i = 0; i < n; ++i) {
        product = product * sys.f[static_cast<size_t>(i)].pow(k[i]);
    }
    return product.coefficient(k);
}

VerificationReport verify_identity(const SeriesSystem& sys) {
    check_arity(sys);
    int n = sys.var_count();
    int order = sys.order();
    Series lhs = lhs_series(sys);

    // Running products f^k, extended one factor at a time in graded-lex
    // order: f^k = f^(k - e_j) * f_j for the first nonzero slot j.
    std::map<MultiIndex, Series, GradedLexLess> powers;
    powers.emplace(MultiIndex::zero(n), Series::constant(Rational(1), n, order));

    std::vector<Mismatch> mismatches;
    std::vector<MultiIndex> indices = multi_indices_up_to(n, order);
    for (const MultiIndex& k : indices) {
        if (k.degree() > 0) {
            int j = 0;
            while (k[j] == 0) ++j;
            const Series& prev = powers.at(k.decremented(j));
            powers.emplace(k, prev * sys.f[static_cast<size_t>(j)]);
        }
        Rational rhs = product_coefficient(sys.phi, powers.at(k), k);
        const Rational& l = lhs.coefficient(k);
        if (l != rhs) mismatches.push_back(Mismatch{k, l, rhs});
    }
    return VerificationReport{n, order, static_cast<long>(indices.size()),
                              std::move(mismatches), std::move(lhs)};
}

Series plain_coefficient_weight(const Series& f, const Series& phi) {
    if (f.var_count() != 1 || phi.var_count() != 1) {
        throw std::invalid_argument("the plain-coefficient weight is one-variable");
    }
    if (f.constant_term().is_zero()) {
        throw std::invalid_argument("the plain-coefficient weight needs f(0) != 0");
    }
    int order = std::min(f.order(), phi.order());
    if (order < 1) throw std::invalid_argument("the plain-coefficient weight needs order >= 1");
    Series f_cut = f.truncated(order);
    // u f'(u): the shift restores the order the derivative dropped.
    Series u_fprime = shifted_by_variable(f_cut.derivative(0), 0).truncated(order);
    Series correction = Series::constant(Rational(1), 1, order) - u_fprime * f_cut.reciprocal();
    return phi.truncated(order) * correction;
}

ClassicLagrangePair classic_lagrange_check(const Series& f, const Series& phi, int k) {
    if (f.var_count() != 1 || phi.var_count() != 1) {
        throw std::invalid_argument("classic inversion is one-variable");
    }
    if (k < 1) throw std::invalid_argument("classic inversion needs k >= 1");
    if (f.order() < k || phi.order() < k) {
        throw std::invalid_argument("classic inversion needs both series at order >= k");
    }

    SeriesSystem sys(phi.truncated(k), {f.truncated(k)});
    std::vector<Series> g = solve_at_order(sys, k);
    Rational via_fixed_point = sys.phi.compose(g).coefficient(MultiIndex({k}));

    Series phi_prime = phi.derivative(0).truncated(k - 1);
    Series f_pow = f.truncated(k - 1).pow(k);
    Rational bracket = product_coefficient(phi_prime, f_pow, MultiIndex({k - 1}));
    Rational via_derivative = bracket / Rational(k);

    return ClassicLagrangePair{std::move(via_fixed_point), std::move(via_derivative)};
}

}  // namespace lagood
