#pragma once

#include <vector>

#include "lagood/series.hpp"

namespace lagood {

// Cofactor determinants and the n-fold index enumeration grow factorially;
// past this arity the exact pipeline stops being interactive.
inline constexpr int kMaxInversionVariables = 8;

// A system g_i = x_i * f_i(g_1, ..., g_n) together with a weight phi.
// All n+1 series share the variable count n and the truncation order.
struct SeriesSystem {
    SeriesSystem(Series phi_in, std::vector<Series> f_in);

    int var_count() const { return static_cast<int>(f.size()); }
    int order() const { return phi.order(); }

    SeriesSystem truncated(int new_order) const;

    Series phi;
    std::vector<Series> f;
};

struct FixedPointSolution {
    std::vector<Series> g;
    // True when g_i - x_i * f_i(g) vanishes identically at the working order.
    bool residual_ok;
};

// Solves g_i = x_i * f_i(g) by Picard iteration from g = 0. Iterate t is
// exact through total degree t, so order() iterations freeze every stored
// layer; the result is the unique solution with zero constant term.
FixedPointSolution solve_fixed_point(const SeriesSystem& sys);

// The matrix with entries delta_ij - x_i * (d f_i / d u_j)(g).
SeriesMatrix jacobian_matrix(const SeriesSystem& sys, const std::vector<Series>& g);

// Left side of the coefficient identity: phi(g) / det(jacobian). Solved
// internally one order above the target so the Jacobian loses nothing to
// the derivative's order drop.
Series lhs_series(const SeriesSystem& sys);

// Right side for one index: [x^k] phi * f_1^{k_1} * ... * f_n^{k_n},
// computed from scratch on every call.
Rational rhs_coefficient(const SeriesSystem& sys, const MultiIndex& k);

struct Mismatch {
    MultiIndex k;
    Rational lhs;
    Rational rhs;
};

struct VerificationReport {
    int var_count;
    int order;
    long checked;
    std::vector<Mismatch> mismatches;  // graded-lex order
    Series lhs;

    bool ok() const { return mismatches.empty(); }
};

// Compares both sides of the identity at every index with |k| <= order.
// The right side reuses the running product phi * f^k across indices by
// extending it one factor at a time in graded-lex order; this gives the
// same values as rhs_coefficient at every index.
VerificationReport verify_identity(const SeriesSystem& sys);

struct ClassicLagrangePair {
    Rational via_fixed_point;   // [u^k] phi(g) with g solved from g = u f(g)
    Rational via_derivative;    // (1/k) [u^(k-1)] phi'(u) f(u)^k
};

// One-variable Lagrange inversion cross-check. Requires k >= 1 and both
// series available at order >= k.
ClassicLagrangePair classic_lagrange_check(const Series& f, const Series& phi, int k);

// The weight w = phi * (1 - u f'(u)/f(u)), one variable, f(0) != 0. Along
// g = x f(g) the correction factor equals det(1 - x f'(g)), so
// lhs_series({w, f}) is identically phi(g): the bridge that lets the
// determinant-form left side read off plain coefficients of phi(g).
Series plain_coefficient_weight(const Series& f, const Series& phi);

}  // namespace lagood
