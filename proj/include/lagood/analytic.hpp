#pragma once

#include <span>
#include <vector>

#include "lagood/inversion.hpp"
#include "lagood/series.hpp"

namespace lagood {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr int kDefaultMaxIterations = 10'000;
inline constexpr double kDefaultShrink = 0.5;
// 0.9 rather than 1.0 keeps a margin against float noise in the radius search.
inline constexpr double kLipschitzWitnessThreshold = 0.9;
// Determinants smaller than this are refused rather than divided by.
inline constexpr double kSingularDeterminantFloor = 1e-12;
inline constexpr int kMaxEpsilonShrinks = 60;

// Evaluates the series as a polynomial at a float point, summing terms in
// graded-lex order so results are bit-for-bit deterministic.
double evaluate_series(const Series& s, std::span<const double> u);

// A polynomial with exact coefficients plus float evaluation of itself and
// its first partial derivatives (derivative series cached at construction).
class PolyFunction {
public:
    explicit PolyFunction(Series s);

    int var_count() const { return poly_.var_count(); }
    const Series& series() const { return poly_; }

    double operator()(std::span<const double> u) const;
    double partial(int j, std::span<const double> u) const;

private:
    Series poly_;
    std::vector<Series> gradient_;
};

struct ContractionResult {
    std::vector<double> x;
    std::vector<double> g;
    int iterations;
    double lipschitz_estimate;
    double residual;  // max_i |g_i - x_i f_i(g)| at the reported g
    bool converged;
};

// Picard iteration u <- diag(x) f(u) from u = 0. Stops when the residual
// max-norm reaches tol; converged = false after max_iter or once iterates
// stop being finite.
ContractionResult numeric_fixed_point(std::span<const PolyFunction> f,
                                      std::span<const double> x,
                                      double tol = kDefaultTolerance,
                                      int max_iter = kDefaultMaxIterations);

// phi(g(x)) / det(delta_ij - x_i d_j f_i(g(x))) with the determinant by LU
// elimination with partial pivoting. Throws convergence_error when the fixed
// point does not converge or the determinant is below the singular floor.
double numeric_lhs(std::span<const PolyFunction> f, const PolyFunction& phi,
                   std::span<const double> x,
                   double tol = kDefaultTolerance,
                   int max_iter = kDefaultMaxIterations);

struct PartialSumRow {
    int order;
    double series_value;  // exact lhs_series truncated at order, evaluated at x
    double oracle_value;  // numeric_lhs, independent of the series pipeline
    double abs_error;
};

// One row per requested order (orders must be strictly increasing and within
// the system's order). The oracle column is the same number in every row.
std::vector<PartialSumRow> compare_partial_sums(const SeriesSystem& sys,
                                                std::span<const double> x,
                                                std::span<const int> orders,
                                                double tol = kDefaultTolerance,
                                                int max_iter = kDefaultMaxIterations);

// First radius r in start, start*shrink, start*shrink^2, ... such that the
// fixed point converges with Lipschitz estimate <= the witness threshold at
// every probe x = +-r e_i and x = r (1,...,1)/sqrt(n). An empirical witness
// of a contraction ball, not a certified bound.
double find_epsilon(std::span<const PolyFunction> f, double start, double shrink);

}  // namespace lagood
