#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lagood/errors.hpp"
#include "lagood/multi_index.hpp"
#include "lagood/rational.hpp"

namespace lagood {

// Multivariate formal power series over Rational, truncated at a total
// degree ("order"). A series of order N stores exactly the coefficients of
// total degree <= N; everything beyond is unknown, not zero.
//
// Canonical form invariant: no zero coefficients are stored and no stored
// key exceeds the order, so equal series have identical term maps up to
// the common order. Values are immutable after construction; every
// operation returns a fresh series.
class Series {
public:
    using TermMap = std::map<MultiIndex, Rational, GradedLexLess>;

    // Zero series.
    Series(int var_count, int order);

    static Series constant(const Rational& c, int var_count, int order);

    // The monomial x_i, 0-based. Requires order >= 1.
    static Series variable(int i, int var_count, int order);

    // Builder for explicit term lists; zero coefficients are dropped.
    static Series from_terms(int var_count, int order,
                             std::span<const std::pair<MultiIndex, Rational>> terms);

    int var_count() const { return var_count_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    // Exact coefficient of x^k. Zero when the term is absent; throws
    // truncation_error when |k| exceeds the order.
    const Rational& coefficient(const MultiIndex& k) const;
    const Rational& constant_term() const;

    bool is_zero() const { return terms_.empty(); }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator-() const;
    Series operator*(const Series& o) const;
    Series scaled(const Rational& c) const;

    // Non-negative integer power by repeated squaring.
    Series pow(long exponent) const;

    // Partial derivative in variable j. The result order drops by one,
    // so this requires order >= 1.
    Series derivative(int j) const;

    // Substitution: this(inner[0], ..., inner[n-1]). Every inner series
    // must share var_count and order and have zero constant term; the
    // result order is min(order(), inner order).
    Series compose(std::span<const Series> inner) const;

    // Multiplicative inverse; requires a nonzero constant term.
    Series reciprocal() const;

    // Reinterpret the truncation order. truncated drops terms beyond the
    // new order; lifted raises the order without adding terms, asserting
    // that the omitted higher coefficients are genuinely zero, which is
    // the caller's responsibility.
    Series truncated(int new_order) const;
    Series lifted(int new_order) const;

    // Equality compares coefficients up to the smaller of the two orders.
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

private:
    Series(int var_count, int order, TermMap terms)
        : var_count_(var_count), order_(order), terms_(std::move(terms)) {}

    void require_compatible(const Series& o) const;
    static void prune_zeros(TermMap& terms);

    int var_count_;
    int order_;
    TermMap terms_;

    friend Series shifted_by_variable(const Series& s, int i);
    friend Rational product_coefficient(const Series& a, const Series& b, const MultiIndex& k);
};

inline Series operator*(const Series& s, const Rational& c) { return s.scaled(c); }
inline Series operator*(const Rational& c, const Series& s) { return s.scaled(c); }

// x_i * s without losing precision: shifting moves degree-d information to
// degree d+1, so the result is valid (and stored) at order s.order() + 1.
Series shifted_by_variable(const Series& s, int i);

// Coefficient of x^k in a*b, computed by a single convolution instead of a
// full product. Agrees with (a*b).coefficient(k) whenever that is defined.
Rational product_coefficient(const Series& a, const Series& b, const MultiIndex& k);

// Square matrix of series sharing var_count and order.
class SeriesMatrix {
public:
    SeriesMatrix(int dim, std::vector<Series> row_major_entries);

    static SeriesMatrix identity(int dim, int var_count, int order);

    int dim() const { return dim_; }
    const Series& entry(int i, int j) const;

    // Minor with row i and column j removed. Requires dim >= 2.
    SeriesMatrix minor_matrix(int i, int j) const;

private:
    int dim_;
    std::vector<Series> entries_;
};

// Determinant by cofactor expansion along the first row.
Series determinant(const SeriesMatrix& m);

}  // namespace lagood
