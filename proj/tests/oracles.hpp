#pragma once

// Independent reference computations and random-instance generators shared by
// the test suites. Fixture values are produced here, never by the code paths
// they are checking.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "lagood/series.hpp"

namespace lagood::testing {

// C_0..C_{count-1} by the convolution recurrence C_{m+1} = sum C_i C_{m-i},
// using only integer arithmetic.
inline std::vector<Rational> catalan_numbers(int count) {
    std::vector<Integer> c;
    c.reserve(static_cast<size_t>(count));
    c.push_back(1);
    for (int m = 1; m < count; ++m) {
        Integer next = 0;
        for (int i = 0; i < m; ++i) next += c[static_cast<size_t>(i)] * c[static_cast<size_t>(m - 1 - i)];
        c.push_back(next);
    }
    std::vector<Rational> out;
    out.reserve(c.size());
    for (const Integer& v : c) out.push_back(Rational(v));
    return out;
}

inline Integer factorial(unsigned long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer int_pow(unsigned long base, unsigned long exp) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
    return p;
}

// Number of labeled rooted trees on k vertices over k!, i.e. k^{k-1}/k!.
inline Rational cayley_coefficient(int k) {
    return Rational(int_pow(static_cast<unsigned long>(k), static_cast<unsigned long>(k - 1)),
                    factorial(static_cast<unsigned long>(k)));
}

// 1 + u + u^2 + ... to the given order (one variable).
inline Series geometric_series(int order) {
    std::vector<std::pair<MultiIndex, Rational>> terms;
    for (int j = 0; j <= order; ++j) terms.emplace_back(MultiIndex({j}), Rational(1));
    return Series::from_terms(1, order, terms);
}

// sum u^j / j! to the given order (one variable).
inline Series exponential_series(int order) {
    std::vector<std::pair<MultiIndex, Rational>> terms;
    for (int j = 0; j <= order; ++j) {
        terms.emplace_back(MultiIndex({j}), Rational(Integer(1), factorial(static_cast<unsigned long>(j))));
    }
    return Series::from_terms(1, order, terms);
}

// Determinant by the signed permutation sum, as an algorithmic counterweight
// to the cofactor expansion used by the library.
inline Series leibniz_determinant(const SeriesMatrix& m) {
    int n = m.dim();
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;

    Series acc(m.entry(0, 0).var_count(), m.entry(0, 0).order());
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
            }
        }
        Series prod = Series::constant(Rational(1), m.entry(0, 0).var_count(),
                                       m.entry(0, 0).order());
        for (int i = 0; i < n; ++i) prod = prod * m.entry(i, perm[static_cast<size_t>(i)]);
        acc = (inversions % 2 == 0) ? acc + prod : acc - prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

// Uniform rational with numerator in [-max_num, max_num], denominator in [1, max_den].
inline Rational random_rational(std::mt19937& rng, int max_num = 5, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

// Sparse random polynomial: each monomial of total degree <= degree appears
// with the given probability.
inline Series random_polynomial(std::mt19937& rng, int var_count, int degree, int order,
                                double term_probability = 0.5) {
    std::bernoulli_distribution keep(term_probability);
    std::vector<std::pair<MultiIndex, Rational>> terms;
    for (const MultiIndex& k : multi_indices_up_to(var_count, degree)) {
        if (!keep(rng)) continue;
        terms.emplace_back(k, random_rational(rng));
    }
    return Series::from_terms(var_count, order, terms);
}

// Dense-ish random series filled up to the full order.
inline Series random_series(std::mt19937& rng, int var_count, int order,
                            double term_probability = 0.5) {
    return random_polynomial(rng, var_count, order, order, term_probability);
}

}  // namespace lagood::testing
