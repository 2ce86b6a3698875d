#include "lagood/series.hpp"

#include <ostream>
#include <string>

namespace lagood {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

namespace {

const Rational kZero{};

void check_shape(int var_count, int order) {
    if (var_count < 1) throw std::invalid_argument("series needs at least one variable");
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

}  // namespace

Series::Series(int var_count, int order) : var_count_(var_count), order_(order) {
    check_shape(var_count, order);
}

Series Series::constant(const Rational& c, int var_count, int order) {
    check_shape(var_count, order);
    TermMap terms;
    if (!c.is_zero()) terms.emplace(MultiIndex::zero(var_count), c);
    return Series(var_count, order, std::move(terms));
}

Series Series::variable(int i, int var_count, int order) {
    check_shape(var_count, order);
    if (i < 0 || i >= var_count) throw std::out_of_range("variable index out of range");
    if (order < 1) throw std::invalid_argument("a variable needs order >= 1");
    TermMap terms;
    terms.emplace(MultiIndex::unit(i, var_count), Rational(1));
    return Series(var_count, order, std::move(terms));
}

Series Series::from_terms(int var_count, int order,
                          std::span<const std::pair<MultiIndex, Rational>> terms) {
    check_shape(var_count, order);
    TermMap map;
    for (const auto& [k, c] : terms) {
        if (k.size() != var_count) throw std::invalid_argument("term index has wrong arity");
        if (k.degree() > order) throw std::invalid_argument("term degree exceeds order");
        if (c.is_zero()) continue;
        auto [it, inserted] = map.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) map.erase(it);
        }
    }
    return Series(var_count, order, std::move(map));
}

const Rational& Series::coefficient(const MultiIndex& k) const {
    if (k.size() != var_count_) throw std::invalid_argument("multi-index has wrong arity");
    if (k.degree() > order_) {
        throw truncation_error("coefficient " + k.str() + " is beyond truncation order " +
                               std::to_string(order_));
    }
    auto it = terms_.find(k);
    return it == terms_.end() ? kZero : it->second;
}

const Rational& Series::constant_term() const {
    auto it = terms_.find(MultiIndex::zero(var_count_));
    return it == terms_.end() ? kZero : it->second;
}

void Series::require_compatible(const Series& o) const {
    if (var_count_ != o.var_count_) throw std::invalid_argument("series variable counts differ");
}

void Series::prune_zeros(TermMap& terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
    }
}

Series Series::operator+(const Series& o) const {
    require_compatible(o);
    int res_order = std::min(order_, o.order_);
    TermMap terms;
    for (const auto& [k, c] : terms_) {
        if (k.degree() > res_order) break;
        terms.emplace(k, c);
    }
    for (const auto& [k, c] : o.terms_) {
        if (k.degree() > res_order) break;
        auto [it, inserted] = terms.emplace(k, c);
        if (!inserted) it->second += c;
    }
    prune_zeros(terms);
    return Series(var_count_, res_order, std::move(terms));
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator-() const {
    TermMap terms;
    for (const auto& [k, c] : terms_) terms.emplace(k, -c);
    return Series(var_count_, order_, std::move(terms));
}

Series Series::operator*(const Series& o) const {
    require_compatible(o);
    int res_order = std::min(order_, o.order_);
    TermMap terms;
    for (const auto& [ka, ca] : terms_) {
        int da = ka.degree();
        if (da > res_order) break;
        for (const auto& [kb, cb] : o.terms_) {
            if (da + kb.degree() > res_order) break;
            MultiIndex k = ka + kb;
            auto [it, inserted] = terms.emplace(std::move(k), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    prune_zeros(terms);
    return Series(var_count_, res_order, std::move(terms));
}

Series Series::scaled(const Rational& c) const {
    if (c.is_zero()) return Series(var_count_, order_);
    TermMap terms;
    for (const auto& [k, v] : terms_) terms.emplace(k, v * c);
    return Series(var_count_, order_, std::move(terms));
}

Series Series::pow(long exponent) const {
    if (exponent < 0) throw std::invalid_argument("series power must be non-negative");
    Series result = Series::constant(Rational(1), var_count_, order_);
    Series base = *this;
    long e = exponent;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Series Series::derivative(int j) const {
    if (j < 0 || j >= var_count_) throw std::out_of_range("derivative variable out of range");
    if (order_ < 1) {
        throw std::invalid_argument("derivative needs order >= 1: an order-0 series has no degree-1 information");
    }
    TermMap terms;
    for (const auto& [k, c] : terms_) {
        if (k[j] == 0) continue;
        terms.emplace(k.decremented(j), c * Rational(k[j]));
    }
    return Series(var_count_, order_ - 1, std::move(terms));
}

namespace {

// Memoized monomial powers of the inner tuple: product_for(k) = prod inner[i]^k_i.
const Series& product_for(const MultiIndex& k, std::span<const Series> inner,
                          std::map<MultiIndex, Series, GradedLexLess>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    int j = 0;
    while (k[j] == 0) ++j;
    const Series& prev = product_for(k.decremented(j), inner, memo);
    Series next = prev * inner[static_cast<size_t>(j)];
    return memo.emplace(k, std::move(next)).first->second;
}

}  // namespace

Series Series::compose(std::span<const Series> inner) const {
    if (static_cast<int>(inner.size()) != var_count_) {
        throw std::invalid_argument("compose needs one inner series per variable");
    }
    int inner_vars = inner[0].var_count();
    int inner_order = inner[0].order();
    for (const Series& s : inner) {
        if (s.var_count() != inner_vars || s.order() != inner_order) {
            throw std::invalid_argument("inner series must share variable count and order");
        }
        if (!s.constant_term().is_zero()) {
            throw std::invalid_argument("compose needs inner series with zero constant term");
        }
    }
    int res_order = std::min(order_, inner_order);

    std::map<MultiIndex, Series, GradedLexLess> memo;
    memo.emplace(MultiIndex::zero(var_count_),
                 Series::constant(Rational(1), inner_vars, res_order));

    Series acc(inner_vars, res_order);
    for (const auto& [k, c] : terms_) {
        if (k.degree() > res_order) break;  // inner terms have positive valuation
        acc = acc + product_for(k, inner, memo).truncated(res_order).scaled(c);
    }
    return acc;
}

Series Series::reciprocal() const {
    const Rational& a0 = constant_term();
    if (a0.is_zero()) {
        throw not_invertible_error("reciprocal of a series with zero constant term");
    }
    Rational inv0 = a0.reciprocal();

    // Graded layers: layer d holds the degree-d terms.
    std::vector<std::vector<std::pair<MultiIndex, Rational>>> a_layers(
        static_cast<size_t>(order_) + 1);
    for (const auto& [k, c] : terms_) {
        a_layers[static_cast<size_t>(k.degree())].emplace_back(k, c);
    }

    std::vector<std::vector<std::pair<MultiIndex, Rational>>> b_layers(
        static_cast<size_t>(order_) + 1);
    TermMap result;
    result.emplace(MultiIndex::zero(var_count_), inv0);
    b_layers[0].emplace_back(MultiIndex::zero(var_count_), inv0);

    // b_l = -(1/a_0) * sum_{j=1..l} a_j * b_{l-j}, one layer at a time.
    for (int l = 1; l <= order_; ++l) {
        TermMap layer;
        for (int j = 1; j <= l; ++j) {
            for (const auto& [ka, ca] : a_layers[static_cast<size_t>(j)]) {
                for (const auto& [kb, cb] : b_layers[static_cast<size_t>(l - j)]) {
                    MultiIndex k = ka + kb;
                    auto [it, inserted] = layer.emplace(std::move(k), ca * cb);
                    if (!inserted) it->second += ca * cb;
                }
            }
        }
        for (const auto& [k, c] : layer) {
            Rational b = -(inv0 * c);
            if (b.is_zero()) continue;
            b_layers[static_cast<size_t>(l)].emplace_back(k, b);
            result.emplace(k, std::move(b));
        }
    }
    return Series(var_count_, order_, std::move(result));
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order_) {
        throw std::invalid_argument("truncated needs 0 <= new_order <= order");
    }
    if (new_order == order_) return *this;
    TermMap terms;
    for (const auto& [k, c] : terms_) {
        if (k.degree() > new_order) break;
        terms.emplace(k, c);
    }
    return Series(var_count_, new_order, std::move(terms));
}

Series Series::lifted(int new_order) const {
    if (new_order < order_) throw std::invalid_argument("lifted needs new_order >= order");
    return Series(var_count_, new_order, terms_);
}

bool Series::operator==(const Series& o) const {
    if (var_count_ != o.var_count_) return false;
    int m = std::min(order_, o.order_);
    auto ia = terms_.begin();
    auto ib = o.terms_.begin();
    while (true) {
        bool ea = ia == terms_.end() || ia->first.degree() > m;
        bool eb = ib == o.terms_.end() || ib->first.degree() > m;
        if (ea || eb) return ea && eb;
        if (ia->first != ib->first || ia->second != ib->second) return false;
        ++ia;
        ++ib;
    }
}

Series shifted_by_variable(const Series& s, int i) {
    if (i < 0 || i >= s.var_count()) throw std::out_of_range("variable index out of range");
    Series::TermMap terms;
    for (const auto& [k, c] : s.terms()) {
        terms.emplace(k + MultiIndex::unit(i, s.var_count()), c);
    }
    return Series(s.var_count(), s.order() + 1, std::move(terms));
}

Rational product_coefficient(const Series& a, const Series& b, const MultiIndex& k) {
    if (a.var_count() != b.var_count()) throw std::invalid_argument("series variable counts differ");
    int m = std::min(a.order(), b.order());
    if (k.size() != a.var_count()) throw std::invalid_argument("multi-index has wrong arity");
    if (k.degree() > m) {
        throw truncation_error("coefficient " + k.str() + " is beyond truncation order " +
                               std::to_string(m));
    }
    Rational acc;
    for (const auto& [ka, ca] : a.terms()) {
        if (ka.degree() > k.degree()) break;
        if (!k.dominates(ka)) continue;
        auto it = b.terms().find(k - ka);
        if (it != b.terms().end()) acc += ca * it->second;
    }
    return acc;
}

SeriesMatrix::SeriesMatrix(int dim, std::vector<Series> row_major_entries)
    : dim_(dim), entries_(std::move(row_major_entries)) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
    if (entries_.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
        throw std::invalid_argument("matrix needs dim*dim entries");
    }
    for (const Series& s : entries_) {
        if (s.var_count() != entries_[0].var_count() || s.order() != entries_[0].order()) {
            throw std::invalid_argument("matrix entries must share variable count and order");
        }
    }
}

SeriesMatrix SeriesMatrix::identity(int dim, int var_count, int order) {
    std::vector<Series> entries;
    entries.reserve(static_cast<size_t>(dim) * static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            entries.push_back(Series::constant(Rational(i == j ? 1 : 0), var_count, order));
        }
    }
    return SeriesMatrix(dim, std::move(entries));
}

const Series& SeriesMatrix::entry(int i, int j) const {
    if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw std::out_of_range("matrix entry out of range");
    return entries_[static_cast<size_t>(i) * static_cast<size_t>(dim_) + static_cast<size_t>(j)];
}

SeriesMatrix SeriesMatrix::minor_matrix(int i, int j) const {
    if (dim_ < 2) throw std::invalid_argument("minor of a 1x1 matrix");
    std::vector<Series> entries;
    entries.reserve(static_cast<size_t>(dim_ - 1) * static_cast<size_t>(dim_ - 1));
    for (int r = 0; r < dim_; ++r) {
        if (r == i) continue;
        for (int c = 0; c < dim_; ++c) {
            if (c == j) continue;
            entries.push_back(entry(r, c));
        }
    }
    return SeriesMatrix(dim_ - 1, std::move(entries));
}

Series determinant(const SeriesMatrix& m) {
    if (m.dim() == 1) return m.entry(0, 0);
    Series acc(m.entry(0, 0).var_count(), m.entry(0, 0).order());
    for (int j = 0; j < m.dim(); ++j) {
        Series term = m.entry(0, j) * determinant(m.minor_matrix(0, j));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace lagood
