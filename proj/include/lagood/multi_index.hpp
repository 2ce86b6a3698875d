#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagood {

// Exponent vector of a monomial. Invariant: every entry >= 0.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_) {
            if (v < 0) throw std::invalid_argument("multi-index with negative exponent");
        }
    }

    static MultiIndex zero(int var_count) {
        return MultiIndex(std::vector<int>(static_cast<size_t>(var_count), 0));
    }

    // Unit vector e_i, 0-based.
    static MultiIndex unit(int i, int var_count) {
        std::vector<int> e(static_cast<size_t>(var_count), 0);
        e.at(static_cast<size_t>(i)) = 1;
        return MultiIndex(std::move(e));
    }

    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    MultiIndex operator+(const MultiIndex& o) const {
        require_same_size(o);
        std::vector<int> r(e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];
        return MultiIndex(std::move(r));
    }

    // Requires exponent i to be positive.
    MultiIndex decremented(int i) const {
        if (e_.at(static_cast<size_t>(i)) == 0) {
            throw std::invalid_argument("decrement of zero exponent");
        }
        std::vector<int> r(e_);
        r[static_cast<size_t>(i)] -= 1;
        return MultiIndex(std::move(r));
    }

    // Componentwise o[i] <= this[i].
    bool dominates(const MultiIndex& o) const {
        require_same_size(o);
        for (size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) return false;
        }
        return true;
    }

    // Requires dominates(o).
    MultiIndex operator-(const MultiIndex& o) const {
        if (!dominates(o)) throw std::invalid_argument("multi-index subtraction underflow");
        std::vector<int> r(e_);
        for (size_t i = 0; i < r.size(); ++i) r[i] -= o.e_[i];
        return MultiIndex(std::move(r));
    }

    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return e_ != o.e_; }

    // "(2,0,1)"
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i > 0) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    void require_same_size(const MultiIndex& o) const {
        if (e_.size() != o.e_.size()) {
            throw std::invalid_argument("multi-index size mismatch");
        }
    }

    std::vector<int> e_;
};

// Total degree ascending, ties broken lexicographically ascending.
inline int graded_lex_compare(const MultiIndex& a, const MultiIndex& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    if (ea < eb) return -1;
    if (eb < ea) return 1;
    return 0;
}

struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        return graded_lex_compare(a, b) < 0;
    }
};

// All multi-indices with var_count entries and total degree <= max_degree,
// in graded-lex order. This is the canonical coefficient enumeration order.
std::vector<MultiIndex> multi_indices_up_to(int var_count, int max_degree);

}  // namespace lagood
