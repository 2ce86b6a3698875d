#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lagood {

using Integer = mpz_class;

// Arbitrary-precision rational. Invariant: always reduced, denominator > 0.
// Thin wrapper over GMP's mpq_class; every constructor canonicalizes.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(const Integer& n) : value_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    // Accepts "p" or "p/q" in base 10, e.g. "-3/2". Throws std::invalid_argument
    // on malformed input and std::domain_error on a zero denominator.
    static Rational from_string(std::string_view text) {
        mpq_class parsed;
        try {
            parsed = mpq_class(std::string(text));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        if (parsed.get_den() == 0) throw std::domain_error("rational with zero denominator");
        parsed.canonicalize();
        Rational r;
        r.value_ = parsed;
        return r;
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    Rational abs() const {
        Rational r;
        r.value_ = ::abs(value_);
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        Rational r;
        r.value_ = 1 / value_;
        return r;
    }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return value_.get_str(); }

    double to_double() const { return value_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero");
        return wrap(a.value_ / b.value_);
    }
    Rational operator-() const { return wrap(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    static Rational wrap(mpq_class v) {
        Rational r;
        r.value_ = std::move(v);
        return r;
    }

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lagood
