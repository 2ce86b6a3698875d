#pragma once

#include <stdexcept>
#include <string>

namespace lagood {

// Asked for a coefficient of total degree beyond the truncation order.
// Distinct from a zero coefficient, which is a valid answer below the order.
class truncation_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Reciprocal of a series whose constant term is zero.
class not_invertible_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Picard iteration failed to reach the requested residual, or a numeric
// determinant was too close to zero to divide by.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax or lowering error in an input expression, with 1-based position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, int line, int column)
        : std::runtime_error(message + " (line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ")"),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace lagood
