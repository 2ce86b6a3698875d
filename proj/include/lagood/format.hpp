#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lagood/series.hpp"

namespace lagood {

// "x1", ..., "xn".
std::vector<std::string> default_variable_names(int var_count);

// "x1^2*x3" for (2,0,1); empty string for the zero index.
std::string monomial_text(const MultiIndex& k, std::span<const std::string> names);

// Canonical text form: terms in graded-lex order, coefficients as reduced
// "p/q". Re-parsing the output reproduces an equal series, so a leading
// negative term prints an explicit coefficient ("-1*x1", not "-x1": the
// grammar only allows unary minus on numeric literals).
std::string to_text(const Series& s, std::span<const std::string> names);
std::string to_text(const Series& s);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace lagood
