#include "lagood/format.hpp"

#include <ostream>
#include <sstream>

namespace lagood {

std::vector<std::string> default_variable_names(int var_count) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(var_count));
    for (int i = 1; i <= var_count; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::string monomial_text(const MultiIndex& k, std::span<const std::string> names) {
    if (static_cast<int>(names.size()) != k.size()) {
        throw std::invalid_argument("one name per variable required");
    }
    std::string out;
    for (int i = 0; i < k.size(); ++i) {
        if (k[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<size_t>(i)];
        if (k[i] > 1) out += "^" + std::to_string(k[i]);
    }
    return out;
}

std::string to_text(const Series& s, std::span<const std::string> names) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : s.terms()) {
        bool negative = c.sign() < 0;
        Rational mag = c.abs();
        std::string mono = monomial_text(k, names);

        std::string body;
        if (mono.empty()) {
            body = mag.str();
        } else if (mag.is_one()) {
            body = first && negative ? "1*" + mono : mono;
        } else {
            body = mag.str() + "*" + mono;
        }

        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

std::string to_text(const Series& s) {
    return to_text(s, default_variable_names(s.var_count()));
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    return os << to_text(s);
}

}  // namespace lagood
