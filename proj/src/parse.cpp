#include "lagood/parse.hpp"

#include <cctype>

namespace lagood {

namespace {

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    SourceSpan span;
};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> tokens;
    int line = 1, column = 1;
    size_t i = 0;
    auto advance = [&](size_t count) {
        for (size_t j = 0; j < count; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        SourceSpan span{static_cast<int>(i), static_cast<int>(i) + 1, line, column};
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (i + len < src.size() && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
            span.end = static_cast<int>(i + len);
            tokens.push_back(Token{Token::Type::Number, std::string(src.substr(i, len)), span});
            advance(len);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t len = 1;
            while (i + len < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i + len])) || src[i + len] == '_')) {
                ++len;
            }
            span.end = static_cast<int>(i + len);
            tokens.push_back(Token{Token::Type::Ident, std::string(src.substr(i, len)), span});
            advance(len);
            continue;
        }
        Token::Type type;
        switch (c) {
            case '+': type = Token::Type::Plus; break;
            case '-': type = Token::Type::Minus; break;
            case '*': type = Token::Type::Star; break;
            case '/': type = Token::Type::Slash; break;
            case '^': type = Token::Type::Caret; break;
            case '(': type = Token::Type::LParen; break;
            case ')': type = Token::Type::RParen; break;
            default:
                throw parse_error("unexpected character '" + std::string(1, c) + "'", line, column);
        }
        tokens.push_back(Token{type, std::string(1, c), span});
        advance(1);
    }
    SourceSpan end_span{static_cast<int>(src.size()), static_cast<int>(src.size()), line, column};
    tokens.push_back(Token{Token::Type::End, "", end_span});
    return tokens;
}

SourceSpan merge(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    s.end = b.end;
    return s;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, int var_count, std::span<const std::string> names)
        : tokens_(std::move(tokens)), var_count_(var_count), names_(names) {}

    ExpressionPtr parse() {
        ExpressionPtr e = parse_expr();
        if (peek().type != Token::Type::End) {
            fail("unexpected trailing input", peek());
        }
        return e;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& take() { return tokens_[pos_++]; }

    [[noreturn]] static void fail(const std::string& message, const Token& at) {
        throw parse_error(message, at.span.line, at.span.column);
    }

    ExpressionPtr parse_expr() {
        ExpressionPtr left = parse_term();
        while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
            bool add = take().type == Token::Type::Plus;
            ExpressionPtr right = parse_term();
            auto node = std::make_unique<ExpressionNode>();
            node->kind = add ? ExpressionNode::Kind::Add : ExpressionNode::Kind::Sub;
            node->span = merge(left->span, right->span);
            node->left = std::move(left);
            node->right = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExpressionPtr parse_term() {
        ExpressionPtr left = parse_factor();
        while (peek().type == Token::Type::Star || peek().type == Token::Type::Slash) {
            bool mul = take().type == Token::Type::Star;
            ExpressionPtr right = parse_factor();
            auto node = std::make_unique<ExpressionNode>();
            node->kind = mul ? ExpressionNode::Kind::Mul : ExpressionNode::Kind::Div;
            node->span = merge(left->span, right->span);
            node->left = std::move(left);
            node->right = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExpressionPtr parse_factor() {
        ExpressionPtr base = parse_base();
        if (peek().type != Token::Type::Caret) return base;
        take();
        const Token& exp = peek();
        if (exp.type != Token::Type::Number) {
            fail("exponent must be a non-negative integer literal", exp);
        }
        take();
        auto node = std::make_unique<ExpressionNode>();
        node->kind = ExpressionNode::Kind::Pow;
        node->span = merge(base->span, exp.span);
        node->left = std::move(base);
        try {
            node->exponent = std::stol(exp.text);
        } catch (const std::out_of_range&) {
            fail("exponent is too large", exp);
        }
        return node;
    }

    // rational := int ("/" nat)?, with the "/ nat" branch taken only when a
    // bare number follows the slash; otherwise the slash is series division.
    ExpressionPtr parse_rational(bool negative, const Token& first, const Token& number) {
        Rational value{Integer(number.text)};
        SourceSpan span = merge(first.span, number.span);
        if (peek().type == Token::Type::Slash && peek(1).type == Token::Type::Number) {
            take();
            const Token& den = take();
            Integer d(den.text);
            if (d == 0) fail("zero denominator in rational literal", den);
            value = Rational(Integer(number.text), d);
            span = merge(first.span, den.span);
        }
        if (negative) value = -value;
        auto node = std::make_unique<ExpressionNode>();
        node->kind = ExpressionNode::Kind::Literal;
        node->span = span;
        node->literal = std::move(value);
        return node;
    }

    ExpressionPtr parse_base() {
        const Token& tok = peek();
        switch (tok.type) {
            case Token::Type::Number: {
                const Token& number = take();
                return parse_rational(false, number, number);
            }
            case Token::Type::Minus: {
                const Token& minus = take();
                if (peek().type != Token::Type::Number) {
                    fail("expected a number after unary '-'", peek());
                }
                const Token& number = take();
                return parse_rational(true, minus, number);
            }
            case Token::Type::LParen: {
                const Token& open = take();
                ExpressionPtr inner = parse_expr();
                if (peek().type != Token::Type::RParen) fail("expected ')'", peek());
                const Token& close = take();
                auto node = std::make_unique<ExpressionNode>();
                node->kind = ExpressionNode::Kind::Group;
                node->span = merge(open.span, close.span);
                node->left = std::move(inner);
                return node;
            }
            case Token::Type::Ident: {
                if (tok.text == "inv" && peek(1).type == Token::Type::LParen) {
                    const Token& name = take();
                    take();  // '('
                    ExpressionPtr inner = parse_expr();
                    if (peek().type != Token::Type::RParen) fail("expected ')'", peek());
                    const Token& close = take();
                    auto node = std::make_unique<ExpressionNode>();
                    node->kind = ExpressionNode::Kind::Reciprocal;
                    node->span = merge(name.span, close.span);
                    node->left = std::move(inner);
                    return node;
                }
                const Token& name = take();
                auto node = std::make_unique<ExpressionNode>();
                node->kind = ExpressionNode::Kind::Variable;
                node->span = name.span;
                node->variable = resolve_variable(name);
                return node;
            }
            default:
                fail("expected a number, a variable, '(', or 'inv('", tok);
        }
    }

    int resolve_variable(const Token& name) const {
        if (!names_.empty()) {
            for (size_t i = 0; i < names_.size(); ++i) {
                if (names_[i] == name.text) return static_cast<int>(i);
            }
            fail("unknown variable '" + name.text + "'", name);
        }
        // Built-in scheme x1..xn.
        const std::string& t = name.text;
        if (t.size() >= 2 && t[0] == 'x') {
            bool digits = true;
            for (size_t i = 1; i < t.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(t[i]))) digits = false;
            }
            if (digits) {
                long index = 0;
                try {
                    index = std::stol(t.substr(1));
                } catch (const std::out_of_range&) {
                    index = 0;
                }
                if (index >= 1 && index <= var_count_) return static_cast<int>(index - 1);
            }
        }
        fail("unknown variable '" + name.text + "'", name);
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    int var_count_;
    std::span<const std::string> names_;
};

}  // namespace

ExpressionPtr parse_expression(std::string_view src, int var_count,
                               std::span<const std::string> variable_names) {
    if (var_count < 1) throw std::invalid_argument("var_count must be positive");
    if (!variable_names.empty() && static_cast<int>(variable_names.size()) != var_count) {
        throw std::invalid_argument("one declared name per variable required");
    }
    for (const std::string& name : variable_names) {
        if (name == "inv") throw std::invalid_argument("'inv' is reserved and cannot name a variable");
    }
    if (src.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw parse_error("empty expression", 1, 1);
    }
    Parser parser(tokenize(src), var_count, variable_names);
    return parser.parse();
}

namespace {

Series lower_node(const ExpressionNode& node, int var_count, int order) {
    using Kind = ExpressionNode::Kind;
    switch (node.kind) {
        case Kind::Literal:
            return Series::constant(node.literal, var_count, order);
        case Kind::Variable:
            return Series::variable(node.variable, var_count, order);
        case Kind::Group:
            return lower_node(*node.left, var_count, order);
        case Kind::Add:
            return lower_node(*node.left, var_count, order) + lower_node(*node.right, var_count, order);
        case Kind::Sub:
            return lower_node(*node.left, var_count, order) - lower_node(*node.right, var_count, order);
        case Kind::Mul:
            return lower_node(*node.left, var_count, order) * lower_node(*node.right, var_count, order);
        case Kind::Div: {
            if (node.right->kind == Kind::Literal) {
                if (node.right->literal.is_zero()) {
                    throw parse_error("division by zero", node.right->span.line,
                                      node.right->span.column);
                }
                return lower_node(*node.left, var_count, order)
                    .scaled(node.right->literal.reciprocal());
            }
            Series divisor = lower_node(*node.right, var_count, order);
            if (divisor.constant_term().is_zero()) {
                throw parse_error("division by a series with zero constant term",
                                  node.right->span.line, node.right->span.column);
            }
            return lower_node(*node.left, var_count, order) * divisor.reciprocal();
        }
        case Kind::Pow:
            return lower_node(*node.left, var_count, order).pow(node.exponent);
        case Kind::Reciprocal: {
            Series inner = lower_node(*node.left, var_count, order);
            if (inner.constant_term().is_zero()) {
                throw parse_error("inv of a series with zero constant term",
                                  node.left->span.line, node.left->span.column);
            }
            return inner.reciprocal();
        }
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace

Series lower(const ExpressionNode& ast, int var_count, int order) {
    // Variables need a degree-1 slot; an order-0 request is served by
    // lowering at order 1 and truncating, which commutes with every ring op.
    int working_order = std::max(order, 1);
    return lower_node(ast, var_count, working_order).truncated(order);
}

Series parse_series(std::string_view src, int var_count, int order,
                    std::span<const std::string> variable_names) {
    return lower(*parse_expression(src, var_count, variable_names), var_count, order);
}

}  // namespace lagood
