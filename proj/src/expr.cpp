#include "galcurve/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace galcurve {
namespace detail {

enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Abs };

struct ExprNode {
    Kind kind;
    double value = 0.0;  // Constant payload
    Func func = Func::Sin;
    NodePtr lhs;
    NodePtr rhs;
};

namespace {

const char* func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sqrt: return "sqrt";
        case Func::Abs: return "abs";
    }
    return "?";
}

std::optional<Func> func_from_name(std::string_view name) {
    if (name == "sin") return Func::Sin;
    if (name == "cos") return Func::Cos;
    if (name == "tan") return Func::Tan;
    if (name == "exp") return Func::Exp;
    if (name == "log") return Func::Log;
    if (name == "sqrt") return Func::Sqrt;
    if (name == "abs") return Func::Abs;
    return std::nullopt;
}

std::string format_number(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

// Printing precedence: + - (1), * / (2), unary minus (3), ^ (4), atoms (5).
int precedence(const ExprNode& n) {
    switch (n.kind) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        case Kind::Constant: return n.value < 0.0 ? 3 : 5;
        default: return 5;
    }
}

void print_node(const ExprNode& n, std::string& out);

void print_child(const ExprNode& child, int parent_prec, bool strict,
                 std::string& out) {
    const int prec = precedence(child);
    const bool parens = strict ? prec <= parent_prec : prec < parent_prec;
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case Kind::Constant: out += format_number(n.value); return;
        case Kind::Variable: out += 'x'; return;
        case Kind::Neg:
            out += '-';
            print_child(*n.lhs, 3, false, out);
            return;
        case Kind::Add:
            print_child(*n.lhs, 1, false, out);
            out += '+';
            print_child(*n.rhs, 1, true, out);
            return;
        case Kind::Sub:
            print_child(*n.lhs, 1, false, out);
            out += '-';
            print_child(*n.rhs, 1, true, out);
            return;
        case Kind::Mul:
            print_child(*n.lhs, 2, false, out);
            out += '*';
            print_child(*n.rhs, 2, true, out);
            return;
        case Kind::Div:
            print_child(*n.lhs, 2, false, out);
            out += '/';
            print_child(*n.rhs, 2, true, out);
            return;
        case Kind::Pow:
            print_child(*n.lhs, 4, true, out);
            out += '^';
            print_child(*n.rhs, 4, false, out);
            return;
        case Kind::Call:
            out += func_name(n.func);
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
    }
}

std::string to_source(const NodePtr& n) {
    std::string out;
    print_node(*n, out);
    return out;
}

[[noreturn]] void domain_fail(const NodePtr& n, double x, const std::string& why) {
    std::string sub = to_source(n);
    std::string message = "domain error in '" + sub + "' at x=" +
                          format_number(x) + ": " + why;
    throw DomainError(std::move(message), std::move(sub));
}

bool is_integer(double v) { return std::isfinite(v) && v == std::nearbyint(v); }

double eval_node(const NodePtr& n, double x) {
    switch (n->kind) {
        case Kind::Constant: return n->value;
        case Kind::Variable: return x;
        case Kind::Neg: return -eval_node(n->lhs, x);
        case Kind::Add: {
            const double r = eval_node(n->lhs, x) + eval_node(n->rhs, x);
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
        case Kind::Sub: {
            const double r = eval_node(n->lhs, x) - eval_node(n->rhs, x);
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
        case Kind::Mul: {
            const double r = eval_node(n->lhs, x) * eval_node(n->rhs, x);
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
        case Kind::Div: {
            const double den = eval_node(n->rhs, x);
            if (den == 0.0) domain_fail(n, x, "division by zero");
            const double r = eval_node(n->lhs, x) / den;
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
        case Kind::Pow: {
            const double b = eval_node(n->lhs, x);
            const double e = eval_node(n->rhs, x);
            if (b < 0.0 && !is_integer(e))
                domain_fail(n, x, "negative base with non-integer exponent");
            if (b == 0.0 && e < 0.0)
                domain_fail(n, x, "zero base with negative exponent");
            const double r = std::pow(b, e);
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
        case Kind::Call: {
            const double a = eval_node(n->lhs, x);
            double r = 0.0;
            switch (n->func) {
                case Func::Sin: r = std::sin(a); break;
                case Func::Cos: r = std::cos(a); break;
                case Func::Tan: r = std::tan(a); break;
                case Func::Exp: r = std::exp(a); break;
                case Func::Log:
                    if (a <= 0.0) domain_fail(n, x, "log of non-positive value");
                    r = std::log(a);
                    break;
                case Func::Sqrt:
                    if (a < 0.0) domain_fail(n, x, "sqrt of negative value");
                    r = std::sqrt(a);
                    break;
                case Func::Abs: r = std::fabs(a); break;
            }
            if (!std::isfinite(r)) domain_fail(n, x, "non-finite value");
            return r;
        }
    }
    throw std::logic_error("unreachable expression node kind");
}

// ---- folding constructors -------------------------------------------------

NodePtr make_node(Kind k, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr kconst(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = Kind::Constant;
    n->value = v;
    return n;
}

std::optional<double> const_value(const NodePtr& n) {
    if (n->kind == Kind::Constant) return n->value;
    return std::nullopt;
}

bool is_const(const NodePtr& n, double v) {
    return n->kind == Kind::Constant && n->value == v;
}

NodePtr neg_(NodePtr a) {
    if (auto v = const_value(a)) return kconst(-*v);
    if (a->kind == Kind::Neg) return a->lhs;
    return make_node(Kind::Neg, std::move(a));
}

NodePtr add_(NodePtr a, NodePtr b) {
    const auto va = const_value(a), vb = const_value(b);
    if (va && vb && std::isfinite(*va + *vb)) return kconst(*va + *vb);
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return make_node(Kind::Add, std::move(a), std::move(b));
}

NodePtr sub_(NodePtr a, NodePtr b) {
    const auto va = const_value(a), vb = const_value(b);
    if (va && vb && std::isfinite(*va - *vb)) return kconst(*va - *vb);
    if (is_const(b, 0.0)) return a;
    if (is_const(a, 0.0)) return neg_(std::move(b));
    return make_node(Kind::Sub, std::move(a), std::move(b));
}

NodePtr mul_(NodePtr a, NodePtr b) {
    const auto va = const_value(a), vb = const_value(b);
    if (va && vb && std::isfinite(*va * *vb)) return kconst(*va * *vb);
    if (is_const(a, 0.0) || is_const(b, 0.0)) return kconst(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return make_node(Kind::Mul, std::move(a), std::move(b));
}

NodePtr div_(NodePtr a, NodePtr b) {
    const auto va = const_value(a), vb = const_value(b);
    if (va && vb && *vb != 0.0 && std::isfinite(*va / *vb))
        return kconst(*va / *vb);
    if (is_const(a, 0.0) && !is_const(b, 0.0)) return kconst(0.0);
    if (is_const(b, 1.0)) return a;
    return make_node(Kind::Div, std::move(a), std::move(b));
}

NodePtr pow_(NodePtr a, NodePtr b) {
    const auto va = const_value(a), vb = const_value(b);
    if (va && vb && *va >= 0.0) {
        const double r = std::pow(*va, *vb);
        if (std::isfinite(r)) return kconst(r);
    }
    if (is_const(b, 1.0)) return a;
    if (is_const(b, 0.0)) return kconst(1.0);
    return make_node(Kind::Pow, std::move(a), std::move(b));
}

NodePtr call_(Func f, NodePtr a) {
    if (const auto va = const_value(a)) {
        double r = std::numeric_limits<double>::quiet_NaN();
        switch (f) {
            case Func::Sin: r = std::sin(*va); break;
            case Func::Cos: r = std::cos(*va); break;
            case Func::Tan: r = std::tan(*va); break;
            case Func::Exp: r = std::exp(*va); break;
            case Func::Log: r = *va > 0.0 ? std::log(*va) : r; break;
            case Func::Sqrt: r = *va >= 0.0 ? std::sqrt(*va) : r; break;
            case Func::Abs: r = std::fabs(*va); break;
        }
        if (std::isfinite(r)) return kconst(r);
    }
    auto n = make_node(Kind::Call, std::move(a));
    const_cast<ExprNode&>(*n).func = f;
    return n;
}

// ---- differentiation ------------------------------------------------------

NodePtr diff_node(const NodePtr& n) {
    switch (n->kind) {
        case Kind::Constant: return kconst(0.0);
        case Kind::Variable: return kconst(1.0);
        case Kind::Neg: return neg_(diff_node(n->lhs));
        case Kind::Add: return add_(diff_node(n->lhs), diff_node(n->rhs));
        case Kind::Sub: return sub_(diff_node(n->lhs), diff_node(n->rhs));
        case Kind::Mul:
            return add_(mul_(diff_node(n->lhs), n->rhs),
                        mul_(n->lhs, diff_node(n->rhs)));
        case Kind::Div:
            return div_(sub_(mul_(diff_node(n->lhs), n->rhs),
                             mul_(n->lhs, diff_node(n->rhs))),
                        mul_(n->rhs, n->rhs));
        case Kind::Pow: {
            if (const auto e = const_value(n->rhs)) {
                // d(u^c) = c u^(c-1) u'
                return mul_(mul_(kconst(*e), pow_(n->lhs, kconst(*e - 1.0))),
                            diff_node(n->lhs));
            }
            if (const_value(n->lhs)) {
                // d(c^v) = c^v log(c) v'
                return mul_(pow_(n->lhs, n->rhs),
                            mul_(call_(Func::Log, n->lhs), diff_node(n->rhs)));
            }
            // d(u^v) = u^v (v' log u + v u' / u)
            return mul_(pow_(n->lhs, n->rhs),
                        add_(mul_(diff_node(n->rhs), call_(Func::Log, n->lhs)),
                             div_(mul_(n->rhs, diff_node(n->lhs)), n->lhs)));
        }
        case Kind::Call: {
            NodePtr du = diff_node(n->lhs);
            switch (n->func) {
                case Func::Sin: return mul_(call_(Func::Cos, n->lhs), std::move(du));
                case Func::Cos:
                    return neg_(mul_(call_(Func::Sin, n->lhs), std::move(du)));
                case Func::Tan:
                    return div_(std::move(du),
                                pow_(call_(Func::Cos, n->lhs), kconst(2.0)));
                case Func::Exp: return mul_(call_(Func::Exp, n->lhs), std::move(du));
                case Func::Log: return div_(std::move(du), n->lhs);
                case Func::Sqrt:
                    return div_(std::move(du),
                                mul_(kconst(2.0), call_(Func::Sqrt, n->lhs)));
                case Func::Abs:
                    // |u|' = u/|u| u'; undefined (division by zero) at u = 0.
                    return mul_(div_(n->lhs, call_(Func::Abs, n->lhs)),
                                std::move(du));
            }
        }
    }
    throw std::logic_error("unreachable expression node kind");
}

// ---- parser ----------------------------------------------------------------

struct Token {
    enum Kind {
        Number,
        Ident,
        Plus,
        Minus,
        Star,
        Slash,
        Caret,
        LParen,
        RParen,
        End
    } kind;
    double value = 0.0;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Token::End, 0.0, "", start};

        const char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Token::Plus, 0.0, "+", start};
            case '-': ++pos_; return {Token::Minus, 0.0, "-", start};
            case '*': ++pos_; return {Token::Star, 0.0, "*", start};
            case '/': ++pos_; return {Token::Slash, 0.0, "/", start};
            case '^': ++pos_; return {Token::Caret, 0.0, "^", start};
            case '(': ++pos_; return {Token::LParen, 0.0, "(", start};
            case ')': ++pos_; return {Token::RParen, 0.0, ")", start};
            default: break;
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && pos_ + 1 < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[end])))
                ++end;
            if (end < src_.size() && src_[end] == '.') {
                ++end;
                while (end < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[end])))
                    ++end;
            }
            if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
                std::size_t e = end + 1;
                if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
                if (e < src_.size() &&
                    std::isdigit(static_cast<unsigned char>(src_[e]))) {
                    end = e;
                    while (end < src_.size() &&
                           std::isdigit(static_cast<unsigned char>(src_[end])))
                        ++end;
                }
            }
            double value = 0.0;
            const auto res =
                std::from_chars(src_.data() + pos_, src_.data() + end, value);
            if (res.ec != std::errc{})
                throw ParseError("invalid number at position " +
                                     std::to_string(start),
                                 start);
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {Token::Number, value, std::move(text), start};
        }

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                    src_[end] == '_'))
                ++end;
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {Token::Ident, 0.0, std::move(text), start};
        }

        throw ParseError(std::string("unexpected character '") + c +
                             "' at position " + std::to_string(start),
                         start);
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    NodePtr parse() {
        NodePtr e = expr();
        if (tok_.kind != Token::End)
            fail("unexpected '" + tok_.text + "'");
        return e;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("syntax error at position " + std::to_string(tok_.pos) +
                             ": " + what,
                         tok_.pos);
    }

    NodePtr expr() {
        NodePtr lhs = term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            const bool plus = tok_.kind == Token::Plus;
            advance();
            NodePtr rhs = term();
            lhs = plus ? make_node(Kind::Add, std::move(lhs), std::move(rhs))
                       : make_node(Kind::Sub, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    NodePtr term() {
        NodePtr lhs = factor();
        while (tok_.kind == Token::Star || tok_.kind == Token::Slash) {
            const bool star = tok_.kind == Token::Star;
            advance();
            NodePtr rhs = factor();
            lhs = star ? make_node(Kind::Mul, std::move(lhs), std::move(rhs))
                       : make_node(Kind::Div, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    // factor := '-' factor | power; power := primary ('^' factor)?
    NodePtr factor() {
        if (tok_.kind == Token::Minus) {
            advance();
            return make_node(Kind::Neg, factor());
        }
        return power();
    }

    NodePtr power() {
        NodePtr base = primary();
        if (tok_.kind == Token::Caret) {
            advance();
            return make_node(Kind::Pow, std::move(base), factor());
        }
        return base;
    }

    NodePtr primary() {
        switch (tok_.kind) {
            case Token::Number: {
                NodePtr n = kconst(tok_.value);
                advance();
                return n;
            }
            case Token::LParen: {
                advance();
                NodePtr e = expr();
                if (tok_.kind != Token::RParen) fail("expected ')'");
                advance();
                return e;
            }
            case Token::Ident: {
                const std::string name = tok_.text;
                const std::size_t pos = tok_.pos;
                advance();
                if (tok_.kind == Token::LParen) {
                    const auto f = func_from_name(name);
                    if (!f)
                        throw ParseError("unknown function '" + name +
                                             "' at position " + std::to_string(pos),
                                         pos);
                    advance();
                    NodePtr arg = expr();
                    if (tok_.kind != Token::RParen) fail("expected ')'");
                    advance();
                    auto n = make_node(Kind::Call, std::move(arg));
                    const_cast<ExprNode&>(*n).func = *f;
                    return n;
                }
                if (name == "x") return make_node(Kind::Variable);
                if (name == "pi") return kconst(std::numbers::pi);
                if (name == "e") return kconst(std::numbers::e);
                throw ParseError("unknown identifier '" + name +
                                     "' at position " + std::to_string(pos),
                                 pos);
            }
            default: fail("expected a value");
        }
    }

    Lexer lexer_;
    Token tok_;
};

}  // namespace
}  // namespace detail

using detail::NodePtr;

Expression::Expression() : node_(detail::kconst(0.0)) {}

Expression Expression::parse(std::string_view src) {
    return Expression(detail::Parser(src).parse());
}

Expression Expression::constant(double value) {
    return Expression(detail::kconst(value));
}

Expression Expression::variable() {
    return Expression(detail::make_node(detail::Kind::Variable));
}

double Expression::eval(double x) const { return detail::eval_node(node_, x); }

Expression Expression::derivative() const {
    return Expression(detail::diff_node(node_));
}

std::string Expression::str() const { return detail::to_source(node_); }

bool Expression::is_constant(double* value) const {
    if (node_->kind != detail::Kind::Constant) return false;
    if (value) *value = node_->value;
    return true;
}

Expression operator+(const Expression& a, const Expression& b) {
    return Expression(detail::add_(a.node_, b.node_));
}

Expression operator-(const Expression& a, const Expression& b) {
    return Expression(detail::sub_(a.node_, b.node_));
}

Expression operator*(const Expression& a, const Expression& b) {
    return Expression(detail::mul_(a.node_, b.node_));
}

Expression operator/(const Expression& a, const Expression& b) {
    return Expression(detail::div_(a.node_, b.node_));
}

Expression operator-(const Expression& a) {
    return Expression(detail::neg_(a.node_));
}

Expression pow(const Expression& base, const Expression& exponent) {
    return Expression(detail::pow_(base.node_, exponent.node_));
}

}  // namespace galcurve
