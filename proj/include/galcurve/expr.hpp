#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace galcurve {

/// Malformed expression source. position() is the byte offset of the
/// offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), pos_(position) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Evaluation left the mathematical domain of some subexpression
/// (log of a non-positive value, division by zero, ...). subexpression()
/// is the offending subtree printed back as source text.
class DomainError : public std::runtime_error {
public:
    DomainError(const std::string& message, std::string subexpression)
        : std::runtime_error(message), subexpr_(std::move(subexpression)) {}
    const std::string& subexpression() const { return subexpr_; }

private:
    std::string subexpr_;
};

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
}  // namespace detail

/// Immutable univariate real function in the variable "x".
///
/// Grammar: numbers, "x", named constants pi and e, functions
/// sin cos tan exp log sqrt abs, binary + - * / ^ and unary minus.
/// ^ binds tightest and is right-associative, then unary minus,
/// then * /, then + -.
///
/// Expressions are closed under symbolic differentiation; derivatives are
/// exact ASTs with constant folding but no further simplification.
/// Handles share subtrees; all operations are const and thread-safe.
class Expression {
public:
    /// The constant 0.
    Expression();

    static Expression parse(std::string_view src);
    static Expression constant(double value);
    static Expression variable();

    double eval(double x) const;
    double operator()(double x) const { return eval(x); }

    Expression derivative() const;

    /// Prints back to parseable source. Reparsing evaluates identically.
    std::string str() const;

    /// True when the tree is a single folded constant.
    bool is_constant(double* value = nullptr) const;

    friend Expression operator+(const Expression&, const Expression&);
    friend Expression operator-(const Expression&, const Expression&);
    friend Expression operator*(const Expression&, const Expression&);
    friend Expression operator/(const Expression&, const Expression&);
    friend Expression operator-(const Expression&);
    friend Expression pow(const Expression& base, const Expression& exponent);

private:
    explicit Expression(detail::NodePtr node) : node_(std::move(node)) {}
    detail::NodePtr node_;
};

}  // namespace galcurve
