#pragma once

// Math expression interpreter for functions of x.
//
// Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?          right-associative, tighter than unary minus
//   atom  := number | 'x' | 'pi' | 'e' | ident '(' expr ')' | '(' expr ')'
//
// There is no implicit multiplication: "2x" is rejected.

#include "udapp/error.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace udapp::expr {

enum class TokenKind { Number, Ident, Op, LParen, RParen, Comma };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position = 0;

    bool operator==(const Token&) const = default;
};

/** Raised for an illegal character. */
class LexError : public PositionedError {
public:
    LexError(std::size_t position, const std::string& reason)
        : PositionedError(ErrorCode::LexError, position, reason)
    {
    }
};

class ParseError : public PositionedError {
public:
    ParseError(std::size_t position, const std::string& expected)
        : PositionedError(ErrorCode::ParseError, position, "expected " + expected)
    {
    }
};

class UnknownFunction : public PositionedError {
public:
    UnknownFunction(std::size_t position, const std::string& name)
        : PositionedError(ErrorCode::UnknownFunction, position, "unknown function '" + name + "'"),
          name_(name)
    {
    }

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

std::vector<Token> tokenize(std::string_view text);

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class Constant { Pi, E };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Tan, Exp, Ln, Log10, Sqrt, Abs };

struct Number {
    double value;
};
struct Variable {};
struct ConstantRef {
    Constant which;
};
struct Negate {
    NodePtr child;
};
struct Binary {
    BinaryOp op;
    NodePtr left;
    NodePtr right;
};
struct Call {
    Function fn;
    NodePtr arg;
};

struct Node {
    std::variant<Number, Variable, ConstantRef, Negate, Binary, Call> value;
};

/** Immutable parsed expression; cheap to copy and safe to share. */
class Ast {
public:
    explicit Ast(NodePtr root) : root_(std::move(root)) {}

    const Node& root() const { return *root_; }

    /** Structural equality. */
    bool operator==(const Ast& other) const;

private:
    NodePtr root_;
};

Ast parse(const std::vector<Token>& tokens);
Ast parse(std::string_view text);

/** IEEE semantics; domain violations give non-finite values. */
double evaluate(const Ast& ast, double x);

/** Fully parenthesized text that parses back to the same tree. */
std::string unparse(const Ast& ast);

const char* function_name(Function fn);

struct Sample {
    double x;
    double y;
    bool finite;
};

/** `n` evaluations at uniform steps over [x_min, x_max]. Throws BadRange. */
std::vector<Sample> sample_curve(const Ast& ast, double x_min, double x_max, std::size_t n);

} // namespace udapp::expr
