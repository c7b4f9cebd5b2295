#include "udapp/interpreter.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>

namespace udapp::expr {

namespace {

constexpr struct {
    const char* name;
    Function fn;
} kFunctions[] = {
    {"sin", Function::Sin},   {"cos", Function::Cos},     {"tan", Function::Tan},
    {"exp", Function::Exp},   {"ln", Function::Ln},       {"log10", Function::Log10},
    {"sqrt", Function::Sqrt}, {"abs", Function::Abs},
};

std::optional<Function> lookup_function(std::string_view name)
{
    for (const auto& f : kFunctions) {
        if (name == f.name) {
            return f.fn;
        }
    }
    return std::nullopt;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::size_t scan_digits(std::string_view text, std::size_t i)
{
    while (i < text.size() && is_digit(text[i])) {
        ++i;
    }
    return i;
}

// Returns the end of the longest numeric literal starting at `start`.
std::size_t scan_number(std::string_view text, std::size_t start)
{
    std::size_t i = scan_digits(text, start);
    if (i < text.size() && text[i] == '.') {
        i = scan_digits(text, i + 1);
    }
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) {
            ++j;
        }
        // Only an exponent if digits follow; otherwise 'e' starts an identifier.
        if (j < text.size() && is_digit(text[j])) {
            i = scan_digits(text, j);
        }
    }
    return i;
}

NodePtr make(auto value)
{
    return std::make_shared<const Node>(Node{std::move(value)});
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens)
    {
        if (!tokens.empty()) {
            end_ = tokens.back().position + tokens.back().lexeme.size();
        }
    }

    NodePtr parse_all()
    {
        NodePtr root = expr();
        if (!at_end()) {
            throw ParseError(peek().position, "operator or end of input");
        }
        return root;
    }

private:
    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }
    std::size_t here() const { return at_end() ? end_ : peek().position; }

    bool peek_op(char op) const
    {
        return !at_end() && peek().kind == TokenKind::Op && peek().lexeme[0] == op;
    }

    bool peek_kind(TokenKind kind) const { return !at_end() && peek().kind == kind; }

    void expect(TokenKind kind, const char* what)
    {
        if (!peek_kind(kind)) {
            throw ParseError(here(), what);
        }
        ++pos_;
    }

    NodePtr expr()
    {
        NodePtr left = term();
        while (peek_op('+') || peek_op('-')) {
            const BinaryOp op = peek().lexeme[0] == '+' ? BinaryOp::Add : BinaryOp::Sub;
            ++pos_;
            left = make(Binary{op, left, term()});
        }
        return left;
    }

    NodePtr term()
    {
        NodePtr left = unary();
        while (peek_op('*') || peek_op('/')) {
            const BinaryOp op = peek().lexeme[0] == '*' ? BinaryOp::Mul : BinaryOp::Div;
            ++pos_;
            left = make(Binary{op, left, unary()});
        }
        return left;
    }

    NodePtr unary()
    {
        if (peek_op('-')) {
            ++pos_;
            return make(Negate{unary()});
        }
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (peek_op('^')) {
            ++pos_;
            return make(Binary{BinaryOp::Pow, base, unary()});
        }
        return base;
    }

    NodePtr atom()
    {
        if (at_end()) {
            throw ParseError(end_, "operand");
        }
        const Token& tok = peek();
        switch (tok.kind) {
        case TokenKind::Number: {
            ++pos_;
            return make(Number{std::strtod(tok.lexeme.c_str(), nullptr)});
        }
        case TokenKind::LParen: {
            ++pos_;
            NodePtr inner = expr();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        case TokenKind::Ident: return identifier();
        default: throw ParseError(tok.position, "operand");
        }
    }

    NodePtr identifier()
    {
        const Token& tok = peek();
        ++pos_;
        if (tok.lexeme == "x") {
            return make(Variable{});
        }
        if (tok.lexeme == "pi") {
            return make(ConstantRef{Constant::Pi});
        }
        if (tok.lexeme == "e") {
            return make(ConstantRef{Constant::E});
        }
        const auto fn = lookup_function(tok.lexeme);
        if (!peek_kind(TokenKind::LParen)) {
            if (fn) {
                throw ParseError(here(), "'(' after " + tok.lexeme);
            }
            throw ParseError(tok.position, "'x', 'pi', 'e' or a function call");
        }
        if (!fn) {
            throw UnknownFunction(tok.position, tok.lexeme);
        }
        ++pos_;
        NodePtr arg = expr();
        expect(TokenKind::RParen, "')'");
        return make(Call{*fn, arg});
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
    std::size_t end_ = 0;
};

bool equal(const Node& a, const Node& b)
{
    if (a.value.index() != b.value.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.value);
            if constexpr (std::is_same_v<T, Number>) {
                return lhs.value == rhs.value ||
                       (std::isnan(lhs.value) && std::isnan(rhs.value));
            } else if constexpr (std::is_same_v<T, Variable>) {
                return true;
            } else if constexpr (std::is_same_v<T, ConstantRef>) {
                return lhs.which == rhs.which;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return equal(*lhs.child, *rhs.child);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return lhs.op == rhs.op && equal(*lhs.left, *rhs.left) &&
                       equal(*lhs.right, *rhs.right);
            } else {
                return lhs.fn == rhs.fn && equal(*lhs.arg, *rhs.arg);
            }
        },
        a.value);
}

double apply(Function fn, double v)
{
    switch (fn) {
    case Function::Sin: return std::sin(v);
    case Function::Cos: return std::cos(v);
    case Function::Tan: return std::tan(v);
    case Function::Exp: return std::exp(v);
    case Function::Ln: return std::log(v);
    case Function::Log10: return std::log10(v);
    case Function::Sqrt: return std::sqrt(v);
    case Function::Abs: return std::fabs(v);
    }
    return std::nan("");
}

double eval(const Node& node, double x)
{
    return std::visit(
        [x](const auto& n) -> double {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Number>) {
                return n.value;
            } else if constexpr (std::is_same_v<T, Variable>) {
                return x;
            } else if constexpr (std::is_same_v<T, ConstantRef>) {
                return n.which == Constant::Pi ? std::numbers::pi : std::numbers::e;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval(*n.child, x);
            } else if constexpr (std::is_same_v<T, Binary>) {
                const double l = eval(*n.left, x);
                const double r = eval(*n.right, x);
                switch (n.op) {
                case BinaryOp::Add: return l + r;
                case BinaryOp::Sub: return l - r;
                case BinaryOp::Mul: return l * r;
                case BinaryOp::Div: return l / r;
                case BinaryOp::Pow: return std::pow(l, r);
                }
                return std::nan("");
            } else {
                return apply(n.fn, eval(*n.arg, x));
            }
        },
        node.value);
}

void write(const Node& node, std::string& out)
{
    std::visit(
        [&out](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Number>) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.17g", n.value);
                out += buf;
            } else if constexpr (std::is_same_v<T, Variable>) {
                out += 'x';
            } else if constexpr (std::is_same_v<T, ConstantRef>) {
                out += n.which == Constant::Pi ? "pi" : "e";
            } else if constexpr (std::is_same_v<T, Negate>) {
                out += "(-";
                write(*n.child, out);
                out += ')';
            } else if constexpr (std::is_same_v<T, Binary>) {
                static constexpr char kOps[] = {'+', '-', '*', '/', '^'};
                out += '(';
                write(*n.left, out);
                out += kOps[static_cast<int>(n.op)];
                write(*n.right, out);
                out += ')';
            } else {
                out += function_name(n.fn);
                out += '(';
                write(*n.arg, out);
                out += ')';
            }
        },
        node.value);
}

} // namespace

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
            i = scan_number(text, i);
            std::string lexeme(text.substr(start, i - start));
            errno = 0;
            const double v = std::strtod(lexeme.c_str(), nullptr);
            if (errno == ERANGE && std::isinf(v)) {
                throw LexError(start, "number out of range");
            }
            tokens.push_back({TokenKind::Number, std::move(lexeme), start});
        } else if (is_ident_start(c)) {
            while (i < text.size() && is_ident_char(text[i])) {
                ++i;
            }
            tokens.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
        } else {
            TokenKind kind;
            switch (c) {
            case '+':
            case '-':
            case '*':
            case '/':
            case '^': kind = TokenKind::Op; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ',': kind = TokenKind::Comma; break;
            default: throw LexError(start, std::string("illegal character '") + c + "'");
            }
            tokens.push_back({kind, std::string(1, c), start});
            ++i;
        }
    }
    return tokens;
}

bool Ast::operator==(const Ast& other) const
{
    return equal(*root_, *other.root_);
}

Ast parse(const std::vector<Token>& tokens)
{
    return Ast(Parser(tokens).parse_all());
}

Ast parse(std::string_view text)
{
    return parse(tokenize(text));
}

double evaluate(const Ast& ast, double x)
{
    return eval(ast.root(), x);
}

std::string unparse(const Ast& ast)
{
    std::string out;
    write(ast.root(), out);
    return out;
}

const char* function_name(Function fn)
{
    for (const auto& f : kFunctions) {
        if (f.fn == fn) {
            return f.name;
        }
    }
    return "?";
}

std::vector<Sample> sample_curve(const Ast& ast, double x_min, double x_max, std::size_t n)
{
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
        throw Error(ErrorCode::BadRange, "sample_curve needs finite x_min < x_max");
    }
    if (n < 2) {
        throw Error(ErrorCode::BadRange, "sample_curve needs at least 2 samples");
    }
    std::vector<Sample> out;
    out.reserve(n);
    const double step = (x_max - x_min) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = i + 1 == n ? x_max : x_min + static_cast<double>(i) * step;
        const double y = evaluate(ast, x);
        out.push_back({x, y, std::isfinite(y)});
    }
    return out;
}

} // namespace udapp::expr
