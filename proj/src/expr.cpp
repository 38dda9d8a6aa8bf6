#include "rrid/expr.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace rrid {

struct Expr::Node {
    enum class Kind { constant, var_n, var_s, parity, negate, add, subtract, multiply, divide };

    Kind kind;
    std::int64_t value = 0;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

NodePtr make(Kind kind, NodePtr left = nullptr, NodePtr right = nullptr, std::int64_t value = 0)
{
    return std::make_shared<const Node>(Node{kind, value, std::move(left), std::move(right)});
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t eval(const Node &node, Bindings b)
{
    switch (node.kind) {
    case Kind::constant:
        return node.value;
    case Kind::var_n:
        return b.n;
    case Kind::var_s:
        return b.s;
    case Kind::parity: {
        const std::int64_t x = eval(*node.left, b);
        return ((x % 2) + 2) % 2;
    }
    case Kind::negate:
        return -eval(*node.left, b);
    case Kind::add:
        return eval(*node.left, b) + eval(*node.right, b);
    case Kind::subtract:
        return eval(*node.left, b) - eval(*node.right, b);
    case Kind::multiply:
        return eval(*node.left, b) * eval(*node.right, b);
    case Kind::divide: {
        const std::int64_t divisor = eval(*node.right, b);
        if (divisor <= 0) {
            throw ExprError("division by nonpositive value " + std::to_string(divisor));
        }
        return floor_div(eval(*node.left, b), divisor);
    }
    }
    throw ExprError("corrupt expression node");
}

int precedence(const Node &node)
{
    switch (node.kind) {
    case Kind::add:
    case Kind::subtract:
        return 1;
    case Kind::multiply:
    case Kind::divide:
        return 2;
    case Kind::negate:
        return 3;
    default:
        return 4;
    }
}

std::string print(const Node &node);

std::string print_operand(const Node &child, int min_precedence)
{
    std::string text = print(child);
    return precedence(child) < min_precedence ? "(" + text + ")" : text;
}

std::string print(const Node &node)
{
    switch (node.kind) {
    case Kind::constant:
        return std::to_string(node.value);
    case Kind::var_n:
        return "n";
    case Kind::var_s:
        return "s";
    case Kind::parity:
        return "par(" + print(*node.left) + ")";
    case Kind::negate:
        return "-" + print_operand(*node.left, 3);
    case Kind::add:
        return print_operand(*node.left, 1) + " + " + print_operand(*node.right, 2);
    case Kind::subtract:
        return print_operand(*node.left, 1) + " - " + print_operand(*node.right, 2);
    case Kind::multiply:
        return print_operand(*node.left, 2) + "*" + print_operand(*node.right, 3);
    case Kind::divide:
        return print_operand(*node.left, 2) + "/" + print_operand(*node.right, 3);
    }
    throw ExprError("corrupt expression node");
}

bool mentions_slot(const Node &node)
{
    if (node.kind == Kind::var_s) {
        return true;
    }
    return (node.left && mentions_slot(*node.left)) || (node.right && mentions_slot(*node.right));
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr expression()
    {
        NodePtr node = product();
        while (true) {
            skip_space();
            if (accept('+')) {
                node = make(Kind::add, node, product());
            } else if (peek() == '-') {
                ++pos_;
                node = make(Kind::subtract, node, product());
            } else {
                return node;
            }
        }
    }

    std::optional<std::string_view> relation()
    {
        skip_space();
        for (std::string_view op : {"<=", ">=", "==", "!=", "<", ">"}) {
            if (text_.substr(pos_, op.size()) == op) {
                pos_ += op.size();
                return op;
            }
        }
        return std::nullopt;
    }

    bool keyword(std::string_view word)
    {
        skip_space();
        if (text_.substr(pos_, word.size()) == word
            && (pos_ + word.size() == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + word.size()])))) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }

    [[noreturn]] void fail(const std::string &what) const
    {
        throw ExprError("cannot parse '" + std::string(text_) + "' at column " + std::to_string(pos_ + 1) + ": " + what);
    }

private:
    NodePtr product()
    {
        NodePtr node = unary();
        while (true) {
            skip_space();
            if (accept('*')) {
                node = make(Kind::multiply, node, unary());
            } else if (accept('/')) {
                node = make(Kind::divide, node, unary());
            } else {
                return node;
            }
        }
    }

    NodePtr unary()
    {
        skip_space();
        if (accept('-')) {
            return make(Kind::negate, unary());
        }
        return atom();
    }

    NodePtr atom()
    {
        skip_space();
        if (accept('(')) {
            NodePtr inner = expression();
            expect(')');
            return inner;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::int64_t value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const int digit = text_[pos_++] - '0';
                if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
                    fail("integer literal too large");
                }
                value = value * 10 + digit;
            }
            return make(Kind::constant, nullptr, nullptr, value);
        }
        if (keyword("par")) {
            expect('(');
            NodePtr inner = expression();
            expect(')');
            return make(Kind::parity, inner);
        }
        if (keyword("n")) {
            return make(Kind::var_n);
        }
        if (keyword("s")) {
            return make(Kind::var_s);
        }
        fail("expected a number, n, s, par(...) or '('");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Condition::Relation relation_from(std::string_view op)
{
    using R = Condition::Relation;
    if (op == "<") return R::less;
    if (op == "<=") return R::less_equal;
    if (op == "==") return R::equal;
    if (op == "!=") return R::not_equal;
    if (op == ">=") return R::greater_equal;
    return R::greater;
}

std::string_view relation_text(Condition::Relation r)
{
    using R = Condition::Relation;
    switch (r) {
    case R::less: return "<";
    case R::less_equal: return "<=";
    case R::equal: return "==";
    case R::not_equal: return "!=";
    case R::greater_equal: return ">=";
    case R::greater: return ">";
    }
    return "?";
}

} // namespace

Expr Expr::parse(std::string_view text)
{
    Parser parser(text);
    NodePtr root = parser.expression();
    if (!parser.at_end()) {
        parser.fail("unexpected trailing input");
    }
    return Expr(std::move(root));
}

Expr Expr::constant(std::int64_t value)
{
    if (value < 0) {
        return Expr(make(Kind::negate, make(Kind::constant, nullptr, nullptr, -value)));
    }
    return Expr(make(Kind::constant, nullptr, nullptr, value));
}

std::int64_t Expr::evaluate(Bindings b) const
{
    return eval(*root_, b);
}

std::string Expr::to_string() const
{
    return print(*root_);
}

bool Expr::uses_slot() const
{
    return mentions_slot(*root_);
}

Condition Condition::parse(std::string_view text)
{
    Parser parser(text);
    std::vector<Comparison> terms;
    do {
        NodePtr lhs = parser.expression();
        const auto op = parser.relation();
        if (!op) {
            parser.fail("expected a comparison operator");
        }
        NodePtr rhs = parser.expression();
        terms.push_back(Comparison{Expr(std::move(lhs)), relation_from(*op), Expr(std::move(rhs))});
    } while (parser.keyword("and"));
    if (!parser.at_end()) {
        parser.fail("unexpected trailing input");
    }
    return Condition(std::move(terms));
}

bool Condition::holds(Bindings b) const
{
    for (const auto &t : terms_) {
        const std::int64_t l = t.lhs.evaluate(b);
        const std::int64_t r = t.rhs.evaluate(b);
        bool ok = false;
        switch (t.relation) {
        case Relation::less: ok = l < r; break;
        case Relation::less_equal: ok = l <= r; break;
        case Relation::equal: ok = l == r; break;
        case Relation::not_equal: ok = l != r; break;
        case Relation::greater_equal: ok = l >= r; break;
        case Relation::greater: ok = l > r; break;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

std::string Condition::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) {
            out += " and ";
        }
        out += terms_[i].lhs.to_string();
        out += ' ';
        out += relation_text(terms_[i].relation);
        out += ' ';
        out += terms_[i].rhs.to_string();
    }
    return out;
}

} // namespace rrid
