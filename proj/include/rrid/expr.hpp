#pragma once

// Small integer expression language for profile rules.
//
//   expr      := sum
//   sum       := product (('+' | '-') product)*
//   product   := unary (('*' | '/') unary)*       '/' is floor division by a positive value
//   unary     := '-' unary | atom
//   atom      := INTEGER | 'n' | 's' | 'par' '(' expr ')' | '(' expr ')'
//   condition := compare ('and' compare)*
//   compare   := expr ('<' | '<=' | '==' | '!=' | '>=' | '>') expr
//
// par(x) is 0 for even x and 1 for odd x. to_string() produces a canonical
// spelling that parses back to the same tree, so catalog files written in
// canonical form round-trip byte for byte.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rrid {

class ExprError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Bindings {
    std::int64_t n = 0;
    std::int64_t s = 0;
};

class Expr {
public:
    /// Throws ExprError on a syntax error.
    static Expr parse(std::string_view text);
    static Expr constant(std::int64_t value);

    /// Throws ExprError on division by a nonpositive value.
    std::int64_t evaluate(Bindings b) const;
    std::string to_string() const;
    /// True if the variable s appears anywhere.
    bool uses_slot() const;

    struct Node;

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;

    friend class Condition;
};

class Condition {
public:
    enum class Relation { less, less_equal, equal, not_equal, greater_equal, greater };

    static Condition parse(std::string_view text);

    bool holds(Bindings b) const;
    std::string to_string() const;

private:
    struct Comparison {
        Expr lhs;
        Relation relation;
        Expr rhs;
    };
    explicit Condition(std::vector<Comparison> terms) : terms_(std::move(terms)) {}
    std::vector<Comparison> terms_;
};

} // namespace rrid
