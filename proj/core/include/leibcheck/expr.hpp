#pragma once

#include "leibcheck/quadext.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace leibcheck {

using ParamAssignment = std::map<std::string, Gaussian>;

// Coefficient expressions:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | '(' expr ')' | rational | 'i' | name | 'sqrt' '(' expr ')'
//   rational := int ('/' posint)?
// sqrt is accepted only when the parser is asked for it (witness files).
class CoeffExpr {
public:
    enum class Op { Num, I, Param, Neg, Add, Sub, Mul, Div, Sqrt };

    CoeffExpr() : CoeffExpr(Rational(0)) {}
    explicit CoeffExpr(const Rational& value);

    static CoeffExpr parse(std::string_view text, bool allow_sqrt = false);

    Gaussian eval(const ParamAssignment& params = {}) const;
    QuadExt eval_ext(const ParamAssignment& params = {}) const;

    std::set<std::string> params() const;
    bool is_constant_zero() const { return node_->op == Op::Num && node_->value.is_zero(); }

    // Canonical text: no spaces, minimal parentheses.
    std::string to_string() const;

    friend bool operator==(const CoeffExpr& a, const CoeffExpr& b) { return a.to_string() == b.to_string(); }

private:
    struct Node {
        Op op = Op::Num;
        Rational value;
        std::string name;
        std::shared_ptr<const Node> lhs, rhs;
    };
    using NodePtr = std::shared_ptr<const Node>;
    explicit CoeffExpr(NodePtr n) : node_(std::move(n)) {}

    friend class ExprParser;
    static std::string render(const Node& n);
    static int level(const Node& n);
    template <class T, class Leaf>
    static T evaluate(const Node& n, const ParamAssignment& params, Leaf&& leaf);
    static void collect(const Node& n, std::set<std::string>& out);

    NodePtr node_;
};

// Parameter assignment grammar: "alpha=2,beta=1/2-i".
ParamAssignment parse_assignment(std::string_view text);
std::string assignment_to_string(const ParamAssignment& p);

}  // namespace leibcheck
