#include "leibcheck/expr.hpp"

#include "leibcheck/error.hpp"
#include "leibcheck/scalar.hpp"

#include <cctype>

namespace leibcheck {

class ExprParser {
public:
    ExprParser(std::string_view text, bool allow_sqrt) : s_(text), sqrt_(allow_sqrt) {}

    CoeffExpr run() {
        auto n = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return CoeffExpr(n);
    }

private:
    using Node = CoeffExpr::Node;
    using NodePtr = CoeffExpr::NodePtr;
    using Op = CoeffExpr::Op;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::SyntaxError, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Op op, NodePtr l = nullptr, NodePtr r = nullptr) {
        auto n = std::make_shared<Node>();
        n->op = op;
        n->lhs = std::move(l);
        n->rhs = std::move(r);
        return n;
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (eat('+')) left = make(Op::Add, left, term());
            else if (eat('-')) left = make(Op::Sub, left, term());
            else return left;
        }
    }

    NodePtr term() {
        NodePtr left = factor();
        for (;;) {
            if (eat('*')) left = make(Op::Mul, left, factor());
            else if (eat('/')) left = make(Op::Div, left, factor());
            else return left;
        }
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    NodePtr factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return make(Op::Neg, factor());
        }
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            // int '/' posint with no intervening space is a single literal
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                std::string den = digits();
                if (mpz_class(den) == 0) fail("zero denominator");
                num += "/" + den;
            }
            auto n = make(Op::Num);
            std::const_pointer_cast<Node>(n)->value = Rational::parse(num);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == "i") return make(Op::I);
            if (name == "sqrt") {
                if (!sqrt_) fail("sqrt is only allowed in witness files");
                if (!eat('(')) fail("expected '(' after sqrt");
                NodePtr inner = expr();
                if (!eat(')')) fail("missing ')'");
                return make(Op::Sqrt, inner);
            }
            auto n = make(Op::Param);
            std::const_pointer_cast<Node>(n)->name = name;
            return n;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    bool sqrt_;
    std::size_t pos_ = 0;
};

CoeffExpr::CoeffExpr(const Rational& value) {
    if (value.sign() < 0) {
        auto inner = std::make_shared<Node>();
        inner->value = -value;
        auto n = std::make_shared<Node>();
        n->op = Op::Neg;
        n->lhs = inner;
        node_ = n;
    } else {
        auto n = std::make_shared<Node>();
        n->value = value;
        node_ = n;
    }
}

CoeffExpr CoeffExpr::parse(std::string_view text, bool allow_sqrt) { return ExprParser(text, allow_sqrt).run(); }

template <class T, class Leaf>
T CoeffExpr::evaluate(const Node& n, const ParamAssignment& params, Leaf&& leaf) {
    switch (n.op) {
        case Op::Num: return T(Gaussian(n.value));
        case Op::I: return T(Gaussian::i());
        case Op::Param: {
            auto it = params.find(n.name);
            if (it == params.end()) throw Error(Errc::SyntaxError, "unbound parameter '" + n.name + "'");
            return T(it->second);
        }
        case Op::Neg: return -evaluate<T>(*n.lhs, params, leaf);
        case Op::Add: return evaluate<T>(*n.lhs, params, leaf) + evaluate<T>(*n.rhs, params, leaf);
        case Op::Sub: return evaluate<T>(*n.lhs, params, leaf) - evaluate<T>(*n.rhs, params, leaf);
        case Op::Mul: return evaluate<T>(*n.lhs, params, leaf) * evaluate<T>(*n.rhs, params, leaf);
        case Op::Div: return evaluate<T>(*n.lhs, params, leaf) / evaluate<T>(*n.rhs, params, leaf);
        case Op::Sqrt: return leaf(evaluate<T>(*n.lhs, params, leaf));
    }
    throw Error(Errc::SyntaxError, "corrupt expression");
}

Gaussian CoeffExpr::eval(const ParamAssignment& params) const {
    return evaluate<Gaussian>(*node_, params, [](const Gaussian& x) -> Gaussian {
        auto r = gaussian_sqrt(x);
        if (!r) throw Error(Errc::FieldMismatch, "sqrt(" + x.to_string() + ") is not in Q(i)");
        return *r;
    });
}

QuadExt CoeffExpr::eval_ext(const ParamAssignment& params) const {
    return evaluate<QuadExt>(*node_, params, [](const QuadExt& x) -> QuadExt {
        if (!x.in_base()) throw Error(Errc::FieldMismatch, "nested square root");
        if (x.is_zero()) return QuadExt();
        return sqrt_in_field(x.a()).value;
    });
}

void CoeffExpr::collect(const Node& n, std::set<std::string>& out) {
    if (n.op == Op::Param) out.insert(n.name);
    if (n.lhs) collect(*n.lhs, out);
    if (n.rhs) collect(*n.rhs, out);
}

std::set<std::string> CoeffExpr::params() const {
    std::set<std::string> out;
    collect(*node_, out);
    return out;
}

int CoeffExpr::level(const Node& n) {
    switch (n.op) {
        case Op::Add:
        case Op::Sub: return 1;
        case Op::Mul:
        case Op::Div: return 2;
        case Op::Neg: return 3;
        default: return 4;
    }
}

std::string CoeffExpr::render(const Node& n) {
    auto wrap = [](const Node& c, bool paren) { return paren ? "(" + render(c) + ")" : render(c); };
    switch (n.op) {
        case Op::Num: return n.value.to_string();
        case Op::I: return "i";
        case Op::Param: return n.name;
        case Op::Sqrt: return "sqrt(" + render(*n.lhs) + ")";
        case Op::Neg: return "-" + wrap(*n.lhs, level(*n.lhs) < 3);
        case Op::Add: return wrap(*n.lhs, false) + "+" + wrap(*n.rhs, level(*n.rhs) < 2);
        case Op::Sub: return wrap(*n.lhs, false) + "-" + wrap(*n.rhs, level(*n.rhs) < 2);
        case Op::Mul:
        case Op::Div: {
            // A rational literal on the left of '/' would fuse with an integer
            // on the right ("1/2" then "/3" is fine, but "1" "/" "2" is not).
            bool right_paren = level(*n.rhs) < 3 || (n.op == Op::Div && n.rhs->op == Op::Num) ||
                               (n.rhs->op == Op::Num && !n.rhs->value.is_integer());
            bool left_paren = level(*n.lhs) < 2;
            std::string l = wrap(*n.lhs, left_paren);
            if (n.op == Op::Div && n.lhs->op == Op::Num && n.lhs->value.is_integer() && n.rhs->op == Op::Num)
                l = "(" + l + ")";
            return l + (n.op == Op::Mul ? "*" : "/") + wrap(*n.rhs, right_paren);
        }
    }
    return "?";
}

std::string CoeffExpr::to_string() const { return render(*node_); }

ParamAssignment parse_assignment(std::string_view text) {
    ParamAssignment out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view item = text.substr(pos, comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw Error(Errc::SyntaxError, "expected name=value in '" + std::string(item) + "'");
        std::string name(item.substr(0, eq));
        CoeffExpr value = CoeffExpr::parse(item.substr(eq + 1));
        if (!value.params().empty()) throw Error(Errc::SyntaxError, "parameter value must be a constant");
        out[name] = value.eval();
        pos = comma + 1;
    }
    return out;
}

std::string assignment_to_string(const ParamAssignment& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
    return s;
}

}  // namespace leibcheck
