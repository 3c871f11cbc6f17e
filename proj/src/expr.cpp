#include "glt/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

namespace glt {

namespace {

ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

ExprPtr number(double v) {
    ExprNode n;
    n.kind = ExprNode::Kind::Number;
    n.number = v;
    return make(std::move(n));
}

ExprPtr unary(ExprNode::Kind k, ExprPtr a) {
    ExprNode n;
    n.kind = k;
    n.lhs = std::move(a);
    return make(std::move(n));
}

ExprPtr binary(ExprNode::Kind k, ExprPtr a, ExprPtr b) {
    ExprNode n;
    n.kind = k;
    n.lhs = std::move(a);
    n.rhs = std::move(b);
    return make(std::move(n));
}

bool is_function_name(const std::string& s) {
    return s == "sin" || s == "cos" || s == "exp" || s == "log" || s == "abs" || s == "sqrt";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        if (!var_.empty()) {
            // record which symbol the expression is over (checked by atom()).
        }
        return e;
    }

    std::string variable() const { return var_; }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::string var_;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = binary(ExprNode::Kind::Add, e, term());
            else if (eat('-'))
                e = binary(ExprNode::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary_expr();
        for (;;) {
            if (eat('*'))
                e = binary(ExprNode::Kind::Mul, e, unary_expr());
            else if (eat('/'))
                e = binary(ExprNode::Kind::Div, e, unary_expr());
            else
                return e;
        }
    }

    ExprPtr unary_expr() {
        if (eat('-')) return unary(ExprNode::Kind::Neg, unary_expr());
        if (eat('+')) return unary_expr();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (eat('^')) return binary(ExprNode::Kind::Pow, base, unary_expr());
        return base;
    }

    ExprPtr atom() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit((unsigned char)c) || c == '.') return parse_number();
        if (std::isalpha((unsigned char)c)) return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    ExprPtr parse_number() {
        const char* begin = s_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("malformed number", pos_);
        pos_ += (std::size_t)(end - begin);
        if (!std::isfinite(v)) throw ParseError("number literal out of range", pos_);
        return number(v);
    }

    ExprPtr parse_ident() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha((unsigned char)s_[pos_])) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        if (id == "pi") {
            ExprNode n;
            n.kind = ExprNode::Kind::Pi;
            return make(std::move(n));
        }
        if (id == "x" || id == "t") {
            if (!var_.empty() && var_ != id)
                throw ParseError("expression mixes variables 'x' and 't'", start);
            var_ = id;
            ExprNode n;
            n.kind = ExprNode::Kind::Var;
            n.name = id;
            return make(std::move(n));
        }
        if (is_function_name(id)) {
            if (!eat('(')) throw ParseError("expected '(' after function name", pos_);
            ExprPtr arg = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            ExprNode n;
            n.kind = ExprNode::Kind::Call;
            n.name = id;
            n.lhs = std::move(arg);
            return make(std::move(n));
        }
        throw ParseError("unknown identifier '" + id + "'", start);
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
    Parser p(text);
    return p.parse();
}

double eval_expression(const ExprNode& e, double t) {
    using K = ExprNode::Kind;
    auto finite = [](double v, const char* what) {
        if (!std::isfinite(v)) throw NumericError(std::string("singular evaluation in ") + what);
        return v;
    };
    switch (e.kind) {
        case K::Number: return e.number;
        case K::Pi: return std::numbers::pi;
        case K::Var: return t;
        case K::Neg: return -eval_expression(*e.lhs, t);
        case K::Add: return eval_expression(*e.lhs, t) + eval_expression(*e.rhs, t);
        case K::Sub: return eval_expression(*e.lhs, t) - eval_expression(*e.rhs, t);
        case K::Mul: return eval_expression(*e.lhs, t) * eval_expression(*e.rhs, t);
        case K::Div: return finite(eval_expression(*e.lhs, t) / eval_expression(*e.rhs, t), "division");
        case K::Pow: return finite(std::pow(eval_expression(*e.lhs, t), eval_expression(*e.rhs, t)), "power");
        case K::Call: {
            double a = eval_expression(*e.lhs, t);
            if (e.name == "sin") return std::sin(a);
            if (e.name == "cos") return std::cos(a);
            if (e.name == "exp") return finite(std::exp(a), "exp");
            if (e.name == "log") return finite(std::log(a), "log");
            if (e.name == "abs") return std::abs(a);
            if (e.name == "sqrt") return finite(std::sqrt(a), "sqrt");
            throw NumericError("unknown function '" + e.name + "'");
        }
    }
    throw NumericError("corrupt expression node");
}

std::string print_expression(const ExprNode& e) {
    using K = ExprNode::Kind;
    switch (e.kind) {
        case K::Number: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", e.number);
            return buf;
        }
        case K::Pi: return "pi";
        case K::Var: return e.name;
        case K::Neg: return "(-" + print_expression(*e.lhs) + ")";
        case K::Add: return "(" + print_expression(*e.lhs) + "+" + print_expression(*e.rhs) + ")";
        case K::Sub: return "(" + print_expression(*e.lhs) + "-" + print_expression(*e.rhs) + ")";
        case K::Mul: return "(" + print_expression(*e.lhs) + "*" + print_expression(*e.rhs) + ")";
        case K::Div: return "(" + print_expression(*e.lhs) + "/" + print_expression(*e.rhs) + ")";
        case K::Pow: return "(" + print_expression(*e.lhs) + "^" + print_expression(*e.rhs) + ")";
        case K::Call: return e.name + "(" + print_expression(*e.lhs) + ")";
    }
    return "?";
}

bool expr_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    using K = ExprNode::Kind;
    switch (a.kind) {
        case K::Number: return a.number == b.number;
        case K::Pi: return true;
        case K::Var: return a.name == b.name;
        case K::Neg: return expr_equal(*a.lhs, *b.lhs);
        case K::Call: return a.name == b.name && expr_equal(*a.lhs, *b.lhs);
        default: return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

std::string expr_variable(const ExprNode& e) {
    using K = ExprNode::Kind;
    switch (e.kind) {
        case K::Var: return e.name;
        case K::Number:
        case K::Pi: return "";
        case K::Neg:
        case K::Call: return expr_variable(*e.lhs);
        default: {
            std::string l = expr_variable(*e.lhs);
            return l.empty() ? expr_variable(*e.rhs) : l;
        }
    }
}

}  // namespace glt
