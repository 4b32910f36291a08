#pragma once

#include <cctype>
#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "claw/errors.hpp"
#include "claw/system.hpp"

namespace claw::expr {

/// Second-order forward-mode dual number: value, gradient and Hessian with
/// respect to a fixed set of k variables.
struct Dual2 {
    double v = 0.0;
    std::vector<double> g; // k
    std::vector<double> h; // k*k row-major

    static Dual2 constant(double c, int k) {
        Dual2 d;
        d.v = c;
        d.g.assign(static_cast<std::size_t>(k), 0.0);
        d.h.assign(static_cast<std::size_t>(k) * k, 0.0);
        return d;
    }
    static Dual2 variable(double x, int index, int k) {
        Dual2 d = constant(x, k);
        d.g[static_cast<std::size_t>(index)] = 1.0;
        return d;
    }
    int dim() const { return static_cast<int>(g.size()); }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
    Dual2 r = a;
    r.v += b.v;
    for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] += b.g[i];
    for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] += b.h[i];
    return r;
}

inline Dual2 operator-(const Dual2& a, const Dual2& b) {
    Dual2 r = a;
    r.v -= b.v;
    for (std::size_t i = 0; i < r.g.size(); ++i) r.g[i] -= b.g[i];
    for (std::size_t i = 0; i < r.h.size(); ++i) r.h[i] -= b.h[i];
    return r;
}

inline Dual2 operator-(const Dual2& a) {
    Dual2 r = a;
    r.v = -r.v;
    for (auto& x : r.g) x = -x;
    for (auto& x : r.h) x = -x;
    return r;
}

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
    const int k = a.dim();
    Dual2 r = Dual2::constant(a.v * b.v, k);
    for (int i = 0; i < k; ++i) {
        const auto si = static_cast<std::size_t>(i);
        r.g[si] = a.g[si] * b.v + a.v * b.g[si];
        for (int j = 0; j < k; ++j) {
            const auto sij = si * static_cast<std::size_t>(k) + static_cast<std::size_t>(j);
            const auto sj = static_cast<std::size_t>(j);
            r.h[sij] = a.h[sij] * b.v + a.g[si] * b.g[sj] + a.g[sj] * b.g[si] + a.v * b.h[sij];
        }
    }
    return r;
}

/// Chain rule for a scalar function f with derivatives f1, f2 at a.v.
inline Dual2 chain(const Dual2& a, double f, double f1, double f2) {
    const int k = a.dim();
    Dual2 r = Dual2::constant(f, k);
    for (int i = 0; i < k; ++i) {
        const auto si = static_cast<std::size_t>(i);
        r.g[si] = f1 * a.g[si];
        for (int j = 0; j < k; ++j) {
            const auto sij = si * static_cast<std::size_t>(k) + static_cast<std::size_t>(j);
            r.h[sij] = f1 * a.h[sij] + f2 * a.g[si] * a.g[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

inline Dual2 operator/(const Dual2& a, const Dual2& b) {
    if (b.v == 0.0) throw data_error("expression: division by zero");
    const double inv = 1.0 / b.v;
    return a * chain(b, inv, -inv * inv, 2.0 * inv * inv * inv);
}

inline Dual2 d_exp(const Dual2& a) {
    const double e = std::exp(a.v);
    return chain(a, e, e, e);
}

inline Dual2 d_log(const Dual2& a) {
    if (!(a.v > 0.0)) throw data_error("expression: log of non-positive value");
    return chain(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}

inline Dual2 d_pow(const Dual2& a, const Dual2& b, bool exponent_is_constant) {
    if (exponent_is_constant) {
        const double c = b.v;
        const bool integral = c == std::floor(c);
        if (!integral && !(a.v > 0.0))
            throw data_error("expression: pow of non-positive base with non-integer exponent");
        return chain(a, std::pow(a.v, c), c * std::pow(a.v, c - 1.0),
                     c * (c - 1.0) * std::pow(a.v, c - 2.0));
    }
    if (!(a.v > 0.0))
        throw data_error("expression: pow with variable exponent needs a positive base");
    return d_exp(b * d_log(a));
}

// ---------------------------------------------------------------------------
// Expression tree
// ---------------------------------------------------------------------------

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { constant, variable, add, sub, mul, div, neg, pow, exp, log };
    Kind kind = Kind::constant;
    double value = 0.0; // constant
    int var = 0;        // variable index
    NodePtr a, b;
};

inline double eval(const Node& n, std::span<const double> u) {
    switch (n.kind) {
        case Node::Kind::constant: return n.value;
        case Node::Kind::variable: return u[static_cast<std::size_t>(n.var)];
        case Node::Kind::add: return eval(*n.a, u) + eval(*n.b, u);
        case Node::Kind::sub: return eval(*n.a, u) - eval(*n.b, u);
        case Node::Kind::mul: return eval(*n.a, u) * eval(*n.b, u);
        case Node::Kind::div: {
            const double d = eval(*n.b, u);
            if (d == 0.0) throw data_error("expression: division by zero");
            return eval(*n.a, u) / d;
        }
        case Node::Kind::neg: return -eval(*n.a, u);
        case Node::Kind::pow: {
            const double base = eval(*n.a, u);
            const double ex = eval(*n.b, u);
            if (base <= 0.0 && ex != std::floor(ex))
                throw data_error("expression: pow of non-positive base with non-integer exponent");
            return std::pow(base, ex);
        }
        case Node::Kind::exp: return std::exp(eval(*n.a, u));
        case Node::Kind::log: {
            const double x = eval(*n.a, u);
            if (!(x > 0.0)) throw data_error("expression: log of non-positive value");
            return std::log(x);
        }
    }
    throw data_error("expression: corrupt node");
}

inline Dual2 eval_dual(const Node& n, std::span<const Dual2> u) {
    const int k = u.empty() ? 0 : u[0].dim();
    switch (n.kind) {
        case Node::Kind::constant: return Dual2::constant(n.value, k);
        case Node::Kind::variable: return u[static_cast<std::size_t>(n.var)];
        case Node::Kind::add: return eval_dual(*n.a, u) + eval_dual(*n.b, u);
        case Node::Kind::sub: return eval_dual(*n.a, u) - eval_dual(*n.b, u);
        case Node::Kind::mul: return eval_dual(*n.a, u) * eval_dual(*n.b, u);
        case Node::Kind::div: return eval_dual(*n.a, u) / eval_dual(*n.b, u);
        case Node::Kind::neg: return -eval_dual(*n.a, u);
        case Node::Kind::pow:
            return d_pow(eval_dual(*n.a, u), eval_dual(*n.b, u),
                         n.b->kind == Node::Kind::constant);
        case Node::Kind::exp: return d_exp(eval_dual(*n.a, u));
        case Node::Kind::log: return d_log(eval_dual(*n.a, u));
    }
    throw data_error("expression: corrupt node");
}

// ---------------------------------------------------------------------------
// Recursive-descent parser for the minimal grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := unary ('^' factor)?
//   unary  := '-' unary | primary
//   primary:= number | uN | exp(e) | log(e) | pow(e, e) | '(' expr ')'
// ---------------------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view text, int k) : text_(text), k_(k) {}

    NodePtr parse() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw data_error("expression: trailing input at '" + rest() + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int k_;

    std::string rest() const { return std::string(text_.substr(pos_)); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            if (eat('+'))
                lhs = make(Node::Kind::add, lhs, parse_term());
            else if (eat('-'))
                lhs = make(Node::Kind::sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            if (eat('*'))
                lhs = make(Node::Kind::mul, lhs, parse_factor());
            else if (eat('/'))
                lhs = make(Node::Kind::div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    // '^' binds tighter than unary minus (so -x^2 is -(x^2)) and is
    // right-associative; the exponent may itself carry a sign.
    NodePtr parse_factor() {
        if (eat('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::neg;
            n->a = parse_factor();
            return n;
        }
        auto base = parse_primary();
        if (eat('^')) return make(Node::Kind::pow, base, parse_factor());
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= text_.size()) throw data_error("expression: unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            auto e = parse_expr();
            if (!eat(')')) throw data_error("expression: missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw data_error("expression: unexpected character '" + std::string(1, c) + "'");
    }

    NodePtr parse_number() {
        std::size_t end = pos_;
        auto digits = [&] {
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        };
        digits();
        if (end < text_.size() && text_[end] == '.') {
            ++end;
            digits();
        }
        if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
            ++end;
            if (end < text_.size() && (text_[end] == '+' || text_[end] == '-')) ++end;
            digits();
        }
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::constant;
        n->value = std::stod(std::string(text_.substr(pos_, end - pos_)));
        pos_ = end;
        return n;
    }

    NodePtr parse_ident() {
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            ++end;
        const std::string_view name = text_.substr(pos_, end - pos_);
        pos_ = end;
        if (name.size() >= 2 && name[0] == 'u') {
            int idx = 0;
            bool numeric = true;
            for (std::size_t i = 1; i < name.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
                    numeric = false;
                    break;
                }
                idx = idx * 10 + (name[i] - '0');
            }
            if (numeric) {
                if (idx < 1 || idx > k_)
                    throw data_error("expression: variable u" + std::to_string(idx) +
                                     " out of range (k=" + std::to_string(k_) + ")");
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::variable;
                n->var = idx - 1;
                return n;
            }
        }
        if (name == "exp" || name == "log") {
            if (!eat('(')) throw data_error("expression: expected '(' after function name");
            auto a = parse_expr();
            if (!eat(')')) throw data_error("expression: missing ')'");
            auto n = std::make_shared<Node>();
            n->kind = name == "exp" ? Node::Kind::exp : Node::Kind::log;
            n->a = a;
            return n;
        }
        if (name == "pow") {
            if (!eat('(')) throw data_error("expression: expected '(' after pow");
            auto a = parse_expr();
            if (!eat(',')) throw data_error("expression: pow needs two arguments");
            auto b = parse_expr();
            if (!eat(')')) throw data_error("expression: missing ')'");
            return make(Node::Kind::pow, a, b);
        }
        throw data_error("expression: unknown identifier '" + std::string(name) + "'");
    }

    static NodePtr make(Node::Kind kind, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->kind = kind;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
};

inline NodePtr parse(std::string_view text, int k) { return Parser(text, k).parse(); }

/// SmoothMap whose value comes from direct evaluation and whose derivatives
/// come from forward-mode AD on the expression trees.
inline SmoothMap map_from_expressions(std::vector<NodePtr> components, int k) {
    SmoothMap m;
    m.in_dim = k;
    m.out_dim = static_cast<int>(components.size());
    auto comps = std::make_shared<std::vector<NodePtr>>(std::move(components));
    m.value = [comps](std::span<const double> u, std::span<double> out) {
        for (std::size_t j = 0; j < comps->size(); ++j) out[j] = eval(*(*comps)[j], u);
    };
    auto seed = [k](std::span<const double> u) {
        std::vector<Dual2> du;
        du.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            du.push_back(Dual2::variable(u[static_cast<std::size_t>(i)], i, k));
        return du;
    };
    m.jacobian = [comps, seed, k](std::span<const double> u, std::span<double> out) {
        const auto du = seed(u);
        for (std::size_t j = 0; j < comps->size(); ++j) {
            const Dual2 r = eval_dual(*(*comps)[j], du);
            for (int a = 0; a < k; ++a)
                out[j * static_cast<std::size_t>(k) + static_cast<std::size_t>(a)] =
                    r.g[static_cast<std::size_t>(a)];
        }
    };
    m.hessian = [comps, seed, k](std::span<const double> u, std::span<double> out) {
        const auto du = seed(u);
        const auto kk = static_cast<std::size_t>(k) * static_cast<std::size_t>(k);
        for (std::size_t j = 0; j < comps->size(); ++j) {
            const Dual2 r = eval_dual(*(*comps)[j], du);
            for (std::size_t i = 0; i < kk; ++i) out[j * kk + i] = r.h[i];
        }
    };
    return m;
}

} // namespace claw::expr
