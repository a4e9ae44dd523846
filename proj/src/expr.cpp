#include "ritt/expr.hpp"

#include <cctype>

#include "ritt/errors.hpp"

namespace ritt {

ExprPtr Expr::num(const mpz_class& n) { return std::make_shared<const Expr>(Expr{Kind::Number, n, 0, nullptr, nullptr}); }
ExprPtr Expr::var() { return std::make_shared<const Expr>(Expr{Kind::Var, 0, 0, nullptr, nullptr}); }
ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
    return std::make_shared<const Expr>(Expr{k, 0, 0, std::move(a), std::move(b)});
}
ExprPtr Expr::neg(ExprPtr a) { return std::make_shared<const Expr>(Expr{Kind::Neg, 0, 0, std::move(a), nullptr}); }
ExprPtr Expr::pow(ExprPtr a, unsigned long e) {
    return std::make_shared<const Expr>(Expr{Kind::Pow, 0, e, std::move(a), nullptr});
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::Number: return a.number == b.number;
        case Expr::Kind::Var: return true;
        case Expr::Kind::Neg: return *a.lhs == *b.lhs;
        case Expr::Kind::Pow: return a.exponent == b.exponent && *a.lhs == *b.lhs;
        default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    ExprPtr parse() {
        ExprPtr e = comp();
        skip();
        if (pos_ != s_.size()) fail("unexpected input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    // Consumes one of the spellings when it is next.
    bool accept(std::initializer_list<std::string_view> spellings) {
        skip();
        for (auto sp : spellings) {
            if (s_.substr(pos_, sp.size()) == sp) {
                pos_ += sp.size();
                return true;
            }
        }
        return false;
    }

    bool accept_compose() {
        skip();
        // "o" only when it is not part of a longer word.
        if (pos_ < s_.size() && s_[pos_] == 'o') {
            ++pos_;
            return true;
        }
        return accept({".", "∘"});
    }
    bool accept_minus() { return accept({"-", "−"}); }

    ExprPtr comp() {
        ExprPtr left = sum();
        if (accept_compose()) return Expr::binary(Expr::Kind::Compose, left, comp());
        return left;
    }

    ExprPtr sum() {
        ExprPtr e = term();
        for (;;) {
            if (accept({"+"}))
                e = Expr::binary(Expr::Kind::Add, e, term());
            else if (accept_minus())
                e = Expr::binary(Expr::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = unary();
        for (;;) {
            if (accept({"*"}))
                e = Expr::binary(Expr::Kind::Mul, e, unary());
            else if (accept({"/"}))
                e = Expr::binary(Expr::Kind::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (accept_minus()) return Expr::neg(unary());
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (!accept({"^"})) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural exponent");
        if (pos_ - start > 6) {
            pos_ = start;
            fail("exponent too large");
        }
        return Expr::pow(base, std::stoul(std::string(s_.substr(start, pos_ - start))));
    }

    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return Expr::num(mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (c == 'z') {
            ++pos_;
            return Expr::var();
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = comp();
            if (!accept({")"})) fail("expected ')'");
            return e;
        }
        fail("unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Compose: return 0;
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Neg: return 3;
        case Expr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string wrap(const Expr& e, int min_prec) {
    std::string s = print_expr(e);
    return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string print_expr(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return e.number.get_str();
        case K::Var: return "z";
        case K::Neg: return "-" + wrap(*e.lhs, 3);
        case K::Pow: return wrap(*e.lhs, 5) + "^" + std::to_string(e.exponent);
        case K::Compose: return wrap(*e.lhs, 1) + " . " + wrap(*e.rhs, 0);
        case K::Add: return wrap(*e.lhs, 1) + " + " + wrap(*e.rhs, 2);
        case K::Sub: return wrap(*e.lhs, 1) + " - " + wrap(*e.rhs, 2);
        case K::Mul: return wrap(*e.lhs, 2) + "*" + wrap(*e.rhs, 3);
        case K::Div: return wrap(*e.lhs, 2) + "/" + wrap(*e.rhs, 3);
    }
    return "";
}

RatFunc lower_ratfunc(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return RatFunc(Poly::constant(Rat(e.number)));
        case K::Var: return RatFunc::identity();
        case K::Neg: return -lower_ratfunc(*e.lhs);
        case K::Pow: {
            const RatFunc b = lower_ratfunc(*e.lhs);
            RatFunc out(Poly::constant(1));
            for (unsigned long i = 0; i < e.exponent; ++i) out = out * b;
            return out;
        }
        case K::Add: return lower_ratfunc(*e.lhs) + lower_ratfunc(*e.rhs);
        case K::Sub: return lower_ratfunc(*e.lhs) - lower_ratfunc(*e.rhs);
        case K::Mul: return lower_ratfunc(*e.lhs) * lower_ratfunc(*e.rhs);
        case K::Div: return lower_ratfunc(*e.lhs) / lower_ratfunc(*e.rhs);
        case K::Compose: return substitute(lower_ratfunc(*e.lhs), lower_ratfunc(*e.rhs));
    }
    throw ConsistencyFailure("unknown expression kind");
}

Poly lower_poly(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::Number: return Poly::constant(Rat(e.number));
        case K::Var: return Poly::identity();
        case K::Neg: return -lower_poly(*e.lhs);
        case K::Pow: return lower_poly(*e.lhs).pow(static_cast<unsigned>(e.exponent));
        case K::Add: return lower_poly(*e.lhs) + lower_poly(*e.rhs);
        case K::Sub: return lower_poly(*e.lhs) - lower_poly(*e.rhs);
        case K::Mul: return lower_poly(*e.lhs) * lower_poly(*e.rhs);
        case K::Div: {
            const Poly d = lower_poly(*e.rhs);
            if (d.is_zero()) throw ZeroDenominator("division by zero");
            if (d.degree() > 0) throw DomainError("division by a non-constant is not polynomial");
            return lower_poly(*e.lhs) * Rat(1 / d.lead());
        }
        case K::Compose: return compose(lower_poly(*e.lhs), lower_poly(*e.rhs));
    }
    throw ConsistencyFailure("unknown expression kind");
}

ExprPtr expr_of(const Poly& p) { return parse_expr(to_string(p)); }
ExprPtr expr_of(const RatFunc& r) { return parse_expr(to_string(r)); }

}  // namespace ritt
