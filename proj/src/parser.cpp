#include "rsum/genfunc.hpp"

#include <cctype>
#include <utility>

namespace rsum {

namespace {

// Expression values are raw rational functions num/den; deflation into the
// (1-x)^a (1+x)^b shape happens once, after the whole expression is parsed.
struct Frac {
    Polynomial num;
    Polynomial den{Rational(1)};
};

Frac operator+(const Frac& l, const Frac& r) {
    return {l.num * r.den + r.num * l.den, l.den * r.den};
}
Frac operator-(const Frac& l, const Frac& r) {
    return {l.num * r.den - r.num * l.den, l.den * r.den};
}
Frac operator*(const Frac& l, const Frac& r) { return {l.num * r.num, l.den * r.den}; }

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    RationalGF run() {
        Frac v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return deflate(v);
    }

  private:
    Frac expr() {
        Frac v = term();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Frac term() {
        Frac v = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                Frac r = factor();
                if (r.num.is_zero()) throw ParseError("division by zero", at);
                v = Frac{v.num * r.den, v.den * r.num};
            } else {
                return v;
            }
        }
    }

    Frac factor() {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        Frac v = base();
        skip_ws();
        if (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            long e = integer_literal();
            if (e < 0) {
                if (v.num.is_zero()) throw ParseError("zero raised to a negative power", at);
                std::swap(v.num, v.den);
                e = -e;
            }
            v = Frac{v.num.pow(static_cast<unsigned>(e)), v.den.pow(static_cast<unsigned>(e))};
        }
        if (negate) v.num = -v.num;
        return v;
    }

    Frac base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Frac v = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return Frac{Polynomial::monomial(1), Polynomial{Rational(1)}};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = integer_literal();
            return Frac{Polynomial{Rational(v)}, Polynomial{Rational(1)}};
        }
        throw ParseError("expected number, 'x' or '('", pos_);
    }

    long integer_literal() {
        skip_ws();
        std::size_t at = pos_;
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", pos_);
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000000L) throw ParseError("integer literal too large", at);
            ++pos_;
        }
        return neg ? -v : v;
    }

    RationalGF deflate(Frac v) {
        Polynomial den = v.den;
        Polynomial num = v.num;
        int a = 0, b = 0;
        const Polynomial omx = Polynomial::one_minus_x();
        const Polynomial opx = Polynomial::one_plus_x();
        for (;;) {
            auto q = den.divide_exact(omx);
            if (!q) break;
            den = *q;
            ++a;
        }
        for (;;) {
            auto q = den.divide_exact(opx);
            if (!q) break;
            den = *q;
            ++b;
        }
        if (den.degree() != 0)
            throw UnsupportedDenominator(
                "denominator has roots other than x = +-1: " + render_polynomial(den));
        return RationalGF(num / den.coeff(0), a, b);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalGF parse_genfunc(const std::string& text) { return Parser(text).run(); }

}  // namespace rsum
