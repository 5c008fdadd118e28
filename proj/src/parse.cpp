#include "singcol/parse.hpp"

#include <cctype>

namespace singcol {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
};

unsigned long parse_uint(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw ParseError("expected a number", start);
    return std::stoul(c.s.substr(start, c.i - start));
}

Rational parse_coeff(Cursor& c) {
    Rational num(long(parse_uint(c)));
    if (c.peek() == '/') {
        c.take();
        unsigned long den = parse_uint(c);
        if (den == 0) throw ParseError("zero denominator", c.i);
        num /= Rational(long(den));
    }
    return num;
}

// one product of an optional coefficient and variable powers
Polynomial parse_term(Cursor& c) {
    Rational coeff(1);
    Monomial mono;
    bool saw_anything = false;
    bool expect_factor = true;
    while (true) {
        char ch = c.peek();
        if (expect_factor && std::isdigit(static_cast<unsigned char>(ch))) {
            coeff *= parse_coeff(c);
            saw_anything = true;
        } else if (expect_factor && (ch == 'x' || ch == 'y' || ch == 'e')) {
            c.take();
            Var v = ch == 'x' ? Var::X : (ch == 'y' ? Var::Y : Var::E);
            unsigned long p = 1;
            if (c.peek() == '^') {
                c.take();
                p = parse_uint(c);
            }
            mono.exp(v) += static_cast<std::uint32_t>(p);
            saw_anything = true;
        } else if (expect_factor) {
            throw ParseError("expected a coefficient or variable", c.i);
        }
        if (c.peek() == '*') {
            c.take();
            expect_factor = true;
            continue;
        }
        // juxtaposed variable (e.g. "3x", "x y") also accepted
        char nx = c.peek();
        if (nx == 'x' || nx == 'y' || nx == 'e') {
            expect_factor = true;
            continue;
        }
        break;
    }
    if (!saw_anything) throw ParseError("empty term", c.i);
    return Polynomial::term(coeff, mono);
}

} // namespace

Polynomial parse_polynomial(const std::string& text) {
    Cursor c{text};
    Polynomial result;
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            c.take();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.i);
        }
        if (c.done()) throw ParseError("dangling sign", c.i);
        Polynomial t = parse_term(c);
        result = sign > 0 ? result + t : result - t;
        first = false;
    }
    if (first) throw ParseError("empty polynomial literal", 0);
    return result;
}

} // namespace singcol
