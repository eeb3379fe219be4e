#include "hermdeg/parser.hpp"

#include <cctype>
#include <sstream>

namespace hermdeg::poly {

using coeff::GaussianRational;
using coeff::Rational;

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
    int line, col;
};

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line, col = 1;
    Token cur;

    Lexer(const std::string& text, int line_offset) : s(text), line(1 + line_offset) { advance(); }

    [[noreturn]] void fail(const std::string& msg, int l, int c) const {
        throw input_error("SyntaxError at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg);
    }

    void advance() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r' || s[pos] == '\n')) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
        if (pos >= s.size()) {
            cur = {Token::End, "", line, col};
            return;
        }
        char c = s[pos];
        int l = line, co = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos, ++col;
            cur = {Token::Number, s.substr(start, pos - start), l, co};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos, ++col;
            cur = {Token::Ident, s.substr(start, pos - start), l, co};
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            ++pos, ++col;
            cur = {Token::Op, std::string(1, c), l, co};
            return;
        }
        fail(std::string("unexpected character '") + c + "'", l, co);
    }

    bool accept_op(const char* op) {
        if (cur.kind == Token::Op && cur.text == op) {
            advance();
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lx;
    RingPtr ring;

    Parser(const std::string& text, RingPtr r, int line_offset) : lx(text, line_offset), ring(std::move(r)) {}

    PolyQ expr() {
        bool negate = false;
        while (true) {
            if (lx.accept_op("-")) negate = !negate;
            else if (lx.accept_op("+")) continue;
            else break;
        }
        PolyQ acc = term();
        if (negate) acc = neg(acc);
        while (lx.cur.kind == Token::Op && (lx.cur.text == "+" || lx.cur.text == "-")) {
            bool minus = lx.cur.text == "-";
            lx.advance();
            PolyQ rhs = term();
            acc = minus ? sub(acc, rhs) : add(acc, rhs);
        }
        return acc;
    }

    PolyQ term() {
        PolyQ acc = factor();
        while (lx.cur.kind == Token::Op && (lx.cur.text == "*" || lx.cur.text == "/")) {
            bool division = lx.cur.text == "/";
            int l = lx.cur.line, c = lx.cur.col;
            lx.advance();
            PolyQ rhs = factor();
            if (division) {
                if (!rhs.is_constant()) lx.fail("division by a non-constant polynomial", l, c);
                if (rhs.is_zero()) lx.fail("division by zero", l, c);
                acc = mul_term(acc, coeff::inv(rhs.t[0].c), Mono{});
            } else {
                acc = mul(acc, rhs);
            }
        }
        return acc;
    }

    PolyQ factor() {
        PolyQ base = atom();
        if (lx.cur.kind == Token::Op && lx.cur.text == "^") {
            int l = lx.cur.line, c = lx.cur.col;
            lx.advance();
            if (lx.cur.kind != Token::Number) lx.fail("expected integer exponent after '^'", lx.cur.line, lx.cur.col);
            unsigned long e = 0;
            try {
                e = std::stoul(lx.cur.text);
            } catch (...) {
                lx.fail("exponent out of range", l, c);
            }
            if (e >= kMaxExponent) lx.fail("exponent exceeds 2^15", l, c);
            lx.advance();
            return pow(base, uint32_t(e));
        }
        return base;
    }

    PolyQ atom() {
        if (lx.cur.kind == Token::Number) {
            GaussianRational v{Rational(lx.cur.text, 10), Rational(0)};
            lx.advance();
            return make_const(ring, v);
        }
        if (lx.cur.kind == Token::Ident) {
            if (lx.cur.text == "i") {
                lx.advance();
                return make_const(ring, coeff::imaginary_unit());
            }
            int idx = ring->var_index(lx.cur.text);
            if (idx < 0) lx.fail("UnknownVariable '" + lx.cur.text + "'", lx.cur.line, lx.cur.col);
            lx.advance();
            return make_varq(ring, idx);
        }
        if (lx.accept_op("(")) {
            PolyQ inner = expr();
            if (!lx.accept_op(")")) lx.fail("expected ')'", lx.cur.line, lx.cur.col);
            return inner;
        }
        if (lx.cur.kind == Token::Op && (lx.cur.text == "-" || lx.cur.text == "+")) {
            bool minus = lx.cur.text == "-";
            lx.advance();
            PolyQ inner = factor();
            return minus ? neg(inner) : inner;
        }
        lx.fail(lx.cur.kind == Token::End ? "unexpected end of input" : "unexpected token '" + lx.cur.text + "'",
                lx.cur.line, lx.cur.col);
    }
};

std::string format_coeff(const GaussianRational& c, bool with_monomial) {
    bool simple = c.im == 0 || c.re == 0;
    std::string s = coeff::to_string(c);
    if (with_monomial && !simple) return "(" + s + ")";
    return s;
}

template <class F>
std::string poly_to_string(const Poly<F>& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : f.t) {
        F c = term.c;
        bool negated = false;
        if constexpr (std::is_same_v<F, GaussianRational>) {
            // pull a minus out front for readability when the real/first part is negative
            if (c.re < 0 || (c.re == 0 && c.im < 0)) {
                c = -c;
                negated = true;
            }
        }
        if (first) {
            if (negated) os << "-";
            first = false;
        } else {
            os << (negated ? " - " : " + ");
        }
        std::string mono_str;
        for (int i = 0; i < f.ring->nvars(); ++i) {
            uint16_t e = term.m.e[size_t(i)];
            if (!e) continue;
            if (!mono_str.empty()) mono_str += "*";
            mono_str += f.ring->vars[size_t(i)];
            if (e > 1) mono_str += "^" + std::to_string(e);
        }
        bool coeff_is_one;
        if constexpr (std::is_same_v<F, GaussianRational>) coeff_is_one = c.is_one();
        else coeff_is_one = c.is_one();
        if (mono_str.empty()) {
            if constexpr (std::is_same_v<F, GaussianRational>) os << format_coeff(c, false);
            else os << coeff::to_string(c);
        } else if (coeff_is_one) {
            os << mono_str;
        } else {
            if constexpr (std::is_same_v<F, GaussianRational>) os << format_coeff(c, true);
            else os << coeff::to_string(c);
            os << "*" << mono_str;
        }
    }
    return os.str();
}

} // namespace

PolyQ parse_poly(const std::string& text, const RingPtr& ring, int line_offset) {
    Parser p(text, ring, line_offset);
    PolyQ f = p.expr();
    if (p.lx.cur.kind != Token::End)
        p.lx.fail("trailing input '" + p.lx.cur.text + "'", p.lx.cur.line, p.lx.cur.col);
    return f;
}

coeff::GaussianRational parse_coefficient(const std::string& text) {
    RingPtr empty = make_ring({});
    PolyQ f = parse_poly(text, empty);
    if (f.is_zero()) return GaussianRational(0);
    return f.t[0].c;
}

std::string to_string(const PolyQ& f) { return poly_to_string(f); }
std::string to_string(const PolyP& f) { return poly_to_string(f); }

} // namespace hermdeg::poly
