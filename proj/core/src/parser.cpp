#include "nashforge/parser.hpp"

#include <cctype>

#include "nashforge/errors.hpp"

namespace nashforge {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

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
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at position " + std::to_string(i) + " in \"" + s + "\"");
    }
};

class PolyParser {
public:
    PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), cur_{text} {}

    Polynomial run() {
        Polynomial f = parse_expr();
        if (!cur_.done()) cur_.fail("trailing input");
        return f;
    }

private:
    RingPtr ring_;
    Cursor cur_;

    bool starts_factor() {
        char c = cur_.peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' ||
               std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    mpz_class parse_nat() {
        cur_.skip_ws();
        size_t start = cur_.i;
        while (cur_.i < cur_.s.size() && std::isdigit(static_cast<unsigned char>(cur_.s[cur_.i])))
            ++cur_.i;
        if (cur_.i == start) cur_.fail("expected a number");
        return mpz_class(cur_.s.substr(start, cur_.i - start));
    }

    std::string parse_ident() {
        cur_.skip_ws();
        size_t start = cur_.i;
        auto ok = [&](char c, bool first) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                   (!first && std::isdigit(static_cast<unsigned char>(c)));
        };
        while (cur_.i < cur_.s.size() && ok(cur_.s[cur_.i], cur_.i == start)) ++cur_.i;
        if (cur_.i == start) cur_.fail("expected an identifier");
        return cur_.s.substr(start, cur_.i - start);
    }

    Polynomial parse_factor() {
        char c = cur_.peek();
        if (c == '(') {
            cur_.eat('(');
            Polynomial inner = parse_expr();
            if (!cur_.eat(')')) cur_.fail("expected ')'");
            return maybe_power(inner);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = parse_nat();
            if (cur_.eat('/')) {
                mpz_class den = parse_nat();
                if (den == 0) cur_.fail("zero denominator");
                return Polynomial::constant(ring_,
                                            Scalar::from_fraction(ring_->field, num, den));
            }
            return Polynomial::constant(ring_, Scalar::from_mpz(ring_->field, num));
        }
        std::string name = parse_ident();
        int idx = ring_->var_index(name);
        if (idx < 0) cur_.fail("unknown variable '" + name + "'");
        return maybe_power(Polynomial::variable(ring_, static_cast<size_t>(idx)));
    }

    Polynomial maybe_power(Polynomial base) {
        if (cur_.eat('^')) {
            mpz_class e = parse_nat();
            if (e > 512) cur_.fail("exponent too large");
            return base.pow(static_cast<int>(e.get_si()));
        }
        return base;
    }

    Polynomial parse_term() {
        Polynomial f = parse_factor();
        for (;;) {
            if (cur_.eat('*')) {
                f *= parse_factor();
            } else if (starts_factor()) {
                f *= parse_factor();  // implicit multiplication
            } else {
                return f;
            }
        }
    }

    Polynomial parse_expr() {
        bool neg = false;
        if (cur_.eat('-'))
            neg = true;
        else
            cur_.eat('+');
        Polynomial f = parse_term();
        if (neg) f = -f;
        for (;;) {
            char c = cur_.peek();
            if (c == '+') {
                cur_.eat('+');
                f += parse_term();
            } else if (c == '-') {
                cur_.eat('-');
                f -= parse_term();
            } else {
                return f;
            }
        }
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    return PolyParser(ring, text).run();
}

}  // namespace nashforge
