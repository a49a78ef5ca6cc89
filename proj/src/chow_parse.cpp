#include "ptb/chow_parse.hpp"

#include <cctype>

namespace ptb {

namespace {

struct Parser {
    int n;
    const std::string& s;
    size_t pos = 0;

    Parser(int n_, const std::string& src) : n(n_), s(src) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long parse_nat(const char* what) {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError(pos, std::string("expected ") + what);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1L << 20)) throw ParseError(start, "number too large");
            ++pos;
        }
        return v;
    }

    ChowClass primary() {
        char c = peek();
        if (c == 'z') {
            ++pos;
            return chow_zeta(n);
        }
        if (c == 'a') {
            ++pos;
            return chow_alpha(n);
        }
        if (c == 'E') {
            size_t at = pos;
            ++pos;
            long k = parse_nat("exceptional index after E");
            if (k > n) throw ParseError(at, "exceptional index out of range 0..n");
            return chow_exc(n, static_cast<int>(k));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long v = parse_nat("number");
            return Int(v) * chow_one(n);
        }
        if (c == '(') {
            ++pos;
            ChowClass r = expr();
            if (peek() != ')') throw ParseError(pos, "expected ')'");
            ++pos;
            return r;
        }
        throw ParseError(pos, "expected 'z', 'a', 'E<k>', a number, or '('");
    }

    ChowClass power() {
        ChowClass base = primary();
        if (peek() != '^') return base;
        size_t at = pos;
        ++pos;
        long e = parse_nat("exponent");
        bool scalar_base = base.mono.size() == 1 && base.mono.count({0, 0}) == 1;
        if (scalar_base && e > 4096) {
            const Int& c0 = base.mono.begin()->second;
            if (!(c0 == 1 || c0 == -1))
                throw ParseError(at, "exponent too large for a scalar base");
        }
        return pow(base, static_cast<int>(e));
    }

    ChowClass factor() {
        if (peek() == '-') {
            ++pos;
            return Int(-1) * factor();
        }
        return power();
    }

    ChowClass term() {
        ChowClass r = factor();
        while (peek() == '*') {
            ++pos;
            r = mul(r, factor());
        }
        return r;
    }

    ChowClass expr() {
        ChowClass r = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                r = r + term();
            } else if (c == '-') {
                ++pos;
                r = r - term();
            } else {
                return r;
            }
        }
    }
};

} // namespace

ChowClass parse_expression(int n, const std::string& src) {
    Parser p(n, src);
    ChowClass r = p.expr();
    p.skip_ws();
    if (p.pos != src.size()) throw ParseError(p.pos, "unexpected trailing input");
    return r;
}

} // namespace ptb
