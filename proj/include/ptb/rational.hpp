#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ptb {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Ring helpers shared by the generic algorithms. Each coefficient type
// overloads these; the argument supplies context (e.g. the modulus of a
// prime-field element), which a bare literal could not.
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int field_char(const Rational&) { return 0; }

inline Int numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

// Accepts "p", "-p", "p/q" with integer p, q, q != 0. Rejects anything else
// (floats in particular) so matrix files cannot smuggle in approximations.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto digits = [](const std::string& t, size_t from, size_t to) {
        if (from >= to) return false;
        for (size_t i = from; i < to; ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    size_t slash = s.find('/');
    size_t num_end = (slash == std::string::npos) ? s.size() : slash;
    size_t num_start = (s[0] == '-') ? 1 : 0;
    if (!digits(s, num_start, num_end))
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    Int num(s.substr(0, num_end));
    Int den(1);
    if (slash != std::string::npos) {
        if (!digits(s, slash + 1, s.size()))
            throw std::invalid_argument("bad rational literal: '" + s + "'");
        den = Int(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    return Rational(num, den);
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int r(1);
    for (long t = 1; t <= k; ++t) {
        r *= (n - k + t);
        r /= t;
    }
    return r;
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string format_rational(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

} // namespace ptb
