#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptb/rational.hpp"

namespace ptb {

// Dense univariate polynomial over a field K. Coefficients ascending by
// degree, no trailing zeros; the zero polynomial has an empty vector and
// degree -1.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(const K& k) {
        Poly p;
        if (!is_zero(k)) p.c = {k};
        return p;
    }
    // x - root, or a general monic linear factor via coeffs
    static Poly linear(const K& c0, const K& c1) {
        return Poly(std::vector<K>{c0, c1});
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const K& lead() const {
        if (zero()) throw std::domain_error("lead of zero polynomial");
        return c.back();
    }
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return sample_zero();
        return c[static_cast<size_t>(i)];
    }
    // some zero of K, recovered from any stored coefficient; the zero
    // polynomial over an unbound field is still a valid additive identity
    K sample_zero() const {
        if (!c.empty()) return ring_zero(c[0]);
        return K{};
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), a.c.empty() ? b.sample_zero() : a.sample_zero());
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& k : r.c) k = -k;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, ring_zero(a.c[0]));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend Poly operator*(const K& k, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = k * x;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    K eval(const K& x) const {
        K r = sample_zero();
        if (c.empty()) return r;
        r = ring_zero(x);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    Poly derivative() const {
        Poly r;
        for (size_t i = 1; i < c.size(); ++i) {
            K k = c[i];
            K m = ring_zero(k);
            K one = ring_one(k);
            for (size_t t = 0; t < i; ++t) m = m + one; // i as a field element
            r.c.push_back(m * k);
        }
        r.trim();
        return r;
    }

    Poly monic() const {
        if (zero()) return *this;
        K inv_lead = ring_one(lead()) / lead();
        return inv_lead * *this;
    }
};

template <class K>
bool is_zero(const Poly<K>& p) {
    return p.zero();
}
template <class K>
Poly<K> ring_zero(const Poly<K>&) {
    return Poly<K>();
}
// only meaningful when the coefficient field can be recovered from p
template <class K>
Poly<K> ring_one(const Poly<K>& p) {
    return Poly<K>::constant(ring_one(p.sample_zero()));
}

template <class K>
std::pair<Poly<K>, Poly<K>> divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    Poly<K> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(static_cast<size_t>(a.degree() - b.degree() + 1), ring_zero(b.lead()));
    K lb_inv = ring_one(b.lead()) / b.lead();
    while (!r.zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        K f = r.lead() * lb_inv;
        q.c[static_cast<size_t>(d)] = f;
        for (int i = 0; i <= b.degree(); ++i) {
            size_t k = static_cast<size_t>(i + d);
            r.c[k] = r.c[k] - f * b.c[static_cast<size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
Poly<K> operator/(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).first;
}
template <class K>
Poly<K> operator%(const Poly<K>& a, const Poly<K>& b) {
    return divmod(a, b).second;
}

// Quotient of an exact division; throws if the remainder is nonzero.
template <class K>
Poly<K> exact_div(const Poly<K>& a, const Poly<K>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

// Monic gcd.
template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
    while (!b.zero()) {
        a = a % b;
        std::swap(a, b);
        if (!b.zero()) b = b.monic();
    }
    return a.monic();
}

// g = s*a + t*b with g the monic gcd.
template <class K>
Poly<K> ext_gcd(Poly<K> a, Poly<K> b, Poly<K>& s, Poly<K>& t) {
    Poly<K> s0 = Poly<K>::constant(a.zero() ? b.sample_zero() : ring_one(a.c[0]));
    if (a.zero() && !b.zero()) s0 = Poly<K>::constant(ring_one(b.c[0]));
    Poly<K> s1, t0, t1 = s0;
    // invariant: a = s0*A + t0*B, b = s1*A + t1*B
    while (!b.zero()) {
        auto [q, r] = divmod(a, b);
        a = b; b = r;
        Poly<K> ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1; t0 = t1;
        s1 = ns; t1 = nt;
    }
    if (!a.zero()) {
        K f = ring_one(a.lead()) / a.lead();
        a = f * a; s0 = f * s0; t0 = f * t0;
    }
    s = s0;
    t = t0;
    return a;
}

// Squarefree decomposition: list of (monic squarefree factor, multiplicity),
// multiplicities ascending, product of f^m recovering p up to the leading
// coefficient. Refuses small positive characteristic when the gcd chain
// detects a p-th power part (derivative degeneration).
template <class K>
std::vector<std::pair<Poly<K>, int>> squarefree_decomposition(const Poly<K>& p) {
    if (p.zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<Poly<K>, int>> out;
    if (p.degree() == 0) return out;
    int ch = field_char(p.c[0]);
    Poly<K> d = p.derivative();
    if (d.zero())
        throw std::domain_error("characteristic too small for squarefree decomposition");
    Poly<K> c = gcd(p, d);
    Poly<K> w = exact_div(p.monic(), c);
    int i = 1;
    while (w.degree() > 0) {
        Poly<K> y = gcd(w, c);
        Poly<K> z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        c = exact_div(c, y);
        ++i;
        if (ch > 0 && i > p.degree() + 1)
            throw std::domain_error("characteristic too small for squarefree decomposition");
    }
    if (c.degree() > 0)
        throw std::domain_error("characteristic too small for squarefree decomposition");
    return out;
}

template <class K>
bool is_squarefree(const Poly<K>& p) {
    if (p.zero()) return false;
    if (p.degree() == 0) return true;
    Poly<K> d = p.derivative();
    if (d.zero()) return false;
    return gcd(p, d).degree() == 0;
}

// Total order used to fix eigen-class enumeration: degree first, then the
// coefficient list, constant term first.
inline int lex_compare(const Poly<Rational>& a, const Poly<Rational>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] < b.c[i]) return -1;
        if (b.c[i] < a.c[i]) return 1;
    }
    return 0;
}

inline std::string poly_to_string(const Poly<Rational>& p, const std::string& var = "x") {
    if (p.zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        Rational k = p.coeff(i);
        if (is_zero(k)) continue;
        if (!s.empty()) {
            s += (k > 0) ? " + " : " - ";
            if (k < 0) k = -k;
        }
        bool unit = (k == 1);
        if (i == 0 || !unit) s += format_rational(k);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace ptb
