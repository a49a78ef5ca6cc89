#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace ptb {

// Element of F_q, q an odd prime < 2^31. Carries its modulus so generic code
// can recover the field from any value, including zero. Products fit in
// uint64_t without overflow.
struct Fp {
    uint32_t v = 0;
    uint32_t q = 0; // q == 0 marks a default-constructed zero bound to no field

    Fp() = default;
    Fp(uint32_t q_, int64_t value) : q(q_) {
        if (q_ == 0) return; // unbound zero
        int64_t r = value % static_cast<int64_t>(q_);
        if (r < 0) r += q_;
        v = static_cast<uint32_t>(r);
    }

    bool is_zero() const { return v == 0; }

    friend uint32_t common_q(const Fp& a, const Fp& b) {
        if (a.q == 0) return b.q;
        if (b.q == 0 || a.q == b.q) return a.q;
        throw std::invalid_argument("mixed prime-field moduli");
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t q = common_q(a, b);
        if (q == 0) return Fp{};
        uint32_t s = a.v + b.v;
        if (s >= q) s -= q;
        return Fp(q, s);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t q = common_q(a, b);
        if (q == 0) return Fp{};
        return Fp(q, static_cast<int64_t>(a.v) - b.v);
    }
    friend Fp operator-(const Fp& a) {
        if (a.q == 0) return Fp{};
        return Fp(a.q, -static_cast<int64_t>(a.v));
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t q = common_q(a, b);
        if (q == 0) return Fp{};
        uint64_t p = static_cast<uint64_t>(a.v) * b.v;
        return Fp(q, static_cast<int64_t>(p % q));
    }
    Fp inv() const {
        if (v == 0) throw std::domain_error("division by zero in F_q");
        int64_t t = 0, nt = 1, r = q, nr = v;
        while (nr != 0) {
            int64_t c = r / nr;
            t -= c * nt; std::swap(t, nt);
            r -= c * nr; std::swap(r, nr);
        }
        if (t < 0) t += q;
        return Fp(q, t);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    friend bool operator==(const Fp& a, const Fp& b) {
        common_q(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp& operator+=(const Fp& b) { return *this = *this + b; }
    Fp& operator-=(const Fp& b) { return *this = *this - b; }
    Fp& operator*=(const Fp& b) { return *this = *this * b; }
    Fp& operator/=(const Fp& b) { return *this = *this / b; }

    Fp pow(uint64_t e) const {
        Fp r(q, 1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }
};

inline Fp ring_zero(const Fp& x) { return Fp(x.q, 0); }
inline Fp ring_one(const Fp& x) { return Fp(x.q, 1); }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline int field_char(const Fp& x) { return static_cast<int>(x.q); }

inline void check_modulus(uint32_t q) {
    if (q < 3 || q >= (1u << 31))
        throw std::invalid_argument("modulus out of range (need 2 < q < 2^31)");
    if (q % 2 == 0) throw std::invalid_argument("modulus must be an odd prime");
    for (uint64_t d = 3; d * d <= q; d += 2)
        if (q % d == 0) throw std::invalid_argument("modulus must be an odd prime");
}

} // namespace ptb
