#include "ptb/chow.hpp"

#include <stdexcept>

#include "ptb/errors.hpp"

namespace ptb {

std::string BasisElement::name() const {
    if (exceptional) return "E" + std::to_string(k);
    if (i == 0 && j == 0) return "1";
    std::string s;
    if (i > 0) s += i == 1 ? "z" : "z^" + std::to_string(i);
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += j == 1 ? "a" : "a^" + std::to_string(j);
    }
    return s;
}

ChowClass::ChowClass(int n_) : n(n_), exc(static_cast<size_t>(n_) + 1, Int(0)) {
    if (n_ < 2) throw InputError("Chow ring requires n >= 2");
}

bool ChowClass::zero() const {
    if (!mono.empty()) return false;
    for (const Int& c : exc)
        if (c != 0) return false;
    return true;
}

void ChowClass::add_mono(int i, int j, const Int& c) {
    if (c == 0) return;
    auto key = std::make_pair(i, j);
    auto it = mono.find(key);
    if (it == mono.end()) {
        mono.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) mono.erase(it);
    }
}

ChowClass operator+(const ChowClass& a, const ChowClass& b) {
    if (a.n != b.n) throw InputError("mixed Chow ring contexts");
    ChowClass r = a;
    for (const auto& [ij, c] : b.mono) r.add_mono(ij.first, ij.second, c);
    for (size_t k = 0; k < r.exc.size(); ++k) r.exc[k] += b.exc[k];
    return r;
}

ChowClass operator-(const ChowClass& a, const ChowClass& b) {
    return a + Int(-1) * b;
}

ChowClass operator*(const Int& k, const ChowClass& a) {
    ChowClass r(a.n);
    if (k == 0) return r;
    for (const auto& [ij, c] : a.mono) r.mono.emplace(ij, k * c);
    for (size_t t = 0; t < r.exc.size(); ++t) r.exc[t] = k * a.exc[t];
    return r;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.n == b.n && a.mono == b.mono && a.exc == b.exc;
}

ChowClass chow_zero(int n) { return ChowClass(n); }

ChowClass chow_one(int n) {
    ChowClass r(n);
    r.add_mono(0, 0, Int(1));
    return r;
}

ChowClass chow_alpha(int n) {
    ChowClass r(n);
    r.add_mono(0, 1, Int(1));
    return r;
}

ChowClass chow_exc(int n, int k) {
    ChowClass r(n);
    if (k < 0 || k > n) throw InputError("exceptional index out of range 0..n");
    r.exc[static_cast<size_t>(k)] = 1;
    return r;
}

ChowClass chow_reduce_monomial(int n, int a, int b) {
    ChowClass r(n);
    if (a < 0 || b < 0) throw InputError("negative exponent");
    if (b > n || a + b > 2 * n - 2) return r; // truncated above the top degree
    if (a <= n - 2) {
        r.add_mono(a, b, Int(1));
        return r;
    }
    // peel one zeta^(n-1):
    // zeta^(n-1) = sum_{t=1}^{n-1} (-1)^(t-1) C(n+1,t) zeta^(n-1-t) alpha^t
    //            + (-1)^(n-1) (E_0 + ... + E_n)
    for (int t = 1; t <= n - 1; ++t) {
        Int c = binomial(n + 1, t);
        if (t % 2 == 0) c = -c;
        r = r + c * chow_reduce_monomial(n, a - t, b + t);
    }
    Int sgn = (n % 2 == 1) ? Int(1) : Int(-1); // (-1)^(n-1)
    // E_k * zeta^(a-n+1) alpha^b: zero if b >= 1, E_k if the residual
    // monomial is trivial, else E_k * zeta = alpha^n applied once
    if (b == 0) {
        if (a == n - 1) {
            ChowClass es(n);
            for (int k = 0; k <= n; ++k) es.exc[static_cast<size_t>(k)] = sgn;
            r = r + es;
        } else {
            r = r + (sgn * Int(n + 1)) * chow_reduce_monomial(n, a - n, n);
        }
    }
    return r;
}

ChowClass chow_zeta(int n) { return chow_reduce_monomial(n, 1, 0); }

ChowClass mul(const ChowClass& a, const ChowClass& b) {
    if (a.n != b.n) throw InputError("mixed Chow ring contexts");
    int n = a.n;
    ChowClass r(n);
    for (const auto& [ij1, c1] : a.mono)
        for (const auto& [ij2, c2] : b.mono)
            r = r + (c1 * c2) * chow_reduce_monomial(n, ij1.first + ij2.first,
                                                     ij1.second + ij2.second);
    // mono x exc and exc x mono: E_k alpha = 0, E_k zeta = alpha^n
    auto mono_exc = [&](const ChowClass& m, const ChowClass& x) {
        Int esum(0);
        for (const Int& ce : x.exc) esum += ce;
        for (const auto& [ij, c] : m.mono) {
            auto [i, j] = ij;
            if (j >= 1) continue;
            if (i == 0) {
                for (size_t k = 0; k < r.exc.size(); ++k) r.exc[k] += c * x.exc[k];
            } else if (esum != 0) {
                r = r + (c * esum) * chow_reduce_monomial(n, i - 1, n);
            }
        }
    };
    mono_exc(a, b);
    mono_exc(b, a);
    // exc x exc: E_i E_j = (-1)^(n-1) delta_ij zeta^(n-2) alpha^n
    Int sgn = (n % 2 == 1) ? Int(1) : Int(-1);
    Int diag(0);
    for (size_t k = 0; k < a.exc.size(); ++k) diag += a.exc[k] * b.exc[k];
    if (diag != 0) r = r + (sgn * diag) * chow_reduce_monomial(n, n - 2, n);
    return r;
}

ChowClass pow(const ChowClass& a, int e) {
    if (e < 0) throw InputError("negative power of a Chow class");
    ChowClass r = chow_one(a.n);
    for (int t = 0; t < e; ++t) {
        if (r.zero()) return r;
        r = mul(r, a);
    }
    return r;
}

Int intersection_number(const ChowClass& c) {
    int n = c.n;
    int top = 2 * n - 2;
    for (const auto& [ij, coef] : c.mono) {
        if (coef != 0 && ij.first + ij.second != top)
            throw InputError("intersection number needs a class of pure degree 2n-2");
    }
    for (const Int& ce : c.exc)
        if (ce != 0)
            throw InputError("intersection number needs a class of pure degree 2n-2");
    auto it = c.mono.find(std::make_pair(n - 2, n));
    return it == c.mono.end() ? Int(0) : it->second;
}

std::vector<BasisElement> chow_basis(int n, int k) {
    if (n < 2) throw InputError("Chow ring requires n >= 2");
    if (k < 0 || k > 2 * n - 2) throw InputError("degree out of range 0..2n-2");
    std::vector<BasisElement> out;
    for (int i = 0; i <= n - 2; ++i) {
        int j = k - i;
        if (j < 0 || j > n) continue;
        BasisElement e;
        e.i = i;
        e.j = j;
        out.push_back(e);
    }
    if (k == n - 1)
        for (int t = 0; t <= n; ++t) {
            BasisElement e;
            e.exceptional = true;
            e.k = t;
            out.push_back(e);
        }
    return out;
}

Int bidegree_oracle(int n, int a, int b) {
    if (n < 2 || a < 0 || b < 0 || a + b != 2 * n - 2)
        throw InputError("oracle needs a, b >= 0 with a + b = 2n-2");
    if (b > n) return Int(0); // h1^b already vanishes in the truncated ring
    size_t m = static_cast<size_t>(n) + 1;
    // coefficient grid for Z[h1,h2]/(h1^(n+1), h2^(n+1)), c[i][j] ~ h1^i h2^j
    std::vector<std::vector<Int>> c(m, std::vector<Int>(m, Int(0)));
    c[static_cast<size_t>(b)][0] = 1; // start from h1^b
    for (int t = 0; t < a + 2; ++t) {
        std::vector<std::vector<Int>> nx(m, std::vector<Int>(m, Int(0)));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                if (c[i][j] == 0) continue;
                if (i + 1 < m) nx[i + 1][j] += c[i][j];
                if (j + 1 < m) nx[i][j + 1] += c[i][j];
            }
        c = std::move(nx);
    }
    return c[m - 1][m - 1];
}

std::string to_string(const ChowClass& c) {
    if (c.zero()) return "0";
    std::string s;
    auto emit = [&](const Int& coef, const std::string& name) {
        if (coef == 0) return;
        if (!s.empty()) s += " + ";
        s += coef.str() + " * " + name;
    };
    for (int deg = 0; deg <= 2 * c.n - 2; ++deg)
        for (const BasisElement& e : chow_basis(c.n, deg)) {
            if (e.exceptional)
                emit(c.exc[static_cast<size_t>(e.k)], e.name());
            else {
                auto it = c.mono.find(std::make_pair(e.i, e.j));
                if (it != c.mono.end()) emit(it->second, e.name());
            }
        }
    return s;
}

} // namespace ptb
