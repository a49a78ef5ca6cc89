#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace ptb {

// Sparse multivariate polynomial over a field K with a fixed variable count.
// Terms are keyed by exponent vector in lexicographic order, so iteration
// (and hence serialization) is deterministic.
template <class K>
struct MultiPoly {
    size_t nvars = 0;
    std::map<std::vector<int>, K> terms;

    MultiPoly() = default;
    explicit MultiPoly(size_t nv) : nvars(nv) {}

    static MultiPoly constant(size_t nv, const K& k) {
        MultiPoly p(nv);
        p.add_term(std::vector<int>(nv, 0), k);
        return p;
    }
    static MultiPoly variable(size_t nv, size_t idx, const K& one) {
        MultiPoly p(nv);
        std::vector<int> e(nv, 0);
        e[idx] = 1;
        p.add_term(e, one);
        return p;
    }

    bool zero() const { return terms.empty(); }
    void add_term(const std::vector<int>& e, const K& k) {
        if (is_zero(k)) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, k);
        } else {
            it->second = it->second + k;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, k] : terms) {
            int t = 0;
            for (int x : e) t += x;
            if (t > d) d = t;
        }
        return d;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, k] : b.terms) r.add_term(e, k);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, k] : b.terms) r.add_term(e, -k);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r(a.nvars ? a.nvars : b.nvars);
        for (const auto& [ea, ka] : a.terms)
            for (const auto& [eb, kb] : b.terms) {
                std::vector<int> e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(e, ka * kb);
            }
        return r;
    }
    friend MultiPoly operator*(const K& k, const MultiPoly& a) {
        MultiPoly r(a.nvars);
        for (const auto& [e, c] : a.terms) r.add_term(e, k * c);
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars == b.nvars && a.terms == b.terms;
    }

    // Replace variable idx by the polynomial sub (same variable space).
    MultiPoly substitute(size_t idx, const MultiPoly& sub) const {
        MultiPoly r(nvars);
        for (const auto& [e, k] : terms) {
            int pw = e[idx];
            std::vector<int> base = e;
            base[idx] = 0;
            MultiPoly t(nvars);
            t.add_term(base, k);
            for (int p = 0; p < pw; ++p) t = t * sub;
            r = r + t;
        }
        return r;
    }

    MultiPoly partial(size_t idx) const {
        MultiPoly r(nvars);
        for (const auto& [e, k] : terms) {
            if (e[idx] == 0) continue;
            std::vector<int> d = e;
            d[idx] -= 1;
            K c = k;
            K acc = ring_zero(k);
            for (int t = 0; t < e[idx]; ++t) acc = acc + ring_one(k);
            r.add_term(d, acc * c);
        }
        return r;
    }

    K eval(const std::vector<K>& point) const {
        if (point.size() != nvars) throw std::invalid_argument("wrong evaluation arity");
        if (terms.empty()) return point.empty() ? K{} : ring_zero(point[0]);
        K acc = ring_zero(terms.begin()->second);
        for (const auto& [e, k] : terms) {
            K t = k;
            for (size_t i = 0; i < nvars; ++i)
                for (int p = 0; p < e[i]; ++p) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    // Project onto the given subset of variables (keep[i] = old index of new
    // variable i). All dropped variables must have exponent zero everywhere.
    MultiPoly project(const std::vector<size_t>& keep) const {
        std::vector<int> used(nvars, 0);
        for (size_t i : keep) used[i] = 1;
        MultiPoly r(keep.size());
        for (const auto& [e, k] : terms) {
            for (size_t i = 0; i < nvars; ++i)
                if (!used[i] && e[i] != 0)
                    throw std::logic_error("projection drops a live variable");
            std::vector<int> ne(keep.size());
            for (size_t i = 0; i < keep.size(); ++i) ne[i] = e[keep[i]];
            r.add_term(ne, k);
        }
        return r;
    }
};

} // namespace ptb
