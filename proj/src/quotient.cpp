#include "ptb/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptb {

QuotientContext::QuotientContext(QPoly modulus) : f(std::move(modulus)) {
    if (f.degree() < 1) throw std::invalid_argument("quotient modulus must have degree >= 1");
    if (!(f.lead() == Rational(1))) throw std::invalid_argument("quotient modulus must be monic");
    if (!is_squarefree(f)) throw std::invalid_argument("quotient modulus must be squarefree");
}

QPoly QuotientContext::inv(const QPoly& u) const {
    QPoly s, t;
    QPoly g = ext_gcd(u, f, s, t);
    if (g.degree() != 0) throw std::domain_error("zero divisor has no inverse in quotient ring");
    return s % f;
}

Matrix<QPoly> mat_mul_mod(const Matrix<QPoly>& m, const Matrix<QPoly>& b, const QPoly& f) {
    Matrix<QPoly> r = m * b;
    for (auto& p : r.e) p = p % f;
    return r;
}

namespace {

Matrix<QPoly> reduce_entries(Matrix<QPoly> m, const QPoly& f) {
    for (auto& p : m.e) p = p % f;
    return m;
}

// One elimination pass over a fixed modulus. Returns true and the rank on
// success; returns false and the splitting factor when a zero-divisor pivot
// is hit.
bool try_rank(Matrix<QPoly> m, const QPoly& f, int& rank_out, QPoly& split_out) {
    QuotientContext ctx(f);
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t sel = m.rows;
        for (size_t i = r; i < m.rows; ++i) {
            const QPoly& u = m.at(i, col);
            if (u.zero()) continue;
            QPoly g = gcd(f, u);
            if (g.degree() == 0) {
                sel = i;
                break;
            }
            split_out = g;
            return false;
        }
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        QPoly inv = ctx.inv(m.at(r, col));
        for (size_t i = r + 1; i < m.rows; ++i) {
            if (m.at(i, col).zero()) continue;
            QPoly fct = ctx.mul(m.at(i, col), inv);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) - fct * m.at(r, j)) % f;
        }
        ++r;
    }
    rank_out = static_cast<int>(r);
    return true;
}

} // namespace

std::vector<QuotientRank> rank_over_quotient(const Matrix<QPoly>& m, const QPoly& f) {
    std::vector<QuotientRank> out;
    std::vector<QPoly> work{f.monic()};
    while (!work.empty()) {
        QPoly h = work.back();
        work.pop_back();
        int rk = 0;
        QPoly g;
        if (try_rank(reduce_entries(m, h), h, rk, g)) {
            out.push_back({h, rk});
        } else {
            work.push_back(g.monic());
            work.push_back(exact_div(h, g).monic());
        }
    }
    std::sort(out.begin(), out.end(), [](const QuotientRank& a, const QuotientRank& b) {
        return lex_compare(a.factor, b.factor) < 0;
    });
    return out;
}

} // namespace ptb
