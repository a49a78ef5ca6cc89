#pragma once

#include <stdexcept>
#include <vector>

#include "ptb/poly.hpp"

namespace ptb {

// Dense row-major matrix over a field K. Entries must be bound to their
// field (for Fp: constructed with an explicit modulus), since algorithms
// derive 0 and 1 from stored values.
template <class K>
struct Matrix {
    size_t rows = 0, cols = 0;
    std::vector<K> e;

    Matrix() = default;
    Matrix(size_t r, size_t c, const K& fill) : rows(r), cols(c), e(r * c, fill) {}
    static Matrix from_rows(const std::vector<std::vector<K>>& rr) {
        Matrix m;
        m.rows = rr.size();
        m.cols = rr.empty() ? 0 : rr[0].size();
        for (const auto& row : rr) {
            if (row.size() != m.cols) throw std::invalid_argument("ragged matrix rows");
            m.e.insert(m.e.end(), row.begin(), row.end());
        }
        return m;
    }
    static Matrix identity(size_t n, const K& one) {
        Matrix m(n, n, ring_zero(one));
        for (size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    K& at(size_t i, size_t j) { return e[i * cols + j]; }
    const K& at(size_t i, size_t j) const { return e[i * cols + j]; }
    bool square() const { return rows == cols; }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] + b.e[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("shape mismatch");
        Matrix r = a;
        for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] - b.e[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols != b.rows) throw std::invalid_argument("shape mismatch");
        Matrix r(a.rows, b.cols, a.e.empty() ? K{} : ring_zero(a.e[0]));
        for (size_t i = 0; i < a.rows; ++i)
            for (size_t k = 0; k < a.cols; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (size_t j = 0; j < b.cols; ++j)
                    r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& k, const Matrix& a) {
        Matrix r = a;
        for (auto& x : r.e) x = k * x;
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows != b.rows || a.cols != b.cols) return false;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (!(a.e[i] == b.e[i])) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix r(cols, rows, e.empty() ? K{} : ring_zero(e[0]));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }
    K trace() const {
        if (!square()) throw std::invalid_argument("trace of non-square matrix");
        K t = ring_zero(e[0]);
        for (size_t i = 0; i < rows; ++i) t = t + at(i, i);
        return t;
    }
    bool is_scalar() const {
        if (!square() || rows == 0) return false;
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (i != j ? !is_zero(at(i, j)) : !(at(i, j) == at(0, 0))) return false;
        return true;
    }
    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != cols) throw std::invalid_argument("shape mismatch");
        std::vector<K> r(rows, ring_zero(e[0]));
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }
};

// Row echelon form in place; returns the pivot columns.
template <class K>
std::vector<size_t> row_echelon(Matrix<K>& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
        size_t sel = r;
        while (sel < m.rows && is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows) continue;
        for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
        K inv = ring_one(m.at(r, col)) / m.at(r, col);
        for (size_t j = col; j < m.cols; ++j) m.at(r, j) = inv * m.at(r, j);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || is_zero(m.at(i, col))) continue;
            K f = m.at(i, col);
            for (size_t j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return static_cast<int>(row_echelon(m).size());
}

// Basis of the right kernel, one vector per free column, in column order.
template <class K>
std::vector<std::vector<K>> kernel_basis(Matrix<K> m, const K& one) {
    auto pivots = row_echelon(m);
    std::vector<std::vector<K>> basis;
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    for (size_t j = 0; j < m.cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<K> v(m.cols, ring_zero(one));
        v[j] = one;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m.at(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    size_t n = a.rows;
    K one = ring_one(a.e[0]);
    Matrix<K> aug(n, 2 * n, ring_zero(one));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = one;
    }
    auto pivots = row_echelon(aug);
    if (pivots.size() != n || pivots[n - 1] != n - 1)
        throw std::domain_error("matrix not invertible");
    Matrix<K> r(n, n, ring_zero(one));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

// det(xI - A) by fraction-free (Bareiss) elimination over K[x]. The leading
// principal minors of xI - A are monic, hence nonzero, so no pivoting is
// needed and every division is exact.
template <class K>
Poly<K> charpoly(const Matrix<K>& a) {
    if (!a.square()) throw std::invalid_argument("charpoly of non-square matrix");
    size_t n = a.rows;
    if (n == 0) throw std::invalid_argument("charpoly of empty matrix");
    K one = ring_one(a.e[0]);
    using P = Poly<K>;
    Matrix<P> m(n, n, P{});
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                m.at(i, j) = P(std::vector<K>{-a.at(i, j), one});
            else
                m.at(i, j) = P::constant(-a.at(i, j));
        }
    P prev = P::constant(one);
    for (size_t k = 0; k + 1 < n; ++k) {
        const P pivot = m.at(k, k);
        if (pivot.zero()) throw std::logic_error("vanishing principal minor in charpoly");
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m.at(i, j) = exact_div(m.at(i, j) * pivot - m.at(i, k) * m.at(k, j), prev);
        prev = pivot;
    }
    return m.at(n - 1, n - 1);
}

template <class K>
bool has_distinct_eigenvalues(const Matrix<K>& a) {
    return is_squarefree(charpoly(a));
}

} // namespace ptb
