#pragma once

#include <string>
#include <vector>

#include "ptb/errors.hpp"
#include "ptb/matrix.hpp"
#include "ptb/multipoly.hpp"

namespace ptb {

// The hyperplane section lives on the incidence variety X = {x.y = 0} in
// P^n x P^n. On the affine chart x_i = 1, y_j = 1 (i != j), the incidence
// equation is solved for y_i and substituted into x^t A y, leaving one
// polynomial P of degree <= 3 in the 2n-1 free coordinates.
template <class K>
struct ChartEquation {
    int n = 0, i = 0, j = 0;
    std::vector<std::string> var_names; // x_k (k != i) then y_k (k != i, j)
    MultiPoly<K> p;
};

template <class K>
ChartEquation<K> chart_equation(const Matrix<K>& a, int n, int i, int j) {
    size_t dim = static_cast<size_t>(n) + 1;
    if (n < 2) throw InputError("chart equations need n >= 2");
    if (a.rows != dim || a.cols != dim) throw InputError("matrix must be (n+1) x (n+1)");
    if (i < 0 || j < 0 || i > n || j > n || i == j)
        throw InputError("chart indices must satisfy 0 <= i, j <= n and i != j");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");

    const size_t nv = 2 * dim;
    auto xv = [&](int k) { return static_cast<size_t>(k); };
    auto yv = [&](int k) { return dim + static_cast<size_t>(k); };
    K one = ring_one(a.at(0, 0));

    MultiPoly<K> f(nv), g(nv);
    for (int k = 0; k <= n; ++k) {
        std::vector<int> e(nv, 0);
        e[xv(k)] = 1;
        e[yv(k)] = 1;
        f.add_term(e, one);
    }
    for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= n; ++l) {
            const K& c = a.at(static_cast<size_t>(k), static_cast<size_t>(l));
            if (is_zero(c)) continue;
            std::vector<int> e(nv, 0);
            e[xv(k)] += 1;
            e[yv(l)] += 1;
            g.add_term(e, c);
        }

    MultiPoly<K> unit = MultiPoly<K>::constant(nv, one);
    f = f.substitute(xv(i), unit).substitute(yv(j), unit);
    g = g.substitute(xv(i), unit).substitute(yv(j), unit);

    // f = y_i + rest with rest free of y_i; on X, y_i = -rest
    MultiPoly<K> yi = MultiPoly<K>::variable(nv, yv(i), one);
    MultiPoly<K> rest = f - yi;
    MultiPoly<K> neg_rest = (-one) * rest;
    MultiPoly<K> p = g.substitute(yv(i), neg_rest);

    ChartEquation<K> eq;
    eq.n = n;
    eq.i = i;
    eq.j = j;
    std::vector<size_t> keep;
    for (int k = 0; k <= n; ++k)
        if (k != i) {
            keep.push_back(xv(k));
            eq.var_names.push_back("x" + std::to_string(k));
        }
    for (int k = 0; k <= n; ++k)
        if (k != i && k != j) {
            keep.push_back(yv(k));
            eq.var_names.push_back("y" + std::to_string(k));
        }
    eq.p = p.project(keep);
    if (eq.p.zero()) throw std::logic_error("chart equation vanished identically");
    if (eq.p.total_degree() > 3) throw std::logic_error("chart equation exceeds degree 3");
    return eq;
}

} // namespace ptb
