#include "ptb/eigen.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptb/quotient.hpp"

namespace ptb {

namespace {

// A - theta*I as a matrix over Q[theta]/(h).
Matrix<QPoly> shifted_matrix(const Matrix<Rational>& a, const QPoly& h) {
    Matrix<QPoly> b(a.rows, a.cols, QPoly{});
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) {
            if (i == j)
                b.at(i, j) = QPoly(std::vector<Rational>{a.at(i, j), Rational(-1)}) % h;
            else
                b.at(i, j) = QPoly::constant(a.at(i, j)) % h;
        }
    return b;
}

struct AnalyzeResult {
    bool split = false;
    QPoly g1, g2;            // set when split
    std::vector<int> nullities; // d_1..d_k, last one == multiplicity
};

AnalyzeResult analyze_factor(const Matrix<Rational>& a, const QPoly& h, int mult) {
    AnalyzeResult res;
    int dim = static_cast<int>(a.rows);
    Matrix<QPoly> b = shifted_matrix(a, h);
    Matrix<QPoly> p = b;
    for (int k = 1; k <= mult; ++k) {
        auto branches = rank_over_quotient(p, h);
        if (branches.size() > 1) {
            res.split = true;
            res.g1 = branches[0].factor;
            QPoly rest = exact_div(h, res.g1).monic();
            res.g2 = rest;
            return res;
        }
        int d = dim - branches[0].rank;
        res.nullities.push_back(d);
        if (d == mult) break;
        if (k == mult) throw std::logic_error("nullity failed to reach algebraic multiplicity");
        p = mat_mul_mod(p, b, h);
    }
    return res;
}

EigenClass build_class(const QPoly& h, int mult, const std::vector<int>& d) {
    auto dk = [&](int k) -> int {
        if (k <= 0) return 0;
        if (k <= static_cast<int>(d.size())) return d[static_cast<size_t>(k) - 1];
        return mult;
    };
    EigenClass cls;
    cls.factor = h;
    cls.multiplicity = mult;
    cls.geom_multiplicity = dk(1);
    cls.blocks_above_one = dk(2) - dk(1);
    for (int size = mult; size >= 1; --size) {
        int count = 2 * dk(size) - dk(size - 1) - dk(size + 1);
        for (int t = 0; t < count; ++t) cls.block_sizes.push_back(size);
    }
    int sum = 0;
    for (int s : cls.block_sizes) sum += s;
    int above_one = 0;
    for (int s : cls.block_sizes)
        if (s > 1) ++above_one;
    if (sum != mult || static_cast<int>(cls.block_sizes.size()) != cls.geom_multiplicity ||
        above_one != cls.blocks_above_one)
        throw std::logic_error("inconsistent Jordan block data");
    return cls;
}

} // namespace

EigenStructure eigen_structure(const Matrix<Rational>& a) {
    if (!a.square() || a.rows == 0) throw std::invalid_argument("eigen structure needs a square matrix");
    EigenStructure st;
    st.size = static_cast<int>(a.rows);
    st.charpoly = charpoly(a);
    auto sqf = squarefree_decomposition(st.charpoly);
    for (const auto& [g, mult] : sqf) {
        std::vector<QPoly> work{g.monic()};
        while (!work.empty()) {
            QPoly h = work.back();
            work.pop_back();
            AnalyzeResult res = analyze_factor(a, h, mult);
            if (res.split) {
                work.push_back(res.g1);
                work.push_back(res.g2);
            } else {
                st.classes.push_back(build_class(h, mult, res.nullities));
            }
        }
    }
    // Canonicalize: where the gcd splits landed depends on pivot accidents, so
    // two similar matrices can partition the same squarefree factor
    // differently. Eigenvalues with identical Jordan data can never be told
    // apart by any nullity, hence merging their factors (a product of minimal
    // polynomials, not necessarily irreducible) is the partition every run
    // agrees on.
    std::vector<EigenClass> merged;
    for (auto& cls : st.classes) {
        bool absorbed = false;
        for (auto& m : merged) {
            if (m.multiplicity == cls.multiplicity && m.block_sizes == cls.block_sizes) {
                m.factor = (m.factor * cls.factor).monic();
                absorbed = true;
                break;
            }
        }
        if (!absorbed) merged.push_back(std::move(cls));
    }
    st.classes = std::move(merged);
    std::sort(st.classes.begin(), st.classes.end(), [](const EigenClass& x, const EigenClass& y) {
        return lex_compare(x.factor, y.factor) < 0;
    });
    int total = 0;
    for (const auto& c : st.classes) total += (c.factor.degree()) * c.multiplicity;
    if (total != st.size) throw std::logic_error("eigen classes do not exhaust the spectrum");
    return st;
}

} // namespace ptb
