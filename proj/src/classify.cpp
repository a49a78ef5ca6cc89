#include "ptb/classify.hpp"

#include <algorithm>
#include <tuple>

namespace ptb {

int v_shape_dim(const VShape& v) {
    if (v.s < 0 || v.r < 1 || v.s > v.r)
        throw InputError("invalid shape: need 0 <= s <= r, r >= 1");
    if (v.r == 1) return v.s == 0 ? -1 : 0; // empty, or the single point
    return v.s == v.r ? 2 * v.r - 2 : 2 * v.r - 3;
}

bool operator==(const VShape& a, const VShape& b) { return a.s == b.s && a.r == b.r; }

bool operator==(const SectionReport& a, const SectionReport& b) {
    auto key = [](const SectionReport& r) {
        return std::tuple(r.n, r.degree, r.reducible, r.reducible_kind, r.component_degree,
                          r.component_intersection.s, r.component_intersection.r,
                          r.component_type, r.sing_dim, r.smooth, r.dual_member, r.canonical);
    };
    if (key(a) != key(b)) return false;
    if (a.sing_shapes.size() != b.sing_shapes.size()) return false;
    for (size_t i = 0; i < a.sing_shapes.size(); ++i) {
        const SingShape &x = a.sing_shapes[i], &y = b.sing_shapes[i];
        if (x.factor_degree != y.factor_degree || x.multiplicity != y.multiplicity ||
            !(x.shape == y.shape))
            return false;
    }
    return true;
}

ReducibleInfo reducible_from_structure(const EigenStructure& st) {
    int n = st.size - 1;
    for (const auto& cls : st.classes) {
        if (cls.geom_multiplicity == n) {
            if (!cls.rational())
                throw std::logic_error("rank-one eigenvalue with irrational class");
            ReducibleInfo info;
            info.reducible = true;
            // s distinguishes the two normal forms: 0 blocks of size > 1
            // means lambda I + diagonalizable rank one (nonzero trace shift)
            info.kind = cls.blocks_above_one == 0 ? "diagonalizable" : "nilpotent";
            info.lambda = cls.eigenvalue();
            return info;
        }
    }
    return ReducibleInfo{};
}

ReducibleInfo is_reducible(const Matrix<Rational>& a) {
    if (!a.square() || a.rows < 3) throw InputError("need a square matrix of size >= 3");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");
    return reducible_from_structure(eigen_structure(a));
}

bool dual_membership(const Matrix<Rational>& a) {
    if (!a.square() || a.rows < 3) throw InputError("need a square matrix of size >= 3");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");
    return !is_squarefree(charpoly(a));
}

SectionReport classify(const Matrix<Rational>& a, int n) {
    if (n < 2) throw InputError("classification requires n >= 2");
    size_t dim = static_cast<size_t>(n) + 1;
    if (!a.square() || a.rows != dim)
        throw InputError("matrix must be (n+1) x (n+1) for the given n");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");

    EigenStructure st = eigen_structure(a);
    SectionReport rep;
    rep.n = n;
    rep.degree = binomial(2 * n, n);
    rep.dual_member = dual_membership(a);

    ReducibleInfo red = reducible_from_structure(st);
    if (red.reducible) {
        rep.reducible = true;
        rep.reducible_kind = red.kind;
        rep.component_degree = rep.degree / 2;
        rep.component_intersection = VShape{red.kind == "diagonalizable" ? 0 : 1, n};
        rep.component_type = "P(O + T(-1)) over P^(n-1)";
        rep.sing_dim = v_shape_dim(rep.component_intersection);
        rep.smooth = false;
        rep.canonical = false;
        if (!rep.dual_member) throw std::logic_error("reducible section escaped the dual variety");
        return rep;
    }

    for (const auto& cls : st.classes) {
        if (cls.geom_multiplicity > n - 1)
            throw std::logic_error("irreducible section with geometric multiplicity >= n");
        SingShape sh;
        sh.factor_degree = cls.factor.degree();
        sh.multiplicity = cls.multiplicity;
        sh.shape = VShape{cls.blocks_above_one, cls.geom_multiplicity};
        rep.sing_shapes.push_back(sh);
    }
    std::sort(rep.sing_shapes.begin(), rep.sing_shapes.end(),
              [](const SingShape& x, const SingShape& y) {
                  return std::tuple(x.factor_degree, x.multiplicity, x.shape.r, x.shape.s) <
                         std::tuple(y.factor_degree, y.multiplicity, y.shape.r, y.shape.s);
              });
    rep.sing_dim = -1;
    for (const auto& sh : rep.sing_shapes)
        rep.sing_dim = std::max(rep.sing_dim, v_shape_dim(sh.shape));
    if (rep.sing_dim > 2 * n - 4)
        throw std::logic_error("singular locus exceeds the dimension bound");
    rep.smooth = rep.sing_dim == -1;
    if (rep.smooth == rep.dual_member)
        throw std::logic_error("smoothness contradicts dual membership");
    rep.canonical = true;
    return rep;
}

} // namespace ptb
