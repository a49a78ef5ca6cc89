#include "ptb/lab.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <thread>

#include "ptb/errors.hpp"

namespace ptb {

std::vector<ProjPoint> proj_space(int m, uint32_t q) {
    std::vector<ProjPoint> out;
    std::vector<uint32_t> c(static_cast<size_t>(m) + 1, 0);
    // leading coordinate 1 at position i, free coordinates after it
    for (int i = 0; i <= m; ++i) {
        std::fill(c.begin(), c.end(), 0u);
        c[static_cast<size_t>(i)] = 1;
        size_t free_from = static_cast<size_t>(i) + 1;
        for (;;) {
            out.push_back(ProjPoint{c});
            size_t t = c.size();
            bool wrapped = true;
            while (t > free_from) {
                --t;
                if (++c[t] < q) {
                    wrapped = false;
                    break;
                }
                c[t] = 0;
            }
            if (wrapped) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix<Fp> fp_matrix(uint32_t q, const std::vector<std::vector<int64_t>>& entries) {
    check_modulus(q);
    std::vector<std::vector<Fp>> rows;
    for (const auto& r : entries) {
        std::vector<Fp> row;
        for (int64_t v : r) row.emplace_back(q, v);
        rows.push_back(std::move(row));
    }
    return Matrix<Fp>::from_rows(rows);
}

namespace {

int worker_count() {
    const char* env = std::getenv("PTB_WORKERS");
    if (!env) return 1;
    int w = std::atoi(env);
    if (w < 1) return 1;
    return std::min(w, 64);
}

ProjPoint normalize(std::vector<Fp> v) {
    size_t t = 0;
    while (t < v.size() && v[t].is_zero()) ++t;
    if (t == v.size()) throw std::logic_error("cannot normalize the zero vector");
    Fp inv = v[t].inv();
    ProjPoint p;
    p.c.reserve(v.size());
    for (const Fp& x : v) p.c.push_back((inv * x).v);
    return p;
}

std::vector<Fp> to_fp(const ProjPoint& p, uint32_t q) {
    std::vector<Fp> v;
    v.reserve(p.c.size());
    for (uint32_t x : p.c) v.emplace_back(q, x);
    return v;
}

// y-solutions for one [x]: projective kernel of the stacked rows x and A^t x.
void section_fiber(const Matrix<Fp>& a, const ProjPoint& x, uint32_t q,
                   std::vector<PointPair>& out) {
    size_t dim = a.rows;
    std::vector<Fp> xf = to_fp(x, q);
    Matrix<Fp> sys(2, dim, Fp(q, 0));
    std::vector<Fp> xa = a.transpose().apply(xf);
    for (size_t j = 0; j < dim; ++j) {
        sys.at(0, j) = xf[j];
        sys.at(1, j) = xa[j];
    }
    auto basis = kernel_basis(sys, Fp(q, 1));
    if (basis.empty()) return;
    for (const ProjPoint& coeff : proj_space(static_cast<int>(basis.size()) - 1, q)) {
        std::vector<Fp> y(dim, Fp(q, 0));
        for (size_t t = 0; t < basis.size(); ++t) {
            Fp ct(q, coeff.c[t]);
            if (ct.is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) y[j] += ct * basis[t][j];
        }
        out.push_back(PointPair{x, normalize(std::move(y))});
    }
}

} // namespace

std::vector<PointPair> enumerate_section(const Matrix<Fp>& a) {
    if (!a.square() || a.rows < 3) throw InputError("need a square matrix of size >= 3");
    uint32_t q = a.e[0].q;
    int n = static_cast<int>(a.rows) - 1;
    std::vector<ProjPoint> xs = proj_space(n, q);
    int workers = worker_count();
    std::vector<std::vector<PointPair>> parts(static_cast<size_t>(workers));
    auto run = [&](int w) {
        for (size_t t = static_cast<size_t>(w); t < xs.size(); t += static_cast<size_t>(workers))
            section_fiber(a, xs[t], q, parts[static_cast<size_t>(w)]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& th : threads) th.join();
    }
    std::vector<PointPair> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_singular_pair(const Matrix<Fp>& a, const Matrix<Fp>& at, const PointPair& p) {
    uint32_t q = a.e[0].q;
    std::vector<Fp> xf = to_fp(p.x, q), yf = to_fp(p.y, q);
    std::vector<Fp> ay = a.apply(yf), atx = at.apply(xf);
    // rows (y | x) and (Ay | A^t x); the first is never zero, so rank <= 1
    // means the second is a scalar multiple of it
    size_t dim = xf.size();
    std::vector<Fp> r1(2 * dim), r2(2 * dim);
    for (size_t t = 0; t < dim; ++t) {
        r1[t] = yf[t];
        r1[dim + t] = xf[t];
        r2[t] = ay[t];
        r2[dim + t] = atx[t];
    }
    size_t t0 = 0;
    while (r1[t0].is_zero()) ++t0;
    Fp lambda = r2[t0] / r1[t0];
    for (size_t t = 0; t < 2 * dim; ++t)
        if (r2[t] != lambda * r1[t]) return false;
    return true;
}

std::vector<PointPair> singular_points(const Matrix<Fp>& a) {
    Matrix<Fp> at = a.transpose();
    std::vector<PointPair> out;
    for (const PointPair& p : enumerate_section(a))
        if (is_singular_pair(a, at, p)) out.push_back(p);
    return out;
}

uint64_t count_V(int s, int r, uint32_t q) {
    VShape sh{s, r};
    v_shape_dim(sh); // validates 0 <= s <= r, r >= 1
    check_modulus(q);
    if (r == 1) return s == 0 ? 0 : 1;
    uint64_t count = 0;
    std::vector<ProjPoint> pts = proj_space(r - 1, q);
    for (const ProjPoint& z : pts)
        for (const ProjPoint& w : pts) {
            uint64_t acc = 0;
            for (int t = s; t < r; ++t)
                acc += static_cast<uint64_t>(z.c[static_cast<size_t>(t)]) *
                       w.c[static_cast<size_t>(t)];
            if (acc % q == 0) ++count;
        }
    return count;
}

std::vector<FpEigenData> fp_eigen_data(const Matrix<Fp>& a) {
    if (!a.square() || a.rows == 0) throw InputError("need a square matrix");
    uint32_t q = a.e[0].q;
    int dim = static_cast<int>(a.rows);
    Poly<Fp> p = charpoly(a);
    std::vector<FpEigenData> out;
    for (uint32_t lam = 0; lam < q; ++lam) {
        Fp l(q, lam);
        int mult = 0;
        while (!p.zero() && p.degree() > 0 && p.eval(l).is_zero()) {
            p = exact_div(p, Poly<Fp>::linear(-l, Fp(q, 1)));
            ++mult;
        }
        if (mult == 0) continue;
        Matrix<Fp> b = a - l * Matrix<Fp>::identity(a.rows, Fp(q, 1));
        int r = dim - rank(b);
        int s = 0;
        if (mult >= 2) {
            int d2 = dim - rank(b * b);
            s = d2 - r;
        }
        out.push_back(FpEigenData{lam, mult, r, s});
    }
    if (p.degree() > 0)
        throw NonSplitError("charpoly does not split over F_" + std::to_string(q));
    return out;
}

CountReport verify_sing_prediction(const Matrix<Fp>& a) {
    if (!a.square() || a.rows < 3) throw InputError("need a square matrix of size >= 3");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");
    uint32_t q = a.e[0].q;
    int n = static_cast<int>(a.rows) - 1;
    auto eigen = fp_eigen_data(a);
    for (const auto& ed : eigen)
        if (ed.r >= n)
            throw InputError("reducible-type matrix; use the reducible split check");

    CountReport rep;
    rep.q = q;
    rep.n = n;
    auto pts = enumerate_section(a);
    rep.h_points = pts.size();

    Matrix<Fp> at = a.transpose();
    std::map<uint32_t, uint64_t> sing_by_lambda;
    for (const PointPair& p : pts) {
        if (!is_singular_pair(a, at, p)) continue;
        ++rep.sing_enumerated;
        // the scalar is determined by Ay = lambda y at y's leading 1
        std::vector<Fp> yf = to_fp(p.y, q);
        std::vector<Fp> ay = a.apply(yf);
        size_t t0 = 0;
        while (yf[t0].is_zero()) ++t0;
        ++sing_by_lambda[(ay[t0] / yf[t0]).v];
    }

    rep.match = true;
    for (const auto& ed : eigen) {
        ShapeCount sc;
        sc.eigenvalue = std::to_string(ed.lambda);
        sc.s = ed.s;
        sc.r = ed.r;
        sc.predicted = count_V(ed.s, ed.r, q);
        auto it = sing_by_lambda.find(ed.lambda);
        sc.enumerated = it == sing_by_lambda.end() ? 0 : it->second;
        rep.sing_predicted += sc.predicted;
        if (sc.enumerated != sc.predicted) rep.match = false;
        rep.shapes.push_back(sc);
        sing_by_lambda.erase(ed.lambda);
    }
    if (!sing_by_lambda.empty()) rep.match = false; // singular pairs at a non-eigenvalue
    if (rep.sing_enumerated != rep.sing_predicted) rep.match = false;
    return rep;
}

namespace {

// All F_q points of X = {x.y = 0}.
std::vector<PointPair> incidence_points(int n, uint32_t q) {
    std::vector<PointPair> out;
    for (const ProjPoint& x : proj_space(n, q)) {
        Matrix<Fp> sys(1, static_cast<size_t>(n) + 1, Fp(q, 0));
        for (size_t j = 0; j < sys.cols; ++j) sys.at(0, j) = Fp(q, x.c[j]);
        auto basis = kernel_basis(sys, Fp(q, 1));
        for (const ProjPoint& coeff : proj_space(static_cast<int>(basis.size()) - 1, q)) {
            std::vector<Fp> y(sys.cols, Fp(q, 0));
            for (size_t t = 0; t < basis.size(); ++t) {
                Fp ct(q, coeff.c[t]);
                if (ct.is_zero()) continue;
                for (size_t j = 0; j < sys.cols; ++j) y[j] += ct * basis[t][j];
            }
            out.push_back(PointPair{x, normalize(std::move(y))});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t dot_mod(const std::vector<Fp>& a, const std::vector<uint32_t>& b) {
    Fp acc = ring_zero(a[0]);
    for (size_t t = 0; t < a.size(); ++t) acc += a[t] * Fp(a[t].q, b[t]);
    return acc.v;
}

} // namespace

SplitReport verify_reducible_split(const Matrix<Fp>& a) {
    if (!a.square() || a.rows < 3) throw InputError("need a square matrix of size >= 3");
    if (a.is_scalar()) throw ScalarMatrixError("scalar matrix defines no hyperplane section");
    uint32_t q = a.e[0].q;
    int n = static_cast<int>(a.rows) - 1;

    // locate lambda with rank(A - lambda I) == 1
    Matrix<Fp> b(0, 0, Fp(q, 0));
    bool found = false;
    uint32_t lambda = 0;
    for (uint32_t lam = 0; lam < q && !found; ++lam) {
        Matrix<Fp> cand = a - Fp(q, lam) * Matrix<Fp>::identity(a.rows, Fp(q, 1));
        if (rank(cand) == 1) {
            b = cand;
            lambda = lam;
            found = true;
        }
    }
    if (!found) throw InputError("matrix is not a rank-one shift of a scalar over F_q");

    SplitReport rep;
    rep.q = q;
    rep.n = n;
    rep.lambda = lambda;
    rep.kind = b.trace().is_zero() ? "nilpotent" : "diagonalizable";

    // B = u v^t: v^t is the first nonzero row, u the column of ratios
    size_t i0 = 0;
    std::vector<Fp> v;
    for (; i0 < b.rows; ++i0) {
        bool nonzero = false;
        for (size_t j = 0; j < b.cols; ++j)
            if (!b.at(i0, j).is_zero()) nonzero = true;
        if (nonzero) {
            v.assign(b.e.begin() + static_cast<long>(i0 * b.cols),
                     b.e.begin() + static_cast<long>((i0 + 1) * b.cols));
            break;
        }
    }
    size_t j0 = 0;
    while (v[j0].is_zero()) ++j0;
    std::vector<Fp> u(b.rows, Fp(q, 0));
    for (size_t i = 0; i < b.rows; ++i) u[i] = b.at(i, j0) / v[j0];
    for (size_t i = 0; i < b.rows; ++i)
        for (size_t j = 0; j < b.cols; ++j)
            if (b.at(i, j) != u[i] * v[j])
                throw std::logic_error("rank-one factorization failed");

    auto x_pairs = incidence_points(n, q);
    std::vector<PointPair> d1, d2, both;
    for (const PointPair& p : x_pairs) {
        bool in1 = dot_mod(u, p.x.c) == 0;
        bool in2 = dot_mod(v, p.y.c) == 0;
        if (in1) d1.push_back(p);
        if (in2) d2.push_back(p);
        if (in1 && in2) both.push_back(p);
    }
    rep.d1 = d1.size();
    rep.d2 = d2.size();
    rep.both = both.size();

    std::vector<PointPair> uni;
    std::set_union(d1.begin(), d1.end(), d2.begin(), d2.end(), std::back_inserter(uni));
    auto h = enumerate_section(a);
    rep.h_points = h.size();
    rep.union_matches = uni == h;

    rep.intersection_predicted = count_V(rep.kind == "diagonalizable" ? 0 : 1, n, q);
    rep.intersection_matches = rep.both == rep.intersection_predicted;
    rep.match = rep.union_matches && rep.intersection_matches;
    return rep;
}

ChartCheck verify_chart_consistency(const Matrix<Fp>& a, int i, int j) {
    uint32_t q = a.e[0].q;
    int n = static_cast<int>(a.rows) - 1;
    ChartEquation<Fp> eq = chart_equation(a, n, i, j);
    size_t nv = eq.var_names.size();
    std::vector<MultiPoly<Fp>> partials;
    for (size_t t = 0; t < nv; ++t) partials.push_back(eq.p.partial(t));

    ChartCheck chk;
    chk.i = i;
    chk.j = j;
    std::vector<std::vector<uint32_t>> chart_sing;
    std::vector<Fp> pt(nv, Fp(q, 0));
    std::vector<uint32_t> odo(nv, 0);
    for (;;) {
        for (size_t t = 0; t < nv; ++t) pt[t] = Fp(q, odo[t]);
        if (eq.p.eval(pt).is_zero()) {
            bool crit = true;
            for (size_t t = 0; t < nv && crit; ++t)
                if (!partials[t].eval(pt).is_zero()) crit = false;
            if (crit) chart_sing.push_back(odo);
        }
        size_t t = nv;
        while (t > 0) {
            --t;
            if (++odo[t] < q) break;
            odo[t] = 0;
        }
        if (t == 0 && odo[0] == 0) break;
    }
    std::sort(chart_sing.begin(), chart_sing.end());
    chk.chart_singular = chart_sing.size();

    // global singular points with x_i != 0, y_j != 0, in chart coordinates
    std::vector<std::vector<uint32_t>> global;
    for (const PointPair& p : singular_points(a)) {
        if (p.x.c[static_cast<size_t>(i)] == 0 || p.y.c[static_cast<size_t>(j)] == 0) continue;
        Fp xi = Fp(q, p.x.c[static_cast<size_t>(i)]).inv();
        Fp yj = Fp(q, p.y.c[static_cast<size_t>(j)]).inv();
        std::vector<uint32_t> coords;
        for (int k = 0; k <= n; ++k)
            if (k != i) coords.push_back((xi * Fp(q, p.x.c[static_cast<size_t>(k)])).v);
        for (int k = 0; k <= n; ++k)
            if (k != i && k != j) coords.push_back((yj * Fp(q, p.y.c[static_cast<size_t>(k)])).v);
        global.push_back(coords);
    }
    std::sort(global.begin(), global.end());
    chk.global_in_chart = global.size();
    chk.match = chart_sing == global;
    return chk;
}

namespace {

Matrix<Fp> random_invertible_fp(uint32_t q, size_t dim, std::mt19937_64& rng) {
    for (;;) {
        Matrix<Fp> p(dim, dim, Fp(q, 0));
        for (auto& x : p.e) x = Fp(q, static_cast<int64_t>(rng() % q));
        if (rank(p) == static_cast<int>(dim)) return p;
    }
}

Matrix<Rational> random_invertible_q(size_t dim, std::mt19937_64& rng) {
    for (;;) {
        Matrix<Rational> p(dim, dim, Rational(0));
        for (auto& x : p.e)
            x = Rational(static_cast<int64_t>(rng() % 19) - 9);
        if (rank(p) == static_cast<int>(dim)) return p;
    }
}

} // namespace

Matrix<Fp> random_conjugate(const Matrix<Fp>& a, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix<Fp> p = random_invertible_fp(a.e[0].q, a.rows, rng);
    return p * a * inverse(p);
}

Matrix<Rational> random_conjugate(const Matrix<Rational>& a, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix<Rational> p = random_invertible_q(a.rows, rng);
    return p * a * inverse(p);
}

Matrix<Fp> catalog_matrix(const CatalogEntry& e) {
    check_modulus(e.q);
    if (!e.raw_entries.empty()) return fp_matrix(e.q, e.raw_entries);
    if (e.blocks.empty()) throw InputError("catalog entry has neither blocks nor entries");
    size_t dim = 0;
    for (const auto& b : e.blocks) {
        if (b.size < 1) throw InputError("Jordan block size must be >= 1");
        dim += static_cast<size_t>(b.size);
    }
    Matrix<Fp> m(dim, dim, Fp(e.q, 0));
    size_t at = 0;
    for (const auto& b : e.blocks) {
        for (int t = 0; t < b.size; ++t) {
            m.at(at + t, at + t) = Fp(e.q, b.eigenvalue);
            if (t + 1 < b.size) m.at(at + t, at + t + 1) = Fp(e.q, 1);
        }
        at += static_cast<size_t>(b.size);
    }
    return m;
}

Matrix<Rational> catalog_matrix_rational(const CatalogEntry& e) {
    if (e.blocks.empty()) throw InputError("rational form needs a block catalog entry");
    size_t dim = 0;
    for (const auto& b : e.blocks) dim += static_cast<size_t>(b.size);
    Matrix<Rational> m(dim, dim, Rational(0));
    size_t at = 0;
    for (const auto& b : e.blocks) {
        for (int t = 0; t < b.size; ++t) {
            m.at(at + t, at + t) = Rational(b.eigenvalue);
            if (t + 1 < b.size) m.at(at + t, at + t + 1) = Rational(1);
        }
        at += static_cast<size_t>(b.size);
    }
    return m;
}

std::vector<FpEigenData> expected_eigen_data(const CatalogEntry& e) {
    if (e.blocks.empty()) throw InputError("expected eigen data needs a block catalog entry");
    std::map<uint32_t, std::vector<int>> by_residue;
    for (const auto& b : e.blocks) {
        int64_t r = b.eigenvalue % static_cast<int64_t>(e.q);
        if (r < 0) r += e.q;
        by_residue[static_cast<uint32_t>(r)].push_back(b.size);
    }
    std::vector<FpEigenData> out;
    for (const auto& [lam, sizes] : by_residue) {
        FpEigenData d;
        d.lambda = lam;
        for (int s : sizes) {
            d.multiplicity += s;
            d.r += 1;
            if (s > 1) d.s += 1;
        }
        out.push_back(d);
    }
    return out;
}

} // namespace ptb
