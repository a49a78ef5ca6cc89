#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptb/chart.hpp"
#include "ptb/classify.hpp"
#include "ptb/fp.hpp"
#include "ptb/matrix.hpp"
#include "ptb/rational.hpp"

namespace ptb {

// Point of P^m(F_q), normalized so the first nonzero coordinate is 1; the
// coordinate vector alone is then a unique representative.
struct ProjPoint {
    std::vector<uint32_t> c;
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c < b.c; }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c == b.c; }
};

struct PointPair {
    ProjPoint x, y;
    friend bool operator<(const PointPair& a, const PointPair& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
    friend bool operator==(const PointPair& a, const PointPair& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// All of P^m(F_q) in lexicographic order, (q^(m+1)-1)/(q-1) points.
std::vector<ProjPoint> proj_space(int m, uint32_t q);

Matrix<Fp> fp_matrix(uint32_t q, const std::vector<std::vector<int64_t>>& entries);

// F_q points of the section H_A = {x.y = 0, x^t A y = 0}, enumerated by a
// linear solve in y per point [x], partitioned across PTB_WORKERS threads and
// merged into sorted order.
std::vector<PointPair> enumerate_section(const Matrix<Fp>& a);

// Singular points of H_A: pairs where the 2 x (2n+2) matrix with rows
// (y | x), (Ay | A^t x) has rank <= 1.
std::vector<PointPair> singular_points(const Matrix<Fp>& a);
bool is_singular_pair(const Matrix<Fp>& a, const Matrix<Fp>& at, const PointPair& p);

// |V_{s,r}(F_q)| by direct enumeration of P^{r-1} x P^{r-1}.
uint64_t count_V(int s, int r, uint32_t q);

// Eigen data over F_q; requires the characteristic polynomial to split.
struct FpEigenData {
    uint32_t lambda = 0;
    int multiplicity = 0;
    int r = 0; // geometric multiplicity
    int s = 0; // Jordan blocks of size > 1
};
std::vector<FpEigenData> fp_eigen_data(const Matrix<Fp>& a); // throws NonSplitError

struct ShapeCount {
    std::string eigenvalue;
    int s = 0, r = 0;
    uint64_t enumerated = 0;
    uint64_t predicted = 0;
};

struct CountReport {
    uint32_t q = 0;
    int n = 0;
    uint64_t h_points = 0;
    uint64_t sing_enumerated = 0;
    uint64_t sing_predicted = 0;
    std::vector<ShapeCount> shapes;
    bool match = false;
};

// Brute-force check of the singular-locus prediction for an irreducible-type
// matrix over F_q: per-eigenvalue enumerated counts against |V_{s,r}(F_q)|.
CountReport verify_sing_prediction(const Matrix<Fp>& a);

struct SplitReport {
    uint32_t q = 0;
    int n = 0;
    uint32_t lambda = 0;
    std::string kind; // "diagonalizable" or "nilpotent"
    uint64_t h_points = 0, d1 = 0, d2 = 0, both = 0;
    uint64_t intersection_predicted = 0;
    bool union_matches = false;
    bool intersection_matches = false;
    bool match = false;
};

// For A = lambda I + a b^t: checks H = D1 u D2 pointwise and the D1 n D2
// count against |V_{0,n}| or |V_{1,n}|.
SplitReport verify_reducible_split(const Matrix<Fp>& a);

struct ChartCheck {
    int i = 0, j = 0;
    uint64_t chart_singular = 0;
    uint64_t global_in_chart = 0;
    bool match = false; // exact set equality in chart coordinates
};

// Singular points of {P = 0} in the affine chart versus the global singular
// points landing in that chart.
ChartCheck verify_chart_consistency(const Matrix<Fp>& a, int i, int j);

// Seeded conjugation. Uses raw mt19937_64 draws reduced mod q (or into
// [-9, 9] over the rationals) so streams are reproducible across platforms.
Matrix<Fp> random_conjugate(const Matrix<Fp>& a, uint64_t seed);
Matrix<Rational> random_conjugate(const Matrix<Rational>& a, uint64_t seed);

struct JordanBlock {
    int64_t eigenvalue = 0;
    int size = 1;
};

struct CatalogEntry {
    uint32_t q = 0;
    std::vector<JordanBlock> blocks;                 // empty for raw entries
    std::vector<std::vector<int64_t>> raw_entries;   // empty for block entries
    std::string label;
};

Matrix<Fp> catalog_matrix(const CatalogEntry& e);
Matrix<Rational> catalog_matrix_rational(const CatalogEntry& e); // block entries only

// Ground-truth (s, r) per eigenvalue residue, straight from the block data
// (blocks whose eigenvalues collide mod q are merged).
std::vector<FpEigenData> expected_eigen_data(const CatalogEntry& e);

} // namespace ptb
