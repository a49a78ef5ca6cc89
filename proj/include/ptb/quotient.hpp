#pragma once

#include <vector>

#include "ptb/matrix.hpp"
#include "ptb/poly.hpp"
#include "ptb/rational.hpp"

namespace ptb {

using QPoly = Poly<Rational>;

// Working ring Q[x]/(f), f monic squarefree of degree >= 1. Elements are
// represented by their reduced remainder mod f. Inversion of a nonzero
// element can fail when f is reducible; that failure is the signal dynamic
// evaluation uses to split the modulus.
struct QuotientContext {
    QPoly f;

    explicit QuotientContext(QPoly modulus);
    QPoly reduce(const QPoly& p) const { return p % f; }
    QPoly mul(const QPoly& a, const QPoly& b) const { return (a * b) % f; }
    // Precondition: gcd(u, f) = 1.
    QPoly inv(const QPoly& u) const;
};

struct QuotientRank {
    QPoly factor; // monic divisor of the original modulus
    int rank = 0;
};

// Rank of m over Q[x]/(f) by Gaussian elimination with dynamic evaluation:
// whenever a candidate pivot is a zero divisor, the modulus splits and both
// branches are recomputed from scratch. The returned factors are pairwise
// coprime, multiply to f, and each carries the rank valid at every root of
// that factor. Sorted by (degree, lex coefficients).
std::vector<QuotientRank> rank_over_quotient(const Matrix<QPoly>& m, const QPoly& f);

// m * b with entries reduced mod f.
Matrix<QPoly> mat_mul_mod(const Matrix<QPoly>& m, const Matrix<QPoly>& b, const QPoly& f);

} // namespace ptb
