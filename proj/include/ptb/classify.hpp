#pragma once

#include <string>
#include <vector>

#include "ptb/eigen.hpp"
#include "ptb/errors.hpp"
#include "ptb/matrix.hpp"
#include "ptb/rational.hpp"

namespace ptb {

// The model singular locus V_{s,r}: the subvariety of P^{r-1} x P^{r-1} cut
// out by sum_{s < i <= r} z_i w_i = 0. Empty when (s,r) = (0,1); a point when
// (s,r) = (1,1).
struct VShape {
    int s = 0;
    int r = 1;
};

int v_shape_dim(const VShape& v);
bool operator==(const VShape& a, const VShape& b);

// One entry of the singular-locus description. Deliberately carries only
// similarity- and affine-transform-invariant data, so reports are byte-stable
// under A -> P A P^{-1} and A -> cA + dI.
struct SingShape {
    int factor_degree = 1;  // degree of the eigen factor (1 = rational orbit)
    int multiplicity = 1;   // algebraic multiplicity
    VShape shape;           // s = blocks of size > 1, r = number of blocks
};

struct SectionReport {
    int n = 0;
    Int degree;                  // binom(2n, n)
    bool reducible = false;

    // reducible case
    std::string reducible_kind;  // "diagonalizable" or "nilpotent"
    Int component_degree;        // binom(2n, n) / 2
    VShape component_intersection; // V_{0,n} or V_{1,n}
    std::string component_type;  // both components carry this bundle structure

    // irreducible case
    std::vector<SingShape> sing_shapes; // sorted by invariant key, may be empty

    int sing_dim = -1;           // max dim of the singular locus, -1 if smooth
    bool smooth = false;
    bool dual_member = false;    // hyperplane lies in the dual variety of X
    bool canonical = false;      // canonical singularities (irreducible case)
};

bool operator==(const SectionReport& a, const SectionReport& b);

struct ReducibleInfo {
    bool reducible = false;
    std::string kind;     // "diagonalizable" (trace(A - lambda I) != 0) or "nilpotent"
    Rational lambda;      // the eigenvalue with geometric multiplicity n
};

// A is reducible-type iff A = lambda I + (rank one), i.e. some eigenvalue has
// geometric multiplicity n. Such an eigenvalue is automatically rational.
ReducibleInfo is_reducible(const Matrix<Rational>& a);
ReducibleInfo reducible_from_structure(const EigenStructure& st);

// Membership of the hyperplane in the dual variety of the incidence variety:
// holds iff the characteristic polynomial has a repeated root, detected by a
// squarefree test (no eigen machinery), so it cross-checks the classifier.
bool dual_membership(const Matrix<Rational>& a);

// Full classification of the hyperplane section attached to A (nonscalar,
// (n+1) x (n+1), n >= 2).
SectionReport classify(const Matrix<Rational>& a, int n);

} // namespace ptb
