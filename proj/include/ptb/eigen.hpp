#pragma once

#include <vector>

#include "ptb/matrix.hpp"
#include "ptb/poly.hpp"
#include "ptb/rational.hpp"

namespace ptb {

// All eigenvalues that share one Jordan profile: `factor` is the product of
// their minimal polynomials, so its degree counts those eigenvalues over the
// algebraic closure. Grouping by profile (rather than by irreducible factor)
// keeps the class list canonical without ever factoring into irreducibles.
struct EigenClass {
    Poly<Rational> factor;        // monic, squarefree, pairwise coprime across classes
    int multiplicity = 0;         // algebraic multiplicity of each root
    int geom_multiplicity = 0;    // r = nullity(A - lambda I)
    int blocks_above_one = 0;     // s = number of Jordan blocks of size > 1
    std::vector<int> block_sizes; // descending, sum = multiplicity, count = r

    // rational eigenvalue when factor is linear
    bool rational() const { return factor.degree() == 1; }
    Rational eigenvalue() const { return -factor.coeff(0); }
};

struct EigenStructure {
    int size = 0; // matrix dimension (n+1)
    Poly<Rational> charpoly;
    std::vector<EigenClass> classes; // ordered by (factor degree, lex coefficients)
};

// Jordan data of A over the rationals without factoring into irreducibles:
// squarefree factors are refined by dynamic evaluation exactly as far as the
// nullity computations force, so conjugate eigenvalues stay bundled.
EigenStructure eigen_structure(const Matrix<Rational>& a);

} // namespace ptb
