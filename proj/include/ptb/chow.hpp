#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ptb/rational.hpp"

namespace ptb {

// Integral Chow ring of a smooth section H of P(T_{P^n}), presented by the
// hyperplane classes zeta, alpha and the exceptional-type classes E_0..E_n in
// degree n-1. Normal form: integer combination of the monomial basis
// zeta^i alpha^j (0 <= i <= n-2, 0 <= j <= n) plus the E_k. The rewrite
// eliminating zeta^(n-1) terminates because each application strictly lowers
// the zeta exponent, and anything of degree > 2n-2 is truncated to zero.
struct BasisElement {
    bool exceptional = false;
    int i = 0, j = 0; // zeta^i alpha^j when !exceptional
    int k = 0;        // E_k when exceptional
    int degree(int n) const { return exceptional ? n - 1 : i + j; }
    std::string name() const;
};

struct ChowClass {
    int n = 0;
    std::map<std::pair<int, int>, Int> mono; // (i, j) -> coefficient
    std::vector<Int> exc;                    // coefficient of E_k, k = 0..n

    explicit ChowClass(int n_);
    bool zero() const;

    friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const Int& k, const ChowClass& a);
    friend bool operator==(const ChowClass& a, const ChowClass& b);

    void add_mono(int i, int j, const Int& c);
};

ChowClass chow_zero(int n);
ChowClass chow_one(int n);
ChowClass chow_zeta(int n);
ChowClass chow_alpha(int n);
ChowClass chow_exc(int n, int k);

// Normal form of the raw monomial zeta^a alpha^b.
ChowClass chow_reduce_monomial(int n, int a, int b);

ChowClass mul(const ChowClass& a, const ChowClass& b);
ChowClass pow(const ChowClass& a, int e);

// Coefficient of the top class zeta^(n-2) alpha^n. The argument must be
// homogeneous of degree 2n-2.
Int intersection_number(const ChowClass& c);

// Additive basis of the degree-k part, monomials by ascending zeta exponent,
// then E_0..E_n when k == n-1.
std::vector<BasisElement> chow_basis(int n, int k);

// Independent check: H has bidegree-(1,1)-squared class in P^n x P^n, so
// integrals of zeta^a alpha^b (a+b = 2n-2) equal the h1^n h2^n coefficient of
// (h1+h2)^(a+2) h1^b in Z[h1,h2]/(h1^(n+1), h2^(n+1)). Computed by literal
// truncated-ring expansion, no Chow relations involved.
Int bidegree_oracle(int n, int a, int b);

// Canonical rendering: terms sorted by (degree, basis order), coefficients in
// decimal, e.g. "6 * a^2 + -1 * E0".
std::string to_string(const ChowClass& c);

} // namespace ptb
