// Graded spaces Omega(p,q): polynomials of degree p in x_1..x_n times degree q
// in the anticommuting theta_1..theta_n, with the fixed basis order used
// throughout: monomials outer (graded lex descending, x1 > x2 > ...), theta
// words inner (descending lex, i.e. ordered by ascending complement).
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kres/monomial.hpp"

namespace kres {

struct ThetaWord {
    std::vector<unsigned> indices;  // strictly increasing, 1-based, size q <= n

    std::size_t q() const { return indices.size(); }
};

bool operator==(const ThetaWord& a, const ThetaWord& b);

struct OmegaBasis {
    unsigned n = 0, p = 0, q = 0;
    std::vector<std::pair<Monomial, ThetaWord>> elements;
};

struct KoszulSpec {
    unsigned n = 0, r = 0, R = 0;
    // (p_i, q_i) gradings left to right, ending at (R, 0); consecutive terms
    // differ by (+r, -1). Leftmost q is min(R/r, n).
    std::vector<std::pair<unsigned, unsigned>> terms;
};

// C(p+n-1, p) * C(n, q); zero when q > n (the space is trivial).
std::uint64_t omega_dim(unsigned n, unsigned p, unsigned q);

std::uint64_t binomial(unsigned n, unsigned k);

// Words of length q in descending lex order: for n=3, q=2 this is
// (th2 th3), (th1 th3), (th1 th2).
std::vector<ThetaWord> theta_words(unsigned n, unsigned q);

OmegaBasis omega_basis(unsigned n, unsigned p, unsigned q);

KoszulSpec koszul_spec(unsigned n, unsigned r, unsigned R);

// Alternating sum of term dimensions, rightmost term positive; matches the
// chi column of the reference tower tables.
long long euler_char(unsigned n, unsigned r, unsigned R);

// Coefficients of ((1-t^r)/(1-t))^n up to t^R_max; entry R equals
// euler_char(n, r, R).
std::vector<long long> euler_genfunc(unsigned n, unsigned r, unsigned R_max);

// n(r-1)+1: the smallest R whose complex has vanishing Euler characteristic,
// hence a determinant.
unsigned min_exact_R(unsigned n, unsigned r);

// "x1^2*th3"-style rendering of a basis element ("1" for the trivial one).
std::string basis_element_str(const Monomial& m, const ThetaWord& w);

}  // namespace kres
