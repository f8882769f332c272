// Homogeneous polynomials with exact rational coefficients and square
// polynomial maps (n polynomials of common degree r in n variables).
#pragma once

#include <map>
#include <vector>

#include "kres/monomial.hpp"
#include "kres/rat.hpp"

namespace kres {

// Sparse homogeneous polynomial: every stored monomial has total degree
// exactly `degree` and exponent length n; no zero coefficients are kept.
// The zero polynomial is an empty term map with an explicit degree tag.
struct HPoly {
    unsigned n = 0;
    unsigned degree = 0;
    std::map<Monomial, Rat, MonomialBefore> terms;
};

struct PolyMap {
    unsigned n = 0;
    unsigned r = 0;
    std::vector<HPoly> polys;  // exactly n entries, all of shape (n, r)
};

HPoly make_hpoly(unsigned n, unsigned degree);
// Adds coeff * m into p, dropping the term if it cancels to zero.
void add_term(HPoly& p, const Monomial& m, const Rat& coeff);
Rat coeff(const HPoly& p, const Monomial& m);
bool is_zero(const HPoly& p);

HPoly operator+(const HPoly& a, const HPoly& b);
HPoly operator-(const HPoly& a, const HPoly& b);
HPoly scale(const HPoly& p, const Rat& lambda);

PolyMap make_polymap(std::vector<HPoly> polys);

// Exact evaluation at a rational point of length p.n.
Rat eval(const HPoly& p, const std::vector<Rat>& point);

// Multiplies every coefficient of every component by lambda.
PolyMap scale_map(const PolyMap& f, const Rat& lambda);

// p * m; degree of the result is p.degree + deg(m).
HPoly mul_monomial(const HPoly& p, const Monomial& m);

std::string hpoly_str(const HPoly& p, const std::vector<std::string>& vars);

}  // namespace kres
