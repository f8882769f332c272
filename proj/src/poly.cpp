#include "kres/poly.hpp"

#include <stdexcept>

namespace kres {

HPoly make_hpoly(unsigned n, unsigned degree) {
    HPoly p;
    p.n = n;
    p.degree = degree;
    return p;
}

void add_term(HPoly& p, const Monomial& m, const Rat& coeff) {
    if (m.n() != p.n) throw std::invalid_argument("term has wrong variable count");
    if (m.degree != p.degree) throw std::invalid_argument("term degree does not match polynomial degree");
    if (coeff == 0) return;
    auto it = p.terms.find(m);
    if (it == p.terms.end()) {
        p.terms.emplace(m, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) p.terms.erase(it);
    }
}

Rat coeff(const HPoly& p, const Monomial& m) {
    auto it = p.terms.find(m);
    return it == p.terms.end() ? Rat(0) : it->second;
}

bool is_zero(const HPoly& p) { return p.terms.empty(); }

HPoly operator+(const HPoly& a, const HPoly& b) {
    if (a.n != b.n || a.degree != b.degree) throw std::invalid_argument("polynomial shape mismatch in +");
    HPoly out = a;
    for (const auto& [m, c] : b.terms) add_term(out, m, c);
    return out;
}

HPoly operator-(const HPoly& a, const HPoly& b) {
    if (a.n != b.n || a.degree != b.degree) throw std::invalid_argument("polynomial shape mismatch in -");
    HPoly out = a;
    for (const auto& [m, c] : b.terms) add_term(out, m, Rat(-c));
    return out;
}

HPoly scale(const HPoly& p, const Rat& lambda) {
    HPoly out = make_hpoly(p.n, p.degree);
    if (lambda == 0) return out;
    for (const auto& [m, c] : p.terms) out.terms.emplace(m, Rat(c * lambda));
    return out;
}

PolyMap make_polymap(std::vector<HPoly> polys) {
    if (polys.empty()) throw std::invalid_argument("polynomial map must have at least one component");
    PolyMap f;
    f.n = polys.front().n;
    f.r = polys.front().degree;
    if (polys.size() != f.n) throw std::invalid_argument("polynomial map must be square (n polynomials in n variables)");
    for (const auto& p : polys)
        if (p.n != f.n || p.degree != f.r)
            throw std::invalid_argument("all map components must share n and degree");
    f.polys = std::move(polys);
    return f;
}

Rat eval(const HPoly& p, const std::vector<Rat>& point) {
    if (point.size() != p.n) throw std::invalid_argument("evaluation point has wrong dimension");
    Rat total(0);
    for (const auto& [m, c] : p.terms) {
        Rat term = c;
        for (std::size_t i = 0; i < p.n; ++i)
            if (m.exps[i] > 0) term *= rat_pow(point[i], m.exps[i]);
        total += term;
    }
    return total;
}

PolyMap scale_map(const PolyMap& f, const Rat& lambda) {
    PolyMap out = f;
    for (auto& p : out.polys) p = scale(p, lambda);
    return out;
}

HPoly mul_monomial(const HPoly& p, const Monomial& m) {
    if (m.n() != p.n) throw std::invalid_argument("monomial has wrong variable count");
    HPoly out = make_hpoly(p.n, p.degree + m.degree);
    for (const auto& [k, c] : p.terms) out.terms.emplace(mul(k, m), c);
    return out;
}

std::string hpoly_str(const HPoly& p, const std::vector<std::string>& vars) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : p.terms) {
        Rat a = rat_abs(c);
        if (s.empty()) {
            if (sign(c) < 0) s += "-";
        } else {
            s += sign(c) < 0 ? " - " : " + ";
        }
        std::string ms = monomial_str(m, vars);
        if (a == 1 && ms != "1")
            s += ms;
        else if (ms == "1")
            s += rat_str(a);
        else
            s += rat_str(a) + "*" + ms;
    }
    return s;
}

}  // namespace kres
