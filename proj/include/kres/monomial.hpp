// Monomials in n commuting variables, with the graded-lex order (x1 > x2 > ...)
// used for every basis listing and canonical printout in the project.
#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kres {

struct Monomial {
    std::vector<unsigned> exps;  // one exponent per variable
    unsigned degree = 0;         // cached total degree, equals sum of exps

    std::size_t n() const { return exps.size(); }
};

inline Monomial make_monomial(std::vector<unsigned> exps) {
    Monomial m;
    m.degree = std::accumulate(exps.begin(), exps.end(), 0u);
    m.exps = std::move(exps);
    return m;
}

inline Monomial unit_monomial(std::size_t n) { return make_monomial(std::vector<unsigned>(n, 0u)); }

inline bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
inline bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

inline Monomial mul(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("monomial variable count mismatch");
    std::vector<unsigned> e(a.n());
    for (std::size_t i = 0; i < a.n(); ++i) e[i] = a.exps[i] + b.exps[i];
    return make_monomial(std::move(e));
}

inline bool divides(const Monomial& d, const Monomial& m) {
    if (d.n() != m.n()) return false;
    for (std::size_t i = 0; i < d.n(); ++i)
        if (d.exps[i] > m.exps[i]) return false;
    return true;
}

inline Monomial quotient(const Monomial& m, const Monomial& d) {
    if (!divides(d, m)) throw std::invalid_argument("monomial quotient is not a monomial");
    std::vector<unsigned> e(m.n());
    for (std::size_t i = 0; i < m.n(); ++i) e[i] = m.exps[i] - d.exps[i];
    return make_monomial(std::move(e));
}

// Canonical listing order: a precedes b when a has higher total degree, or the
// same degree and lexicographically larger exponent vector (x1 most significant).
// Degree-p bases come out as x1^p, x1^{p-1}x2, ..., xn^p.
struct MonomialBefore {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree != b.degree) return a.degree > b.degree;
        return a.exps > b.exps;
    }
};

// All monomials of total degree p in n variables, in canonical order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned p) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (p == 0) out.push_back(unit_monomial(0));
        return out;
    }
    std::vector<unsigned> cur(n, 0u);
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
        if (var + 1 == n) {
            cur[var] = left;
            out.push_back(make_monomial(cur));
            return;
        }
        for (unsigned e = left;; --e) {
            cur[var] = e;
            self(self, var + 1, left - e);
            if (e == 0) break;
        }
    };
    rec(rec, 0, p);
    return out;
}

// "x1^2*x3" style; the constant monomial prints as "1"
inline std::string monomial_str(const Monomial& m, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.n(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += vars.at(i);
        if (m.exps[i] > 1) s += '^' + std::to_string(m.exps[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::vector<std::string> default_var_names(std::size_t n) {
    std::vector<std::string> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = "x" + std::to_string(i + 1);
    return v;
}

}  // namespace kres
