// Exact rational scalars. Everything downstream (polynomials, matrices,
// determinants) is computed over these; no floating point on the exact paths.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kres {

using Int = mpz_class;
// Canonical form is maintained by gmp: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int sign(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

inline Rat rat_abs(const Rat& q) { return abs(q); }

// q^e for e >= 0
inline Rat rat_pow(const Rat& q, unsigned long e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    return make_rat(num, den);
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// "p/q" for non-integers, plain "p" otherwise
inline std::string rat_str(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline std::optional<Rat> rat_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

}  // namespace kres
