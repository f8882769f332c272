#include "kres/omega.hpp"

#include <algorithm>
#include <stdexcept>

namespace kres {

bool operator==(const ThetaWord& a, const ThetaWord& b) { return a.indices == b.indices; }

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at every step
    }
    return r;
}

std::uint64_t omega_dim(unsigned n, unsigned p, unsigned q) {
    if (q > n) return 0;
    return binomial(p + n - 1, p) * binomial(n, q);
}

std::vector<ThetaWord> theta_words(unsigned n, unsigned q) {
    if (q > n) return {};
    // ascending-lex combinations, then reversed to get descending lex
    std::vector<ThetaWord> words;
    std::vector<unsigned> cur;
    cur.reserve(q);
    auto rec = [&](auto&& self, unsigned next) -> void {
        if (cur.size() == q) {
            words.push_back(ThetaWord{cur});
            return;
        }
        for (unsigned i = next; i + (q - cur.size()) <= n + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    std::reverse(words.begin(), words.end());
    return words;
}

OmegaBasis omega_basis(unsigned n, unsigned p, unsigned q) {
    if (q > n) throw std::invalid_argument("theta degree exceeds variable count");
    OmegaBasis b;
    b.n = n;
    b.p = p;
    b.q = q;
    const auto monos = monomials_of_degree(n, p);
    const auto words = theta_words(n, q);
    b.elements.reserve(monos.size() * words.size());
    for (const auto& m : monos)
        for (const auto& w : words) b.elements.emplace_back(m, w);
    return b;
}

KoszulSpec koszul_spec(unsigned n, unsigned r, unsigned R) {
    if (n == 0 || r == 0) throw std::invalid_argument("map type requires n >= 1 and r >= 1");
    KoszulSpec s;
    s.n = n;
    s.r = r;
    s.R = R;
    const unsigned q_max = std::min(R / r, n);
    for (unsigned q = q_max;; --q) {
        s.terms.emplace_back(R - q * r, q);
        if (q == 0) break;
    }
    return s;
}

long long euler_char(unsigned n, unsigned r, unsigned R) {
    const KoszulSpec s = koszul_spec(n, r, R);
    long long chi = 0;
    // rightmost term (q = 0) counted positive
    for (const auto& [p, q] : s.terms) {
        const long long d = static_cast<long long>(omega_dim(n, p, q));
        chi += (q % 2 == 0) ? d : -d;
    }
    return chi;
}

std::vector<long long> euler_genfunc(unsigned n, unsigned r, unsigned R_max) {
    if (n == 0 || r == 0) throw std::invalid_argument("map type requires n >= 1 and r >= 1");
    // ((1 - t^r)/(1 - t))^n = (1 + t + ... + t^{r-1})^n, truncated at t^R_max
    std::vector<long long> acc{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<long long> next(std::min<std::size_t>(acc.size() + r - 1, R_max + 1), 0);
        for (std::size_t a = 0; a < acc.size(); ++a) {
            if (acc[a] == 0) continue;
            for (unsigned b = 0; b < r && a + b < next.size(); ++b) next[a + b] += acc[a];
        }
        acc = std::move(next);
    }
    acc.resize(R_max + 1, 0);
    return acc;
}

unsigned min_exact_R(unsigned n, unsigned r) {
    if (n == 0 || r == 0) throw std::invalid_argument("map type requires n >= 1 and r >= 1");
    return n * (r - 1) + 1;
}

std::string basis_element_str(const Monomial& m, const ThetaWord& w) {
    std::string s;
    if (m.degree > 0) s = monomial_str(m, default_var_names(m.n()));
    for (unsigned i : w.indices) {
        if (!s.empty()) s += '*';
        s += "th" + std::to_string(i);
    }
    return s.empty() ? "1" : s;
}

}  // namespace kres
