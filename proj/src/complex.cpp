#include "kres/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace kres {

namespace {

std::vector<std::size_t> complement(const std::vector<std::size_t>& subset, std::size_t size) {
    std::vector<std::size_t> out;
    out.reserve(size - subset.size());
    std::size_t s = 0;
    for (std::size_t i = 0; i < size; ++i) {
        if (s < subset.size() && subset[s] == i)
            ++s;
        else
            out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> full_range(std::size_t size) {
    std::vector<std::size_t> out(size);
    for (std::size_t i = 0; i < size; ++i) out[i] = i;
    return out;
}

// k_i = l_i - l_{i-1} + ... ; requires all k_i >= 0 and k_p = 0 (chi = 0).
std::vector<long long> partial_sums(const std::vector<std::size_t>& dims) {
    std::vector<long long> k(dims.size() + 1, 0);
    for (std::size_t i = 1; i <= dims.size(); ++i) {
        k[i] = static_cast<long long>(dims[i - 1]) - k[i - 1];
        if (k[i] < 0)
            throw std::invalid_argument("no determinant exists: negative partial alternating sum of dims");
    }
    if (k[dims.size()] != 0)
        throw std::invalid_argument("no determinant exists: Euler characteristic of dims is nonzero");
    return k;
}

}  // namespace

ChainComplex make_complex(std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs) {
    if (dims.empty()) throw std::invalid_argument("complex needs at least one term");
    if (diffs.size() + 1 != dims.size())
        throw std::invalid_argument("complex with p terms needs p-1 differentials");
    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (diffs[i].rows != dims[i] || diffs[i].cols != dims[i + 1])
            throw std::invalid_argument("differential shape does not match term dimensions");
    return ChainComplex{std::move(dims), std::move(diffs)};
}

NilpotencyReport verify_nilpotent(const ChainComplex& c) {
    for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i) {
        ExactMatrix prod = matmul(c.diffs[i], c.diffs[i + 1]);
        for (std::size_t r = 0; r < prod.rows; ++r)
            for (std::size_t j = 0; j < prod.cols; ++j)
                if (prod.at(r, j) != 0) return NilpotencyReport{false, i + 1, r + 1, j + 1};
    }
    return NilpotencyReport{};
}

CohomologyReport cohomology(const ChainComplex& c) {
    const std::size_t p = c.dims.size();
    CohomologyReport rep;
    rep.ranks.reserve(c.diffs.size());
    for (const auto& d : c.diffs) rep.ranks.push_back(rank(d));
    rep.h.resize(p);
    for (std::size_t i = 0; i < p; ++i) {
        const long long rank_out = i < rep.ranks.size() ? static_cast<long long>(rep.ranks[i]) : 0;
        const long long rank_in = i > 0 ? static_cast<long long>(rep.ranks[i - 1]) : 0;
        const long long hi = static_cast<long long>(c.dims[i]) - rank_out - rank_in;
        if (hi < 0) throw std::logic_error("negative cohomology dimension: complex is not nilpotent");
        rep.h[i] = static_cast<std::size_t>(hi);
    }
    rep.chi = 0;
    for (std::size_t i = 0; i < p; ++i) {
        const long long d = static_cast<long long>(c.dims[i]);
        rep.chi += ((p - 1 - i) % 2 == 0) ? d : -d;
    }
    rep.exact = std::all_of(rep.h.begin(), rep.h.end(), [](std::size_t v) { return v == 0; });
    return rep;
}

std::vector<std::size_t> sigma_sizes(const std::vector<std::size_t>& dims) {
    const auto k = partial_sums(dims);
    std::vector<std::size_t> sizes;
    for (std::size_t i = 2; i + 1 <= dims.size() && i <= dims.size() - 1; ++i)
        sizes.push_back(static_cast<std::size_t>(k[i - 1]));
    return sizes;
}

std::optional<MinorSelection> select_minors(const ChainComplex& c) {
    const std::size_t p = c.dims.size();
    const auto k = partial_sums(c.dims);
    MinorSelection sel;
    std::vector<std::size_t> sigma_prev;  // sigma_1 = {}
    for (std::size_t i = 1; i <= p - 1; ++i) {
        const auto rows = complement(sigma_prev, c.dims[i - 1]);
        const ExactMatrix sub = submatrix(c.diffs[i - 1], rows, full_range(c.dims[i]));
        std::vector<std::size_t> pivots = lex_pivot_columns(sub);
        if (pivots.size() != static_cast<std::size_t>(k[i])) return std::nullopt;  // rank drop
        if (i < p - 1) sel.sigmas.push_back(pivots);
        sigma_prev = std::move(pivots);
    }
    return sel;
}

Rat det_complex(const ChainComplex& c, const MinorSelection& sel) {
    const std::size_t p = c.dims.size();
    if (p < 2) throw std::invalid_argument("determinant needs a complex with at least two terms");
    const auto k = partial_sums(c.dims);
    if (sel.sigmas.size() + 2 != p)
        throw std::invalid_argument("selection must provide sigma_2 .. sigma_{p-1}");

    // sigma_1 = {}, sigma_p = full; sizes must match the alternating sums
    std::vector<std::vector<std::size_t>> sigma(p + 1);
    for (std::size_t i = 2; i <= p - 1; ++i) {
        sigma[i] = sel.sigmas[i - 2];
        if (sigma[i].size() != static_cast<std::size_t>(k[i - 1]))
            throw std::invalid_argument("selection subset has wrong size");
        for (std::size_t idx : sigma[i])
            if (idx >= c.dims[i - 1]) throw std::invalid_argument("selection index out of range");
    }
    sigma[p] = full_range(c.dims[p - 1]);

    Rat num(1), den(1);
    for (std::size_t i = 1; i <= p - 1; ++i) {
        const auto rows = complement(sigma[i], c.dims[i - 1]);
        const ExactMatrix minor = submatrix(c.diffs[i - 1], rows, sigma[i + 1]);
        Rat m = bareiss_det(minor);
        const bool numerator = (p - i) % 2 == 1;  // i = p-1, p-3, ...
        if (numerator) {
            num *= m;
        } else {
            if (m == 0) throw std::invalid_argument("denominator minor vanishes for this selection");
            den *= m;
        }
    }
    return Rat(num / den);
}

long long det_degree(const std::vector<std::size_t>& dims) {
    const auto k = partial_sums(dims);
    const std::size_t p = dims.size();
    long long deg = 0;
    for (std::size_t i = 1; i <= p - 1; ++i) deg += ((p - i) % 2 == 1) ? k[i] : -k[i];
    return deg;
}

}  // namespace kres
