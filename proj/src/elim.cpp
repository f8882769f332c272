#include "kres/elim.hpp"

#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kres {

namespace {

// Dense integer working matrix for fraction-free elimination.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;
    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(i, j), at(k, j));
    }
};

// Clears denominators row by row; `clearing` returns the product of the
// per-row multipliers (always positive). Row scaling leaves ranks and pivot
// column choices unchanged; determinants are divided back by `clearing`.
IntMat clear_denominators(const ExactMatrix& m, Int& clearing) {
    IntMat w;
    w.rows = m.rows;
    w.cols = m.cols;
    w.a.resize(m.rows * m.cols);
    clearing = 1;
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Rat& q = m.at(i, j);
            Int scaled = q.get_num() * (l / q.get_den());
            w.a[i * m.cols + j] = std::move(scaled);
        }
        clearing *= l;
    }
    return w;
}

inline void divexact(Int& q, const Int& num, const Int& den) {
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
}

// One fraction-free update of row i against pivot row r (pivot at column c),
// touching columns (c, cols). After the update row i has a zero in column c.
inline void eliminate_row(IntMat& m, std::size_t i, std::size_t r, std::size_t c, const Int& prev) {
    const Int& pivot = m.at(r, c);
    Int t;
    for (std::size_t j = c + 1; j < m.cols; ++j) {
        t = m.at(i, j) * pivot - m.at(i, c) * m.at(r, j);
        divexact(m.at(i, j), t, prev);
    }
    m.at(i, c) = 0;
}

// Bareiss determinant of the integer matrix; parallelism over the updated rows.
Int det_core(IntMat m, bool parallel) {
    const std::size_t n = m.rows;
    if (n == 0) return Int(1);
    int sgn = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0) ++piv;
        if (piv == n) return Int(0);
        if (piv != k) {
            m.swap_rows(piv, k);
            sgn = -sgn;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (std::size_t i = k + 1; i < n; ++i) eliminate_row(m, i, k, k, prev);
        prev = m.at(k, k);
    }
    (void)parallel;
    return sgn < 0 ? Int(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

// Left-to-right pivot sweep; returns the pivot columns (the lexicographically
// first independent column set). rank = number of pivots.
std::vector<std::size_t> pivot_core(IntMat m, bool parallel) {
    std::vector<std::size_t> pivots;
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        m.swap_rows(piv, r);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (std::size_t i = r + 1; i < m.rows; ++i) eliminate_row(m, i, r, c, prev);
        prev = m.at(r, c);
        pivots.push_back(c);
        ++r;
    }
    (void)parallel;
    return pivots;
}

Rat det_impl(const ExactMatrix& m, bool parallel) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    Int clearing;
    IntMat w = clear_denominators(m, clearing);
    Int d = det_core(std::move(w), parallel);
    return make_rat(d, clearing);
}

std::size_t rank_impl(const ExactMatrix& m, bool parallel) {
    Int clearing;
    IntMat w = clear_denominators(m, clearing);
    return pivot_core(std::move(w), parallel).size();
}

constexpr std::size_t kParallelThreshold = 32;

}  // namespace

Rat bareiss_det_serial(const ExactMatrix& m) { return det_impl(m, false); }
Rat bareiss_det_parallel(const ExactMatrix& m) { return det_impl(m, true); }

Rat bareiss_det(const ExactMatrix& m) {
#ifdef _OPENMP
    if (m.rows >= kParallelThreshold) return det_impl(m, true);
#endif
    return det_impl(m, false);
}

std::size_t rank_serial(const ExactMatrix& m) { return rank_impl(m, false); }
std::size_t rank_parallel(const ExactMatrix& m) { return rank_impl(m, true); }

std::size_t rank(const ExactMatrix& m) {
#ifdef _OPENMP
    if (m.rows >= kParallelThreshold) return rank_impl(m, true);
#endif
    return rank_impl(m, false);
}

std::vector<std::size_t> lex_pivot_columns(const ExactMatrix& m) {
    Int clearing;
    IntMat w = clear_denominators(m, clearing);
#ifdef _OPENMP
    const bool parallel = m.rows >= kParallelThreshold;
#else
    const bool parallel = false;
#endif
    return pivot_core(std::move(w), parallel);
}

}  // namespace kres
