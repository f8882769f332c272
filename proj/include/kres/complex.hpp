// Chain complexes of exact matrices: nilpotency verification, cohomology, and
// Cayley's determinant of a complex as a ratio of complementary minors.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kres/elim.hpp"
#include "kres/matrix.hpp"

namespace kres {

// Differential i is an l_i x l_{i+1} matrix, row-indexed by the source basis;
// composition is the plain matrix product diffs[i] * diffs[i+1].
struct ChainComplex {
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;
};

// Shape-checked construction; nilpotency is *not* enforced here (it is a
// testable property, see verify_nilpotent).
ChainComplex make_complex(std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs);

struct NilpotencyReport {
    bool ok = true;
    // 1-based position of the first nonzero entry of diffs[i]*diffs[i+1]
    std::size_t diff_index = 0, row = 0, col = 0;
};

NilpotencyReport verify_nilpotent(const ChainComplex& c);

struct CohomologyReport {
    std::vector<std::size_t> ranks;  // rank of each differential
    std::vector<std::size_t> h;      // cohomology dimension at each term
    long long chi = 0;               // alternating dim sum, rightmost positive
    bool exact = false;              // all h zero
};

// Requires a nilpotent complex. h_i = dim Ker(d_i) - rank(d_{i-1}) with the
// boundary maps of rank zero.
CohomologyReport cohomology(const ChainComplex& c);

// Index subsets sigma_2 .. sigma_{p-1} (0-based, ascending) selecting the
// numerator/denominator minors. sigma_1 is empty and sigma_p is the full
// column set; neither is stored.
struct MinorSelection {
    std::vector<std::vector<std::size_t>> sigmas;
};

// |sigma_i| for i = 2..p-1 (the partial alternating sums k_1, k_2, ...).
// Throws if the Euler characteristic is nonzero or some partial sum is
// negative (no determinant exists for such dims).
std::vector<std::size_t> sigma_sizes(const std::vector<std::size_t>& dims);

// Deterministic selection with every denominator minor nonzero, found by a
// left-to-right exact pivot sweep (lexicographically first valid choice).
// nullopt when no valid selection exists (the complex is not exact).
std::optional<MinorSelection> select_minors(const ChainComplex& c);

// DET(d_1..d_{p-1}) = M_{p-1} * M_{p-3} * ... / (M_{p-2} * M_{p-4} * ...),
// where M_i occupies rows complementary to sigma_i and columns sigma_{i+1}.
// The value is selection-independent up to sign.
Rat det_complex(const ChainComplex& c, const MinorSelection& sel);

// Total degree of DET in the matrix entries: k_{p-1} - k_{p-2} + ...
long long det_degree(const std::vector<std::size_t>& dims);

}  // namespace kres
