// Fraction-free (Bareiss) elimination kernels: exact determinants, ranks and
// greedy pivot-column selection. Each kernel has a plain serial reference and
// an OpenMP variant; both are deterministic and produce identical results
// (tools/bench compares their speed, tests compare their output).
#pragma once

#include <cstddef>
#include <vector>

#include "kres/matrix.hpp"

namespace kres {

// Exact determinant of a square matrix. Dispatches to the parallel kernel for
// larger matrices when OpenMP is enabled.
Rat bareiss_det(const ExactMatrix& m);
Rat bareiss_det_serial(const ExactMatrix& m);
Rat bareiss_det_parallel(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);
std::size_t rank_serial(const ExactMatrix& m);
std::size_t rank_parallel(const ExactMatrix& m);

// Lexicographically first set of linearly independent columns (0-based,
// ascending), found by a left-to-right pivot sweep; size equals rank(m).
std::vector<std::size_t> lex_pivot_columns(const ExactMatrix& m);

}  // namespace kres
