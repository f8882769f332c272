// Dense exact matrices (row-major) over Rat.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kres/rat.hpp"

namespace kres {

struct ExactMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rat> a;  // row-major, a.size() == rows * cols

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

inline ExactMatrix make_matrix(std::size_t rows, std::size_t cols) {
    ExactMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows * cols, Rat(0));
    return m;
}

inline ExactMatrix identity_matrix(std::size_t n) {
    ExactMatrix m = make_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline ExactMatrix matmul(const ExactMatrix& A, const ExactMatrix& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matrix product shape mismatch");
    ExactMatrix C = make_matrix(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Rat& aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

// Rows/cols are 0-based index lists; order is preserved.
inline ExactMatrix submatrix(const ExactMatrix& M, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
    ExactMatrix S = make_matrix(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= M.rows) throw std::invalid_argument("row index out of range");
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j] >= M.cols) throw std::invalid_argument("column index out of range");
            S.at(i, j) = M.at(rows[i], cols[j]);
        }
    }
    return S;
}

inline bool operator==(const ExactMatrix& A, const ExactMatrix& B) {
    return A.rows == B.rows && A.cols == B.cols && A.a == B.a;
}

}  // namespace kres
