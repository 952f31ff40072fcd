#pragma once

// Shared test utilities: independent oracles and seeded generators.
// Everything here is deliberately naive; the point is independence from
// the library's computation paths.

#include <random>
#include <vector>

#include "toral/linalg.hpp"
#include "toral/matrix.hpp"

namespace testutil {

using toral::Int;
using toral::IntMatrix;
using toral::IntVector;

// Cofactor-expansion determinant. Exponential; fine for n <= 6.
inline Int naive_det(const IntMatrix& M) {
    std::size_t n = M.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return M(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; j++) {
        if (M(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; r++) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; c++) {
                if (c == j)
                    continue;
                minor(r - 1, cc++) = M(r, c);
            }
        }
        Int term = M(0, j) * naive_det(minor);
        if (j % 2)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix M(r, c);
    for (std::size_t i = 0; i < r; i++)
        for (std::size_t j = 0; j < c; j++)
            M(i, j) = d(rng);
    return M;
}

// Random unimodular matrix: a product of elementary row additions and
// swaps applied to the identity, with small multipliers.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> op(0, 3);
    IntMatrix U = IntMatrix::identity(n);
    for (int s = 0; s < steps; s++) {
        int i = pick(rng), j = pick(rng);
        if (i == j)
            continue;
        switch (op(rng)) {
        case 0: { // row_i += c * row_j
            Int c = coef(rng);
            for (std::size_t k = 0; k < n; k++)
                U(i, k) += c * U(j, k);
            break;
        }
        case 1:
            U.swap_rows(i, j);
            break;
        case 2: { // col_i += c * col_j
            Int c = coef(rng);
            for (std::size_t k = 0; k < n; k++)
                U(k, i) += c * U(k, j);
            break;
        }
        default:
            U.swap_cols(i, j);
            break;
        }
    }
    return U;
}

} // namespace testutil
