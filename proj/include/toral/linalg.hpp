#pragma once

#include <optional>
#include <vector>

#include "toral/matrix.hpp"
#include "toral/poly.hpp"

namespace toral {

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMatrix& M);

// Characteristic polynomial together with the matrix coefficients of
// adj(tI - A) = sum_k adj[k] t^(n-1-k), from one Faddeev-LeVerrier pass.
struct CharData {
    PolyZ poly;                  // monic, degree n
    std::vector<IntMatrix> adj;  // n matrices, adj[0] = I
};
CharData char_data(const IntMatrix& A);
PolyZ charpoly(const IntMatrix& A);

// g(M) by Horner on matrices.
IntMatrix poly_eval_matrix(const PolyZ& g, const IntMatrix& M);

// U * M * V = D with U, V unimodular and D diagonal with a divisibility
// chain d_1 | d_2 | ... (non-negative, trailing zeros last).
struct SNFDecomposition {
    IntMatrix U, V, D;
    std::vector<Int> divisors() const;
};
SNFDecomposition snf(const IntMatrix& M);

// Exact inverse of a matrix with det = +-1.
IntMatrix inverse_unimodular(const IntMatrix& U);

// Full-rank-or-less sublattice of Z^n spanned by integer row vectors,
// held in canonical Hermite form: pivots are the rightmost nonzero
// entries, strictly increasing pivot columns, positive pivots, entries
// below each pivot reduced into [0, pivot). Two lattices are equal iff
// their basis matrices are identical.
class Lattice {
public:
    Lattice() : ambient_(0) {}

    static Lattice from_generators(const IntMatrix& gens);
    static Lattice full(std::size_t n);              // Z^n
    static Lattice scaled(std::size_t n, const Int& d); // d Z^n

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    bool full_rank() const { return rank() == ambient_; }

    bool contains(const IntVector& x) const;
    bool contains(const Lattice& other) const;
    // Writes the coefficient row c with c * basis = x when x lies in
    // the lattice.
    bool member(const IntVector& x, IntVector* coeffs = nullptr) const;

    // [Z^n : L]; errors on rank-deficient lattices.
    Int index() const;

    bool operator==(const Lattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

// Canonical Hermite form of the row space.
Lattice hnf(const IntMatrix& gens);

// Saturated left kernel {x : x M = 0} as a lattice in Z^rows(M).
Lattice int_kernel(const IntMatrix& M);

Lattice lattice_intersection(const Lattice& L1, const Lattice& L2);
Lattice lattice_sum(const Lattice& L1, const Lattice& L2);

} // namespace toral
