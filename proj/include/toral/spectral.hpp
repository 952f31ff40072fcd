#pragma once

#include "toral/linalg.hpp"
#include "toral/poly.hpp"

namespace toral {

// True iff no eigenvalue of A has modulus 1. Exact: unit-circle roots
// of the characteristic polynomial f are common roots of f and its
// reversal; the substitution x = t + 1/t reduces the decision to real
// root counting on [-2, 2]. Errors on singular A.
bool is_hyperbolic(const IntMatrix& A);

// True iff the monic f is irreducible in Z[t]. Degree-profile sieve
// modulo several primes, with an exact interpolation-based factor
// search as the deciding fallback. Rejects non-monic input.
bool is_irreducible(const PolyZ& f);

// Monic minimal polynomial of A (largest rational invariant factor of
// tI - A; integral by Gauss's lemma).
PolyZ minimal_polynomial(const IntMatrix& A);

// Monic invariant factors of tI - A over Q[t], ascending by
// divisibility, constants dropped.
std::vector<PolyZ> rational_invariant_factors(const IntMatrix& A);

// Similarity over Q decided by equality of invariant-factor lists.
bool similar_over_Q(const IntMatrix& A, const IntMatrix& B);

} // namespace toral
